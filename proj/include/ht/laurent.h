// Exact arithmetic in Z[v, v^-1] and in its fraction field Q(v).
//
// LaurentPoly stores a dense coefficient run starting at the lowest exponent
// with a nonzero coefficient; both ends of the run are nonzero, and the zero
// polynomial has an empty run.  RationalFunction keeps v^k * N(v) / D(v) with
// N, D integral polynomials, N(0) != 0, D(0) > 0, N and D coprime in Q[v] and
// the combined content of N and D equal to one.  That form is unique.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace ht {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& a);
// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& a);
Rational parse_rational(const std::string& s);

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT: implicit constants are convenient in formulas
  LaurentPoly(const Integer& c);  // NOLINT

  static LaurentPoly monomial(const Integer& c, int e);
  // The indeterminate v raised to e.
  static LaurentPoly v(int e = 1) { return monomial(1, e); }
  static LaurentPoly from_coeffs(int low, std::vector<Integer> c);
  static LaurentPoly from_terms(const std::map<int, Integer>& terms);

  bool is_zero() const { return c_.empty(); }
  // Lowest and highest exponents; both require a nonzero polynomial.
  int low() const;
  int high() const;
  Integer coeff(int e) const;
  const std::vector<Integer>& coeffs() const { return c_; }
  std::map<int, Integer> terms() const;
  std::size_t num_terms() const;

  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b);
  LaurentPoly& operator*=(const Integer& k);
  // this += k * v^shift * b, without temporaries.
  void add_scaled(const LaurentPoly& b, const Integer& k, int shift = 0);
  LaurentPoly operator-() const;

  // v^i -> v^-i.
  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;
  // p(v) -> p(v^k); k may be negative.
  LaurentPoly substitute_power(int k) const;
  Integer eval_at_one() const;
  Integer eval_at_minus_one() const;

  // Canonical text form, increasing exponents: "-v^-2+3+2*v^3".
  std::string str(const std::string& var = "v") const;
  static LaurentPoly parse(const std::string& s, const std::string& var = "v");

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

 private:
  void normalize();
  int low_ = 0;
  std::vector<Integer> c_;
};

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b);
LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly operator*(LaurentPoly a, const Integer& k);

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_bar(const LaurentPoly& a);

// Raised by series_coeff when the requested exponent lies below the
// valuation of the function; the valuation is carried explicitly.
class BelowValuation : public std::domain_error {
 public:
  BelowValuation(int requested, int valuation);
  int requested() const { return requested_; }
  int valuation() const { return valuation_; }

 private:
  int requested_;
  int valuation_;
};

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c);  // NOLINT
  RationalFunction(const LaurentPoly& p);  // NOLINT
  RationalFunction(const LaurentPoly& num, const LaurentPoly& den);
  static RationalFunction from_rational(const Rational& r);

  bool is_zero() const { return num_.is_zero(); }
  // Exponent of the leading v-power; requires a nonzero function.
  int valuation() const;
  // num() / den() equals the function; den() has a positive constant term.
  LaurentPoly num() const { return num_.shifted(shift_); }
  LaurentPoly den() const { return den_; }
  bool is_laurent() const;
  LaurentPoly as_laurent() const;

  RationalFunction operator+(const RationalFunction& b) const;
  RationalFunction operator-(const RationalFunction& b) const;
  RationalFunction operator*(const RationalFunction& b) const;
  RationalFunction operator/(const RationalFunction& b) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction bar() const;

  // Coefficient of v^k in the expansion at v = 0.
  Rational series_coeff(int k) const;
  // Coefficients of v^lo .. v^hi; entries below the valuation are zero.
  std::vector<Rational> series(int lo, int hi) const;

  std::string str() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void reduce();
  int shift_ = 0;        // the power v^k pulled out of the numerator
  LaurentPoly num_;      // polynomial with nonzero constant term
  LaurentPoly den_ = 1;  // polynomial with positive constant term
};

Rational series_coeff(const RationalFunction& f, int k);

}  // namespace ht
