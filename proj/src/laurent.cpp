// Laurent polynomials and rational functions in one indeterminate v.
#include "ht/laurent.h"

#include <algorithm>
#include <sstream>

namespace ht {

std::string to_string(const Integer& a) { return a.str(); }

std::string to_string(const Rational& a) {
  const Integer& d = boost::multiprecision::denominator(a);
  if (d == 1) return boost::multiprecision::numerator(a).str();
  return boost::multiprecision::numerator(a).str() + "/" + d.str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(Integer(s));
  Integer d(s.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in " + s);
  return Rational(Integer(s.substr(0, slash)), d);
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) c_.push_back(Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int e) {
  LaurentPoly p;
  if (c != 0) {
    p.low_ = e;
    p.c_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(int low, std::vector<Integer> c) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(c);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, Integer>& terms) {
  if (terms.empty()) return {};
  int lo = terms.begin()->first, hi = terms.rbegin()->first;
  std::vector<Integer> c(hi - lo + 1);
  for (const auto& [e, k] : terms) c[e - lo] += k;
  return from_coeffs(lo, std::move(c));
}

void LaurentPoly::normalize() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = c_.size();
  while (c_[last - 1] == 0) --last;
  if (first > 0 || last < c_.size()) {
    c_.erase(c_.begin() + last, c_.end());
    c_.erase(c_.begin(), c_.begin() + first);
  }
  low_ += static_cast<int>(first);
}

int LaurentPoly::low() const {
  if (c_.empty()) throw std::domain_error("low() of the zero polynomial");
  return low_;
}

int LaurentPoly::high() const {
  if (c_.empty()) throw std::domain_error("high() of the zero polynomial");
  return low_ + static_cast<int>(c_.size()) - 1;
}

Integer LaurentPoly::coeff(int e) const {
  if (c_.empty() || e < low_ || e >= low_ + static_cast<int>(c_.size())) return 0;
  return c_[e - low_];
}

std::map<int, Integer> LaurentPoly::terms() const {
  std::map<int, Integer> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t.emplace(low_ + static_cast<int>(i), c_[i]);
  return t;
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](const Integer& a) { return a != 0; }));
}

void LaurentPoly::add_scaled(const LaurentPoly& b, const Integer& k, int shift) {
  if (b.c_.empty() || k == 0) return;
  int blow = b.low_ + shift;
  if (c_.empty()) {
    low_ = blow;
    c_.assign(b.c_.size(), Integer(0));
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = b.c_[i] * k;
    return;
  }
  int lo = std::min(low_, blow);
  int hi = std::max(high(), blow + static_cast<int>(b.c_.size()) - 1);
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(hi - lo + 1);
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[blow - low_ + i] += b.c_[i] * k;
  normalize();
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) {
  add_scaled(b, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) {
  add_scaled(b, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& b) {
  *this = lp_mul(*this, b);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  if (k == 0) {
    c_.clear();
    low_ = 0;
  } else {
    for (auto& a : c_) a *= k;
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  if (c_.empty()) return {};
  LaurentPoly r;
  r.low_ = -high();
  r.c_.assign(c_.rbegin(), c_.rend());
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.c_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) return LaurentPoly(eval_at_one());
  std::map<int, Integer> t;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) t[(low_ + static_cast<int>(i)) * k] += c_[i];
  return from_terms(t);
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& a : c_) s += a;
  return s;
}

Integer LaurentPoly::eval_at_minus_one() const {
  Integer s = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    bool odd = ((low_ + static_cast<int>(i)) % 2) != 0;
    s += odd ? Integer(-c_[i]) : c_[i];
  }
  return s;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& a = c_[i];
    if (a == 0) continue;
    int e = low_ + static_cast<int>(i);
    Integer mag = a < 0 ? Integer(-a) : a;
    if (a < 0)
      os << '-';
    else if (!first)
      os << '+';
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, const std::string& var) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::map<int, Integer> t;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i + 1;
    while (j < s.size() && !((s[j] == '+' || s[j] == '-') && s[j - 1] != '^')) ++j;
    std::string term = s.substr(i, j - i);
    i = j;
    int sign = 1;
    if (term[0] == '+' || term[0] == '-') {
      if (term[0] == '-') sign = -1;
      term = term.substr(1);
    }
    if (term.empty()) throw std::invalid_argument("bad polynomial text: " + text);
    Integer coef = 1;
    int e = 0;
    auto vpos = term.find(var);
    if (vpos == std::string::npos) {
      coef = Integer(term);
    } else {
      std::string head = term.substr(0, vpos);
      if (!head.empty()) {
        if (head.back() != '*') throw std::invalid_argument("bad polynomial text: " + text);
        coef = Integer(head.substr(0, head.size() - 1));
      }
      std::string tail = term.substr(vpos + var.size());
      if (tail.empty())
        e = 1;
      else if (tail[0] == '^')
        e = std::stoi(tail.substr(1));
      else
        throw std::invalid_argument("bad polynomial text: " + text);
    }
    t[e] += sign * coef;
  }
  return from_terms(t);
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.low_ != b.low_) return a.low_ < b.low_;
  return a.c_ < b.c_;
}

LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
LaurentPoly operator*(LaurentPoly a, const Integer& k) { return a *= k; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Integer> c(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  }
  return LaurentPoly::from_coeffs(a.low() + b.low(), std::move(c));
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly lp_bar(const LaurentPoly& a) { return a.bar(); }

// ---------------------------------------------------------------------------
// Q[v] helpers for reduction

namespace {

using QPoly = std::vector<Rational>;  // index = exponent, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly to_qpoly(const LaurentPoly& p) {  // p must have low() == 0
  QPoly q;
  for (const auto& a : p.coeffs()) q.emplace_back(a);
  return q;
}

// Remainder of a modulo b; b nonzero.
QPoly qmod(QPoly a, const QPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  return a;
}

QPoly qdiv_exact(QPoly a, const QPoly& b) {
  QPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t off = a.size() - b.size();
    quo[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    trim(a);
  }
  if (!a.empty()) throw std::logic_error("inexact polynomial division");
  trim(quo);
  return quo;
}

QPoly qgcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = qmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

// ---------------------------------------------------------------------------
// RationalFunction

BelowValuation::BelowValuation(int requested, int valuation)
    : std::domain_error("series coefficient v^" + std::to_string(requested) +
                        " requested below the valuation " + std::to_string(valuation)),
      requested_(requested),
      valuation_(valuation) {}

RationalFunction::RationalFunction(long c) : num_(c) {}

RationalFunction::RationalFunction(const LaurentPoly& p) : num_(p) { reduce(); }

RationalFunction::RationalFunction(const LaurentPoly& num, const LaurentPoly& den)
    : num_(num), den_(den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  reduce();
}

RationalFunction RationalFunction::from_rational(const Rational& r) {
  return RationalFunction(LaurentPoly(boost::multiprecision::numerator(r)),
                          LaurentPoly(boost::multiprecision::denominator(r)));
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    shift_ = 0;
    num_ = {};
    den_ = 1;
    return;
  }
  shift_ += num_.low() - den_.low();
  LaurentPoly n = num_.shifted(-num_.low());
  LaurentPoly d = den_.shifted(-den_.low());
  QPoly qn = to_qpoly(n), qd = to_qpoly(d);
  if (qd.size() > 1) {
    QPoly g = qgcd(qn, qd);
    if (g.size() > 1) {
      qn = qdiv_exact(qn, g);
      qd = qdiv_exact(qd, g);
    }
  }
  Integer l = 1;
  for (const auto* p : {&qn, &qd})
    for (const auto& a : *p) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(a));
  std::vector<Integer> ni, di;
  Integer g = 0;
  for (const auto& a : qn) {
    ni.push_back(boost::multiprecision::numerator(Rational(a * l)));
    g = boost::multiprecision::gcd(g, ni.back());
  }
  for (const auto& a : qd) {
    di.push_back(boost::multiprecision::numerator(Rational(a * l)));
    g = boost::multiprecision::gcd(g, di.back());
  }
  if (di[0] < 0) g = -g;
  for (auto& a : ni) a /= g;
  for (auto& a : di) a /= g;
  num_ = LaurentPoly::from_coeffs(0, std::move(ni));
  den_ = LaurentPoly::from_coeffs(0, std::move(di));
}

int RationalFunction::valuation() const {
  if (is_zero()) throw std::domain_error("valuation of zero");
  return shift_;
}

bool RationalFunction::is_laurent() const { return den_.high() == 0 && den_.coeff(0) == 1; }

LaurentPoly RationalFunction::as_laurent() const {
  if (!is_laurent()) throw std::domain_error("not a Laurent polynomial: " + str());
  return num();
}

RationalFunction RationalFunction::operator+(const RationalFunction& b) const {
  return RationalFunction(num() * b.den_ + b.num() * den_, den_ * b.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& b) const {
  return RationalFunction(num() * b.den_ - b.num() * den_, den_ * b.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& b) const {
  if (is_zero() || b.is_zero()) return {};
  return RationalFunction(num() * b.num(), den_ * b.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& b) const {
  if (b.is_zero()) throw std::domain_error("division by the zero rational function");
  if (is_zero()) return {};
  return RationalFunction(num() * b.den_, den_ * b.num());
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::bar() const {
  if (is_zero()) return {};
  return RationalFunction(num().bar(), den_.bar());
}

Rational RationalFunction::series_coeff(int k) const {
  if (is_zero()) return 0;
  if (k < shift_) throw BelowValuation(k, shift_);
  return series(shift_, k).back();
}

std::vector<Rational> RationalFunction::series(int lo, int hi) const {
  std::vector<Rational> out(hi >= lo ? hi - lo + 1 : 0);
  if (is_zero() || hi < shift_) return out;
  int len = hi - shift_ + 1;
  std::vector<Rational> s(len);
  const auto& nc = num_.coeffs();
  const auto& dc = den_.coeffs();
  Rational d0(dc[0]);
  for (int i = 0; i < len; ++i) {
    Rational acc = i < static_cast<int>(nc.size()) ? Rational(nc[i]) : Rational(0);
    for (int t = 1; t <= i && t < static_cast<int>(dc.size()); ++t) acc -= Rational(dc[t]) * s[i - t];
    s[i] = acc / d0;
  }
  for (int e = std::max(lo, shift_); e <= hi; ++e) out[e - lo] = s[e - shift_];
  return out;
}

std::string RationalFunction::str() const {
  if (is_laurent()) return num().str();
  return "(" + num().str() + ")/(" + den_.str() + ")";
}

Rational series_coeff(const RationalFunction& f, int k) { return f.series_coeff(k); }

}  // namespace ht
