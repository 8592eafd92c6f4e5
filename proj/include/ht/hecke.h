// The extended Hecke algebra over A = Z[v, v^-1] in the T-basis, its bar and
// dagger involutions, Kazhdan-Lusztig polynomials and the bases c_w, c~_w.
#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ht/laurent.h"
#include "ht/weyl.h"

namespace ht {

// Kazhdan-Lusztig polynomials P_{y,x}, stored as polynomials in q = v^2
// (a LaurentPoly whose variable is read as q), and the mu-coefficients.
class KLTable {
 public:
  explicit KLTable(std::shared_ptr<const WeylGroup> W, std::size_t max_order = 2000);

  const WeylGroup& W() const { return *w_; }
  std::shared_ptr<const WeylGroup> W_ptr() const { return w_; }
  // Zero unless y <= x in the Bruhat order.
  const LaurentPoly& P(int y, int x) const;
  bool leq(int y, int x) const { return !P(y, x).is_zero(); }
  // mu(z, x) for z < x, zero when l(x) - l(z) is even.
  int mu(int z, int x) const;
  // Pairs (z, mu(z, x)) with z < x and mu nonzero, z increasing.
  const std::vector<std::pair<int, int>>& mu_below(int x) const { return mu_below_[x]; }

 private:
  std::shared_ptr<const WeylGroup> w_;
  std::vector<std::vector<LaurentPoly>> p_;  // p_[x][y] for y <= x in the global order
  std::vector<std::vector<std::pair<int, int>>> mu_below_;
};

// An element of H~: for each power phi^k present, a dense coefficient vector
// over W (the coefficient of T_{x phi^k}).
class HeckeElt {
 public:
  HeckeElt() = default;
  explicit HeckeElt(std::shared_ptr<const TwistedWeylSystem> sys) : sys_(std::move(sys)) {}
  static HeckeElt T(std::shared_ptr<const TwistedWeylSystem> sys, ExtElt w, const LaurentPoly& a = 1);
  static HeckeElt one(std::shared_ptr<const TwistedWeylSystem> sys) { return T(std::move(sys), {0, 0}); }

  const TwistedWeylSystem& sys() const { return *sys_; }
  std::shared_ptr<const TwistedWeylSystem> sys_ptr() const { return sys_; }
  LaurentPoly coeff(ExtElt w) const;
  void add_term(ExtElt w, const LaurentPoly& a);
  // Nonzero terms in the order (k, x).
  std::vector<std::pair<ExtElt, LaurentPoly>> terms() const;
  bool is_zero() const;

  HeckeElt operator+(const HeckeElt& b) const;
  HeckeElt operator-(const HeckeElt& b) const;
  HeckeElt operator*(const HeckeElt& b) const;
  HeckeElt scaled(const LaurentPoly& a) const;
  friend bool operator==(const HeckeElt& a, const HeckeElt& b);

  // Right multiplication by T_s (s a generator) or by T_s^-1.
  HeckeElt times_Ts(int s) const;
  HeckeElt times_Ts_inv(int s) const;

  std::string str() const;

 private:
  void check_same(const HeckeElt& b) const;
  std::shared_ptr<const TwistedWeylSystem> sys_;
  std::map<int, std::vector<LaurentPoly>> parts_;
};

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b);
HeckeElt bar_h(const HeckeElt& h);
HeckeElt dagger(const HeckeElt& h);
// T_w^-1 for w in W~.
HeckeElt T_inverse(std::shared_ptr<const TwistedWeylSystem> sys, ExtElt w);

// Right multiplication of a dense W-vector by T_s, in place into `out`.
void right_mul_Ts(const WeylGroup& W, const std::vector<LaurentPoly>& in, int s, std::vector<LaurentPoly>& out);

LaurentPoly kl_polynomial(const KLTable& kl, int y, int x);  // throws unless y <= x
HeckeElt c_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w);
HeckeElt ctilde_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w);
// c_w^dagger by its closed formula.
HeckeElt c_dagger_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w);

// The coefficient matrix of c_x^dagger in the T-basis (untwisted part) and
// its inverse: T_w = sum_x Q[w][x] c_x^dagger.  Both are triangular in the
// global order.
struct DaggerBasis {
  std::vector<std::vector<std::pair<int, LaurentPoly>>> c_in_T;  // c_in_T[x] = (y, coeff) pairs
  std::vector<std::vector<std::pair<int, LaurentPoly>>> T_in_c;  // T_in_c[w] = (x, Q_{x,w}) pairs
};
DaggerBasis dagger_basis(const KLTable& kl);

// Expansion of an element of H (no phi part) in the c-basis, by peeling the
// unitriangular change of basis from the top of the global order.
std::map<int, LaurentPoly> to_c_basis(const KLTable& kl, const HeckeElt& h);
// r_{x,y}^z for all z, computed from the T-basis product c_x c_y.
std::map<int, LaurentPoly> r_constants(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, int x,
                                       int y);

}  // namespace ht
