// Characters of the extended group W~ restricting irreducibly to W: the set of
// preferred extensions, class functions on the coset W phi, traces on the
// modules E^v and E^inf, the invariants f_E, cells of representations, the
// functions aleph_{x phi}, truncated induction and the coefficients a_{y,x}.
#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ht/cells.h"
#include "ht/chartable.h"
#include "ht/hecke.h"
#include "ht/symbols.h"

namespace ht {

using SysPtr = std::shared_ptr<const TwistedWeylSystem>;

// A function on W phi constant on twisted classes.
struct CosetClassFunction {
  SysPtr sys;
  std::vector<Rational> values;  // per twisted class

  static CosetClassFunction zero(SysPtr sys);
  Rational at(int x) const { return values[sys->twisted_classes().class_of[x]]; }
  CosetClassFunction operator+(const CosetClassFunction& b) const;
  CosetClassFunction operator-(const CosetClassFunction& b) const;
  CosetClassFunction scaled(const Rational& k) const;
  CosetClassFunction& add_scaled(const CosetClassFunction& b, const Rational& k);
  bool is_zero() const;
  friend bool operator==(const CosetClassFunction& a, const CosetClassFunction& b) {
    return a.values == b.values;
  }
};

// |W|^-1 sum_x f(x phi) g(x phi), class-wise.
Rational inner_coset(const CosetClassFunction& f, const CosetClassFunction& g);

// A representation E of W~ whose restriction E_0 to W is irreducible.
struct ExtIrr {
  std::string label;  // label of E_0
  int base = -1;      // row of E_0 in the character table
  bool preferred = false;
  // values[k][w] = tr(w phi^k, E) for 0 <= k < c.
  std::vector<std::vector<long long>> values;
  int a = -1;  // a-value of E_0, when known
  std::optional<Symbol> symbol;  // 2D: the symbol (S, T) with E = [[S, T]]

  long long dim() const { return values[0][0]; }
  long long coset_value(int w) const { return values[1][w]; }
};

// E tensor iota (phi acts by minus its action on E) and E tensor sgn.
ExtIrr iota_twist(const ExtIrr& E);
ExtIrr sign_twist(const WeylGroup& W, const ExtIrr& E);

// The function x phi -> tr(x phi, E).
CosetClassFunction coset_function(SysPtr sys, const ExtIrr& E);

// The a-value attached to a symbol of type D by the min-sum formula.
int symbol_a_value(const Symbol& s);

// The set of preferred extensions, one per eps-invariant irreducible, sorted
// by (a, label).  2A and 2E6: phi acts as w_0.  2D: [[S, T]] through
// W~ -> W_n with phi -> s_n, in the orientation with min(S * T) in T.  Other
// systems: the extension over Q with phi^r = 1, built from a left cell module
// (for even r the sign makes the first nonzero coset value positive).
std::vector<ExtIrr> preferred_extensions(SysPtr sys);

// The coset values of every eps-invariant irreducible in its explicit model,
// without the type-specific closed forms (used as a cross-check).
std::vector<ExtIrr> model_extensions(SysPtr sys);

class RepData {
 public:
  explicit RepData(SysPtr sys);

  const TwistedWeylSystem& sys() const { return *sys_; }
  SysPtr sys_ptr() const { return sys_; }
  const WeylGroup& W() const { return sys_->W(); }
  const CellData& cells() const { return *cd_; }
  const CharTable& table() const { return *table_; }
  const DaggerBasis& dagger() const { return db_; }

  // The preferred extensions with their cells (the columns of all tables).
  const std::vector<ExtIrr>& extensions() const { return ext_; }
  int find(const std::string& label) const;

  // tr(t_z phi^k, E^inf) for all z.
  std::vector<Integer> tinf(const ExtIrr& E, int k = 1) const;
  // tr(c^dagger_{x phi^k}, E^v) for all x.
  std::vector<LaurentPoly> cdagger_traces(const ExtIrr& E, int k = 1) const;
  // tr(T_{x phi^k}, E^v) for all x.
  std::vector<LaurentPoly> T_traces(const ExtIrr& E, int k = 1) const;
  // tr(h, E^v) for any element of H~.
  LaurentPoly trace_Ev(const HeckeElt& h, const ExtIrr& E) const;
  // (f_E^v, f_E^inf).
  std::pair<LaurentPoly, Rational> f_values(const ExtIrr& E) const;
  // The unique cell supporting the t-traces of E_0, and its a-value.
  std::pair<int, int> cell_of(const ExtIrr& E) const;
  int cell_of(std::size_t i) const { return ext_cell_[i]; }

  CosetClassFunction phi(const ExtIrr& E) const { return coset_function(sys_, E); }
  CosetClassFunction phi(std::size_t i) const { return coset_function(sys_, ext_[i]); }
  // Coordinates of f in the basis phi_E, E in the preferred set.
  std::vector<Rational> coordinates(const CosetClassFunction& f) const;
  // sum_{E} tr(t_x phi, E^inf) phi_E.
  CosetClassFunction aleph(int x) const;
  const std::vector<Integer>& tinf_preferred(std::size_t i) const { return tinf1_[i]; }

  // y with cell(y) strictly below cell(x).
  std::vector<int> strictly_below(int x) const;
  // a_{y,x} as exact rational functions (solve over Q(v)).
  std::map<int, RationalFunction> a_coeffs_exact(int x) const;
  // The expansion coefficients a_{y,x;j}, j = 0..order, by a power-series
  // solve over Z of the same system.
  std::map<int, std::vector<Integer>> a_coeffs_series(int x, int order) const;
  // aleph_{x phi} from leading coefficients of c^dagger-traces corrected by
  // the a_{y,x}.
  CosetClassFunction aleph_from_leading(int x) const;

 private:
  SysPtr sys_;
  std::shared_ptr<const CellData> cd_;
  std::shared_ptr<const CharTable> table_;
  DaggerBasis db_;
  std::vector<ExtIrr> ext_;
  std::vector<int> ext_cell_;
  std::vector<std::vector<Integer>> tinf1_;
};

std::shared_ptr<const RepData> rep_data(SysPtr sys);

// Restriction data for an eps-stable parabolic subsystem.
class Induction {
 public:
  Induction(std::shared_ptr<const RepData> big, GenSet I);

  const RepData& big() const { return *big_; }
  const RepData& small() const { return *small_; }
  const Subsystem& sub() const { return sub_; }
  GenSet I() const { return I_; }

  // (1/|W_I|) sum_{x in W_I} tr(x phi, E') tr(x phi, E): the multiplicity of
  // E' in E minus that of E' tensor iota.
  Rational signed_mult(std::size_t e_small, std::size_t e_big) const { return signed_[e_small][e_big]; }
  // dim Hom_{W_I}(E'|W_I, E|W_I).
  Integer restriction_mult(std::size_t e_small, std::size_t e_big) const { return unsigned_[e_small][e_big]; }

  // J(phi_{E'}) = sum_{E : a_E = a_E'} <E', E> phi_E, extended linearly.
  CosetClassFunction j_induce(const CosetClassFunction& f) const;
  // 'J(phi_E) = sum_{E' : a_E' = a_E} <E', E> phi_E'.
  CosetClassFunction j_restrict(const CosetClassFunction& f) const;
  // The restriction of a class function on W phi to W_I phi.
  CosetClassFunction restrict(const CosetClassFunction& f) const;

 private:
  std::shared_ptr<const RepData> big_, small_;
  GenSet I_;
  Subsystem sub_;
  std::vector<std::vector<Rational>> signed_;
  std::vector<std::vector<Integer>> unsigned_;
};

}  // namespace ht
