// Preferred extensions, coset class functions, traces on E^v and E^inf,
// aleph functions, truncated induction and the coefficients a_{y,x}.
#include "ht/reps.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace ht {

// ---------------------------------------------------------------------------
// Coset class functions

CosetClassFunction CosetClassFunction::zero(SysPtr sys) {
  CosetClassFunction f;
  f.values.assign(sys->twisted_classes().size(), Rational(0));
  f.sys = std::move(sys);
  return f;
}

CosetClassFunction CosetClassFunction::operator+(const CosetClassFunction& b) const {
  CosetClassFunction r = *this;
  return r.add_scaled(b, 1);
}

CosetClassFunction CosetClassFunction::operator-(const CosetClassFunction& b) const {
  CosetClassFunction r = *this;
  return r.add_scaled(b, -1);
}

CosetClassFunction CosetClassFunction::scaled(const Rational& k) const {
  CosetClassFunction r = *this;
  for (auto& v : r.values) v *= k;
  return r;
}

CosetClassFunction& CosetClassFunction::add_scaled(const CosetClassFunction& b, const Rational& k) {
  if (b.sys.get() != sys.get()) throw std::invalid_argument("class functions on different systems");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += k * b.values[i];
  return *this;
}

bool CosetClassFunction::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& q) { return q == 0; });
}

Rational inner_coset(const CosetClassFunction& f, const CosetClassFunction& g) {
  if (f.sys.get() != g.sys.get()) throw std::invalid_argument("class functions on different systems");
  const auto& cls = f.sys->twisted_classes();
  Rational s = 0;
  for (std::size_t c = 0; c < cls.size(); ++c)
    s += Rational(static_cast<long long>(cls.members[c].size())) * f.values[c] * g.values[c];
  return s / Rational(static_cast<long long>(f.sys->W().size()));
}

// ---------------------------------------------------------------------------
// Extensions

ExtIrr iota_twist(const ExtIrr& E) {
  ExtIrr r = E;
  r.preferred = false;
  for (std::size_t k = 1; k < r.values.size(); k += 2)
    for (auto& x : r.values[k]) x = -x;
  return r;
}

ExtIrr sign_twist(const WeylGroup& W, const ExtIrr& E) {
  ExtIrr r = E;
  r.preferred = false;
  r.label = E.label + "*sgn";
  r.a = -1;
  r.symbol.reset();
  for (auto& row : r.values)
    for (std::size_t w = 0; w < row.size(); ++w) row[w] *= W.sign(static_cast<int>(w));
  return r;
}

CosetClassFunction coset_function(SysPtr sys, const ExtIrr& E) {
  auto f = CosetClassFunction::zero(sys);
  const auto& cls = sys->twisted_classes();
  for (std::size_t c = 0; c < cls.size(); ++c) f.values[c] = Rational(E.values[1][cls.rep(c)]);
  return f;
}

int symbol_a_value(const Symbol& s) {
  std::vector<int> z = s.S;
  z.insert(z.end(), s.T.begin(), s.T.end());
  std::sort(z.begin(), z.end());
  int n = static_cast<int>(z.size());
  int a = 0;
  // In sorted order min(z_i, z_j) = z_i for i < j.
  for (int i = 0; i < n; ++i) a += z[i] * (n - 1 - i);
  for (int k = 1; k < s.m(); ++k) a -= k * (2 * k - 1);
  return a;
}

namespace {

void sort_extensions(std::vector<ExtIrr>& v) {
  std::stable_sort(v.begin(), v.end(), [](const ExtIrr& x, const ExtIrr& y) {
    return x.a != y.a ? x.a < y.a : x.label < y.label;
  });
}

// phi acting as w_0 (2A and 2E6).
std::vector<ExtIrr> w0_extensions(const SysPtr& sys, const CharTable& t) {
  const WeylGroup& W = sys->W();
  std::size_t n = W.size();
  int w0 = W.longest();
  std::vector<int> cls1(n);
  for (std::size_t w = 0; w < n; ++w) cls1[w] = t.class_of[W.mul(static_cast<int>(w), w0)];
  std::vector<Partition> parts;
  if (sys->family() == Family::TwistedA) parts = partitions(sys->n());
  std::vector<ExtIrr> out;
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    if (!t.eps_invariant(*sys, i)) throw std::logic_error("character not eps-invariant");
    ExtIrr E;
    E.label = t.labels[i];
    E.base = static_cast<int>(i);
    E.preferred = true;
    E.values.assign(sys->c(), std::vector<long long>(n));
    for (std::size_t w = 0; w < n; ++w) {
      E.values[0][w] = t.chi[i][t.class_of[w]];
      E.values[1][w] = t.chi[i][cls1[w]];
    }
    if (sys->family() == Family::TwistedA) {
      E.a = partition_n(parts[i]);
    } else {
      auto pos = E.label.find('_');
      E.a = std::stoi(E.label.substr(pos + 1));
    }
    out.push_back(std::move(E));
  }
  return out;
}

// [[S, T]] through W~ -> W_n, phi -> s_n (2D).
std::vector<ExtIrr> type_d_extensions(const SysPtr& sys, const CharTable& t) {
  const WeylGroup& W = sys->W();
  int n = sys->n();
  std::map<std::pair<Partition, Partition>, std::map<Bipartition, Integer>> memo;
  auto chars = [&](const SignedPerm& p) -> const std::map<Bipartition, Integer>& {
    auto ct = signed_cycle_type(p);
    auto it = memo.find(ct);
    if (it == memo.end()) it = memo.emplace(ct, wn_characters_at(ct.first, ct.second)).first;
    return it->second;
  };
  const auto& conj = sys->conjugacy_classes();
  const auto& tw = sys->twisted_classes();
  std::vector<ExtIrr> out;
  for (const auto& ab : bipartitions(n)) {
    if (!(ab.second < ab.first)) continue;  // nondegenerate, each unordered pair once
    std::vector<long long> res(t.num_classes());
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      res[c] = static_cast<long long>(chars(signed_perm_of(*sys, t.reps[c])).at(ab));
    auto row = std::find(t.chi.begin(), t.chi.end(), res);
    if (row == t.chi.end()) throw std::logic_error("restriction from W_n not found in the table");
    auto [pref, sign] = preferred_symbol(symbol_of_bipartition(ab, n));
    (void)sign;
    Bipartition oab = bipartition_of_symbol(pref);
    ExtIrr E;
    E.base = static_cast<int>(row - t.chi.begin());
    E.label = t.labels[E.base];
    E.preferred = true;
    E.symbol = pref;
    E.a = symbol_a_value(pref);
    std::vector<long long> v0(conj.size()), v1(tw.size());
    for (std::size_t c = 0; c < conj.size(); ++c)
      v0[c] = static_cast<long long>(chars(signed_perm_of(*sys, conj.rep(c))).at(oab));
    for (std::size_t c = 0; c < tw.size(); ++c)
      v1[c] = static_cast<long long>(chars(coset_signed_perm(*sys, tw.rep(c))).at(oab));
    E.values.assign(sys->c(), std::vector<long long>(W.size()));
    for (std::size_t w = 0; w < W.size(); ++w) {
      E.values[0][w] = v0[conj.class_of[w]];
      E.values[1][w] = v1[tw.class_of[w]];
    }
    out.push_back(std::move(E));
  }
  return out;
}

using QMat = Mat<Rational>;

QMat mat_mul(const QMat& a, const QMat& b) { return matmul(a, b); }

Rational trace_of(const QMat& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

// Matrix of s on the left cell module of `cell` at v = 1, in the basis c_x:
// s c_x = c_x if sx < x, and -c_x + c_sx + sum_{z < x, sz < z} mu(z, x) c_z
// otherwise (terms outside the cell dropped).
QMat cell_generator(const KLTable& kl, const std::vector<int>& cell, const std::vector<int>& pos, int s) {
  const WeylGroup& W = kl.W();
  std::size_t m = cell.size();
  QMat r(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t j = 0; j < m; ++j) {
    int x = cell[j];
    int sx = W.lmul(s, x);
    if (W.length(sx) < W.length(x)) {
      r[j][j] = 1;
      continue;
    }
    r[j][j] = -1;
    if (pos[sx] >= 0) r[pos[sx]][j] += 1;
    for (const auto& [z, mu] : kl.mu_below(x)) {
      if (pos[z] < 0) continue;
      if (W.length(W.lmul(s, z)) < W.length(z)) r[pos[z]][j] += mu;
    }
  }
  return r;
}

// rho(w) for every w from the generator matrices (w = s w', s the first letter).
std::vector<QMat> all_matrices(const WeylGroup& W, const std::vector<QMat>& gens) {
  std::size_t d = gens.front().size();
  std::vector<QMat> out(W.size());
  out[0] = identity_matrix<Rational>(d);
  for (std::size_t w = 1; w < W.size(); ++w) {
    int s = W.word(static_cast<int>(w)).front();
    out[w] = mat_mul(gens[s], out[W.lmul(s, static_cast<int>(w))]);
  }
  return out;
}

QMat word_matrix(const std::vector<QMat>& gens, const std::vector<int>& word, std::size_t d) {
  QMat r = identity_matrix<Rational>(d);
  for (int s : word) r = mat_mul(r, gens[s]);
  return r;
}

Integer as_integer(const Rational& q) {
  if (denominator(q) != 1) throw std::logic_error("expected an integer, got " + to_string(q));
  return numerator(q);
}

// The extension of character i over Q with phi^r = 1, from an irreducible
// constituent of multiplicity one in a left cell module and an intertwiner.
ExtIrr model_extension(const SysPtr& sys, const CellData& cd, const CharTable& t, std::size_t i) {
  const WeylGroup& W = sys->W();
  const KLTable& kl = cd.kl();
  std::size_t n = W.size();
  int rank = W.rank();
  ExtIrr E;
  E.label = t.labels[i];
  E.base = static_cast<int>(i);
  E.preferred = true;
  E.values.assign(sys->c(), std::vector<long long>(n));
  bool trivial_eps = true;
  for (int s = 0; s < rank; ++s) trivial_eps = trivial_eps && sys->eps_gen(s) == s;
  if (trivial_eps) {
    for (int k = 0; k < sys->c(); ++k)
      for (std::size_t w = 0; w < n; ++w) E.values[k][w] = t.value(i, static_cast<int>(w));
    return E;
  }
  // A left cell containing chi_i exactly once.
  std::vector<QMat> gens;
  std::vector<int> cell;
  for (const auto& lc : cd.left_cells()) {
    std::vector<int> pos(n, -1);
    for (std::size_t j = 0; j < lc.size(); ++j) pos[lc[j]] = static_cast<int>(j);
    std::vector<QMat> g;
    for (int s = 0; s < rank; ++s) g.push_back(cell_generator(kl, lc, pos, s));
    Rational mult = 0;
    for (std::size_t c = 0; c < t.num_classes(); ++c)
      mult += Rational(t.sizes[c]) * trace_of(word_matrix(g, W.word(t.reps[c]), lc.size())) * Rational(t.chi[i][c]);
    mult /= Rational(static_cast<long long>(n));
    if (mult == 1) {
      gens = std::move(g);
      cell = lc;
      break;
    }
  }
  if (gens.empty()) throw std::logic_error("no left cell with multiplicity one for " + E.label);
  std::size_t m = cell.size();
  auto rho = all_matrices(W, gens);
  // The isotypic projection sum_w chi(w) rho(w); its image is one copy.
  QMat P(m, std::vector<Rational>(m, Rational(0)));
  for (std::size_t w = 0; w < n; ++w) {
    Rational c = t.value(i, static_cast<int>(w));
    if (c == 0) continue;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        if (rho[w][a][b] != 0) P[a][b] += c * rho[w][a][b];
  }
  std::size_t d = static_cast<std::size_t>(t.dim(i));
  std::vector<std::size_t> cols;
  {
    RowReducer<Rational> rr(m);
    for (std::size_t b = 0; b < m && cols.size() < d; ++b) {
      std::vector<Rational> col(m);
      for (std::size_t a = 0; a < m; ++a) col[a] = P[a][b];
      if (rr.add(col)) cols.push_back(b);
    }
  }
  if (cols.size() != d) throw std::logic_error("isotypic image has the wrong dimension");
  QMat B(m, std::vector<Rational>(d));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < d; ++j) B[a][j] = P[a][cols[j]];
  std::vector<std::size_t> rows;
  {
    RowReducer<Rational> rr(d);
    for (std::size_t a = 0; a < m && rows.size() < d; ++a)
      if (rr.add(B[a])) rows.push_back(a);
  }
  QMat BR(d, std::vector<Rational>(d));
  for (std::size_t j = 0; j < d; ++j) BR[j] = B[rows[j]];
  QMat BRinv = *inverse(BR);
  std::vector<QMat> sub;
  for (int s = 0; s < rank; ++s) {
    QMat img = mat_mul(gens[s], B);
    QMat part(d);
    for (std::size_t j = 0; j < d; ++j) part[j] = img[rows[j]];
    sub.push_back(mat_mul(BRinv, part));
  }
  // Intertwiner A rho(s) = rho(eps(s)) A.
  QMat eqs;
  for (int s = 0; s < rank; ++s) {
    const QMat& X = sub[s];
    const QMat& Y = sub[sys->eps_gen(s)];
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        std::vector<Rational> row(d * d, Rational(0));
        for (std::size_t k = 0; k < d; ++k) {
          row[a * d + k] += X[k][b];
          row[k * d + b] -= Y[a][k];
        }
        eqs.push_back(std::move(row));
      }
  }
  auto ns = nullspace(eqs, d * d);
  if (ns.size() != 1) throw std::logic_error("intertwiner is not unique up to scalars");
  QMat A(d, std::vector<Rational>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) A[a][b] = ns[0][a * d + b];
  int r = sys->r();
  QMat Ar = identity_matrix<Rational>(d);
  for (int k = 0; k < r; ++k) Ar = mat_mul(Ar, A);
  Rational lambda = Ar[0][0];
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      if (Ar[a][b] != (a == b ? lambda : Rational(0))) throw std::logic_error("A^r is not scalar");
  auto mu = rational_root(lambda, r);
  if (!mu) throw std::logic_error("no rational normalization of the intertwiner");
  for (auto& row : A)
    for (auto& q : row) q /= *mu;
  auto rho_sub = all_matrices(W, sub);
  auto coset_trace = [&](const QMat& Ak, std::size_t w) {
    Rational s = 0;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) s += rho_sub[w][a][b] * Ak[b][a];
    return s;
  };
  if (r % 2 == 0) {
    for (std::size_t w = 0; w < n; ++w) {
      Rational v = coset_trace(A, w);
      if (v == 0) continue;
      if (v < 0)
        for (auto& row : A)
          for (auto& q : row) q = -q;
      break;
    }
  }
  QMat Ak = identity_matrix<Rational>(d);
  for (int k = 0; k < sys->c(); ++k) {
    for (std::size_t w = 0; w < n; ++w)
      E.values[k][w] = static_cast<long long>(as_integer(coset_trace(Ak, w)));
    Ak = mat_mul(Ak, A);
  }
  for (std::size_t w = 0; w < n; ++w)
    if (E.values[0][w] != t.value(i, static_cast<int>(w))) throw std::logic_error("model character mismatch");
  return E;
}

// a-value of E_0 from the support of its t-traces.
int cell_from_traces(const CellData& cd, const std::vector<Integer>& tr0) {
  int cell = -1;
  for (std::size_t z = 0; z < tr0.size(); ++z) {
    if (tr0[z] == 0) continue;
    int c = cd.cell_of(static_cast<int>(z));
    if (cell >= 0 && c != cell) throw std::logic_error("t-traces supported on two cells");
    cell = c;
  }
  if (cell < 0) throw std::logic_error("t-traces vanish identically");
  return cell;
}

std::vector<Integer> tinf_values(const CellData& cd, const std::vector<long long>& vals) {
  const auto& inv = cd.phi1_inverse();
  std::vector<Integer> out(inv.size());
  for (std::size_t z = 0; z < inv.size(); ++z) {
    Rational s = 0;
    for (std::size_t w = 0; w < inv[z].size(); ++w)
      if (vals[w] != 0 && inv[z][w] != 0) s += inv[z][w] * Rational(vals[w]);
    out[z] = as_integer(s);
  }
  return out;
}

}  // namespace

std::vector<ExtIrr> model_extensions(SysPtr sys) {
  auto t = char_table(sys);
  auto cd = shared_cell_data(sys->W_ptr());
  std::vector<ExtIrr> out;
  for (std::size_t i = 0; i < t->num_irr(); ++i) {
    if (!t->eps_invariant(*sys, i)) continue;
    ExtIrr E = model_extension(sys, *cd, *t, i);
    E.a = cd->cell_a(cell_from_traces(*cd, tinf_values(*cd, E.values[0])));
    out.push_back(std::move(E));
  }
  sort_extensions(out);
  return out;
}

std::vector<ExtIrr> preferred_extensions(SysPtr sys) {
  auto t = char_table(sys);
  std::vector<ExtIrr> out;
  switch (sys->family()) {
    case Family::TwistedA:
    case Family::TwistedE6:
      out = w0_extensions(sys, *t);
      break;
    case Family::TwistedD:
      out = type_d_extensions(sys, *t);
      break;
    default:
      return model_extensions(sys);
  }
  sort_extensions(out);
  return out;
}

// ---------------------------------------------------------------------------
// RepData

RepData::RepData(SysPtr sys) : sys_(std::move(sys)) {
  cd_ = shared_cell_data(sys_->W_ptr());
  table_ = char_table(sys_);
  db_ = dagger_basis(cd_->kl());
  ext_ = preferred_extensions(sys_);
  for (auto& E : ext_) {
    auto [cell, a] = cell_of(E);
    if (E.a >= 0 && E.a != a) throw std::logic_error("a-value of " + E.label + " disagrees with its cell");
    E.a = a;
    (void)cell;
  }
  sort_extensions(ext_);
  for (const auto& E : ext_) {
    ext_cell_.push_back(cell_of(E).first);
    tinf1_.push_back(tinf(E, 1));
  }
}

int RepData::find(const std::string& label) const {
  for (std::size_t i = 0; i < ext_.size(); ++i)
    if (ext_[i].label == label) return static_cast<int>(i);
  throw std::out_of_range("no preferred extension " + label);
}

std::vector<Integer> RepData::tinf(const ExtIrr& E, int k) const {
  return tinf_values(*cd_, E.values[((k % sys_->c()) + sys_->c()) % sys_->c()]);
}

std::vector<LaurentPoly> RepData::cdagger_traces(const ExtIrr& E, int k) const {
  auto t = tinf(E, k);
  std::vector<LaurentPoly> out(W().size());
  for (std::size_t x = 0; x < out.size(); ++x)
    for (const auto& [z, p] : cd_->phi(static_cast<int>(x)))
      if (t[z] != 0) out[x].add_scaled(p, t[z]);
  return out;
}

std::vector<LaurentPoly> RepData::T_traces(const ExtIrr& E, int k) const {
  auto c = cdagger_traces(E, k);
  std::vector<LaurentPoly> out(W().size());
  for (std::size_t w = 0; w < out.size(); ++w)
    for (const auto& [x, q] : db_.T_in_c[w]) out[w] += q * c[x];
  return out;
}

LaurentPoly RepData::trace_Ev(const HeckeElt& h, const ExtIrr& E) const {
  std::map<int, std::vector<LaurentPoly>> by_k;
  LaurentPoly s;
  for (const auto& [w, a] : h.terms()) {
    auto it = by_k.find(w.k);
    if (it == by_k.end()) it = by_k.emplace(w.k, T_traces(E, w.k)).first;
    s += a * it->second[w.w];
  }
  return s;
}

std::pair<LaurentPoly, Rational> RepData::f_values(const ExtIrr& E) const {
  auto tt = T_traces(E, 0);
  LaurentPoly sum;
  for (const auto& p : tt) sum += p * p;
  Integer d = E.dim();
  std::map<int, Integer> terms;
  for (const auto& [e, c] : sum.terms()) {
    if (c % d != 0) throw std::logic_error("f_E^v has a non-integral coefficient");
    terms[e] = c / d;
  }
  auto t0 = tinf(E, 0);
  Integer s = 0;
  for (const auto& x : t0) s += x * x;
  return {LaurentPoly::from_terms(terms), Rational(s) / Rational(d)};
}

std::pair<int, int> RepData::cell_of(const ExtIrr& E) const {
  int c = cell_from_traces(*cd_, tinf(E, 0));
  return {c, cd_->cell_a(c)};
}

std::vector<Rational> RepData::coordinates(const CosetClassFunction& f) const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < ext_.size(); ++i) out.push_back(inner_coset(f, phi(i)));
  return out;
}

CosetClassFunction RepData::aleph(int x) const {
  auto f = CosetClassFunction::zero(sys_);
  for (std::size_t i = 0; i < ext_.size(); ++i)
    if (tinf1_[i][x] != 0) f.add_scaled(phi(i), Rational(tinf1_[i][x]));
  return f;
}

std::vector<int> RepData::strictly_below(int x) const {
  int cx = cd_->cell_of(x);
  std::vector<int> out;
  for (std::size_t y = 0; y < W().size(); ++y) {
    int cy = cd_->cell_of(static_cast<int>(y));
    if (cy != cx && cd_->cell_leq(cy, cx)) out.push_back(static_cast<int>(y));
  }
  return out;
}

namespace {

// Phi(c_y^dagger)_z for y, z in `below` and the right hand side for x.
struct ASystem {
  std::vector<int> below;
  std::vector<std::map<int, LaurentPoly>> rows;  // rows[z-index][y-index]
  std::vector<LaurentPoly> rhs;
};

ASystem a_system(const CellData& cd, const std::vector<int>& below, int x) {
  const WeylGroup& W = cd.W();
  ASystem s;
  s.below = below;
  std::vector<int> idx(W.size(), -1);
  for (std::size_t i = 0; i < below.size(); ++i) idx[below[i]] = static_cast<int>(i);
  s.rows.resize(below.size());
  s.rhs.resize(below.size());
  for (std::size_t j = 0; j < below.size(); ++j) {
    int y = below[j];
    for (const auto& [z, p] : cd.phi(y))
      if (idx[z] >= 0) s.rows[idx[z]][static_cast<int>(j)] = p * Integer(W.sign(y));
  }
  for (const auto& [z, p] : cd.phi(x))
    if (idx[z] >= 0) s.rhs[idx[z]] = p * Integer(W.sign(x));
  return s;
}

}  // namespace

std::map<int, RationalFunction> RepData::a_coeffs_exact(int x) const {
  auto below = strictly_below(x);
  auto s = a_system(*cd_, below, x);
  std::size_t n = below.size();
  Mat<RationalFunction> a(n, std::vector<RationalFunction>(n, RationalFunction(0)));
  std::vector<RationalFunction> b(n);
  for (std::size_t z = 0; z < n; ++z) {
    for (const auto& [j, p] : s.rows[z]) a[z][j] = RationalFunction(p);
    b[z] = RationalFunction(s.rhs[z]);
  }
  if (n > 0 && rank(a) != n) throw std::logic_error("singular system for a_{y,x}");
  auto sol = solve(a, b);
  if (!sol) throw std::logic_error("inconsistent system for a_{y,x}");
  std::map<int, RationalFunction> out;
  for (std::size_t j = 0; j < n; ++j) out[below[j]] = (*sol)[j];
  return out;
}

std::map<int, std::vector<Integer>> RepData::a_coeffs_series(int x, int order) const {
  auto below = strictly_below(x);
  auto s = a_system(*cd_, below, x);
  std::size_t n = below.size();
  // Row z times v^{a(z)}: entries in Z[v] whose constant part is diagonal.
  std::vector<std::vector<std::pair<int, LaurentPoly>>> rows(n);
  std::vector<LaurentPoly> rhs(n);
  for (std::size_t z = 0; z < n; ++z) {
    int az = cd_->a(below[z]);
    for (const auto& [j, p] : s.rows[z]) {
      LaurentPoly q = p.shifted(az);
      if (q.low() < 0) throw std::logic_error("row of the a-system below v^0");
      Integer c0 = q.coeff(0);
      if (static_cast<std::size_t>(j) == z ? c0 != W().sign(below[z]) : c0 != 0)
        throw std::logic_error("constant part of the a-system is not the sign diagonal");
      rows[z].emplace_back(j, q);
    }
    rhs[z] = s.rhs[z].shifted(az);
    if (!rhs[z].is_zero() && rhs[z].low() < 1) throw std::logic_error("right hand side of the a-system not in vZ[v]");
  }
  std::vector<std::vector<Integer>> sol(order + 1, std::vector<Integer>(n, 0));
  for (int k = 0; k <= order; ++k) {
    for (std::size_t z = 0; z < n; ++z) {
      Integer acc = rhs[z].is_zero() ? Integer(0) : rhs[z].coeff(k);
      for (const auto& [j, q] : rows[z]) {
        int hi = std::min(k, q.high());
        for (int i = 1; i <= hi; ++i) {
          const Integer& c = sol[k - i][j];
          if (c != 0) acc -= q.coeff(i) * c;
        }
      }
      sol[k][z] = acc * W().sign(below[z]);
    }
  }
  std::map<int, std::vector<Integer>> out;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Integer> c(order + 1);
    for (int k = 0; k <= order; ++k) c[k] = sol[k][j];
    out[below[j]] = std::move(c);
  }
  return out;
}

CosetClassFunction RepData::aleph_from_leading(int x) const {
  int ax = cd_->a(x);
  int amax = 0;
  for (std::size_t c = 0; c < cd_->cells().size(); ++c) amax = std::max(amax, cd_->cell_a(static_cast<int>(c)));
  int order = amax - ax;
  auto coeffs = a_coeffs_series(x, order);
  auto f = CosetClassFunction::zero(sys_);
  for (std::size_t i = 0; i < ext_.size(); ++i) {
    auto cdg = cdagger_traces(ext_[i], 1);
    Integer s = cdg[x].coeff(-ax);
    for (const auto& [y, c] : coeffs) {
      int sg = W().sign(x) * W().sign(y);
      for (int j = 1; j <= order; ++j)
        if (c[j] != 0) s -= sg * c[j] * cdg[y].coeff(-ax - j);
    }
    if (s != 0) f.add_scaled(phi(i), Rational(s));
  }
  return f;
}

std::shared_ptr<const RepData> rep_data(SysPtr sys) {
  static std::mutex mu;
  static std::map<const TwistedWeylSystem*, std::pair<std::weak_ptr<const TwistedWeylSystem>, std::shared_ptr<const RepData>>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(sys.get());
    if (it != cache.end() && !it->second.first.expired()) return it->second.second;
  }
  auto out = std::make_shared<const RepData>(sys);
  std::lock_guard<std::mutex> lock(mu);
  cache[sys.get()] = {sys, out};
  return out;
}

// ---------------------------------------------------------------------------
// Induction

Induction::Induction(std::shared_ptr<const RepData> big, GenSet I)
    : big_(std::move(big)), I_(I), sub_(parabolic_subsystem(big_->sys(), I)) {
  small_ = rep_data(sub_.sys);
  const auto& es = small_->extensions();
  const auto& eb = big_->extensions();
  Rational order(static_cast<long long>(sub_.embed.size()));
  signed_.assign(es.size(), std::vector<Rational>(eb.size()));
  unsigned_.assign(es.size(), std::vector<Integer>(eb.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < eb.size(); ++j) {
      Integer s1 = 0, s0 = 0;
      for (std::size_t x = 0; x < sub_.embed.size(); ++x) {
        int y = sub_.embed[x];
        s1 += Integer(es[i].values[1][x]) * eb[j].values[1][y];
        s0 += Integer(es[i].values[0][x]) * eb[j].values[0][y];
      }
      signed_[i][j] = Rational(s1) / order;
      unsigned_[i][j] = as_integer(Rational(s0) / order);
    }
}

CosetClassFunction Induction::j_induce(const CosetClassFunction& f) const {
  auto c = small_->coordinates(f);
  const auto& es = small_->extensions();
  const auto& eb = big_->extensions();
  auto out = CosetClassFunction::zero(big_->sys_ptr());
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < eb.size(); ++j)
      if (eb[j].a == es[i].a && signed_[i][j] != 0) out.add_scaled(big_->phi(j), c[i] * signed_[i][j]);
  }
  return out;
}

CosetClassFunction Induction::j_restrict(const CosetClassFunction& f) const {
  auto c = big_->coordinates(f);
  const auto& es = small_->extensions();
  const auto& eb = big_->extensions();
  auto out = CosetClassFunction::zero(small_->sys_ptr());
  for (std::size_t j = 0; j < eb.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < es.size(); ++i)
      if (eb[j].a == es[i].a && signed_[i][j] != 0) out.add_scaled(small_->phi(i), c[j] * signed_[i][j]);
  }
  return out;
}

CosetClassFunction Induction::restrict(const CosetClassFunction& f) const {
  auto out = CosetClassFunction::zero(small_->sys_ptr());
  const auto& cls = small_->sys().twisted_classes();
  for (std::size_t c = 0; c < cls.size(); ++c) out.values[c] = f.at(sub_.embed[cls.rep(c)]);
  return out;
}

}  // namespace ht
