// Verification suites over Hecke algebras, cells, traces, induction and
// symbols, each identity reported as one CheckResult.
#include "ht/suites.h"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ht {

namespace {

// Accumulates one identity over many instances; keeps the first failure.
class Tally {
 public:
  explicit Tally(std::string name) : name_(std::move(name)) {}
  template <class F>
  void check(bool ok, F&& describe) {
    ++count_;
    if (ok) return;
    if (fails_++ == 0) first_ = describe();
  }
  void check(bool ok) {
    check(ok, [] { return std::string(); });
  }
  CheckResult result() const {
    std::ostringstream d;
    if (fails_ == 0) {
      d << count_ << " instances";
    } else {
      d << fails_ << " of " << count_ << " instances fail";
      if (!first_.empty()) d << "; first: " << first_;
    }
    return {name_, fails_ == 0 && count_ > 0, d.str()};
  }

 private:
  std::string name_;
  long count_ = 0, fails_ = 0;
  std::string first_;
};

std::string num(long long x) { return std::to_string(x); }

// Canonical basis c_x built from c_{x'} c_s (x = x's) by subtracting the c_y,
// y < x, whose T_y coefficient has a constant term.  Uses Hecke
// multiplication only, never the KL recursion.
class CanonicalSolver {
 public:
  explicit CanonicalSolver(SysPtr sys) : sys_(std::move(sys)) {}

  const HeckeElt& c(int x) {
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
    const WeylGroup& W = sys_->W();
    HeckeElt out = HeckeElt::one(sys_);
    if (x != 0) {
      int s = W.word(x).back();
      int xp = W.rmul(x, s);
      out = c(xp).times_Ts(s) + c(xp).scaled(LaurentPoly::v(-1));
      for (int y = x - 1; y >= 0; --y) {
        LaurentPoly a = out.coeff({y, 0});
        if (a.is_zero() || a.coeff(0) == 0) continue;
        out = out - c(y).scaled(LaurentPoly(a.coeff(0)));
      }
    }
    return memo_.emplace(x, std::move(out)).first->second;
  }

 private:
  SysPtr sys_;
  std::map<int, HeckeElt> memo_;
};

std::vector<std::vector<LaurentPoly>> T_table(const RepData& rd, const ExtIrr& E) {
  std::vector<std::vector<LaurentPoly>> out;
  for (int k = 0; k < rd.sys().c(); ++k) out.push_back(rd.T_traces(E, k));
  return out;
}

LaurentPoly trace_by_table(const HeckeElt& h, const std::vector<std::vector<LaurentPoly>>& tab) {
  LaurentPoly s;
  for (const auto& [w, a] : h.terms()) s += a * tab[w.k][w.w];
  return s;
}

std::string prefixed(const std::string& label, const std::string& what) { return label + ": " + what; }

}  // namespace

std::vector<CheckResult> hecke_checks(SysPtr sys) {
  const WeylGroup& W = sys->W();
  const std::string& L = sys->label();
  auto kl = shared_kl_table(sys->W_ptr());
  int n = static_cast<int>(W.size());

  Tally bar(prefixed(L, "bar(c_w) = c_w for all w")), oracle(prefixed(L, "c_w agrees with the bar-invariance solver"));
  CanonicalSolver solver(sys);
  for (int x = 0; x < n; ++x) {
    for (int k = 0; k < sys->c(); ++k) {
      HeckeElt cx = c_elt(sys, *kl, {x, k});
      bar.check(bar_h(cx) == cx, [&] { return sys->ext_string({x, k}); });
      if (k == 0) oracle.check(cx == solver.c(x), [&] { return W.word_string(x); });
    }
  }

  Tally inv(prefixed(L, "KL inversion for all pairs"));
  int w0 = W.longest();
  for (int x = 0; x < n; ++x)
    for (int w = 0; w < n; ++w) {
      LaurentPoly sum;
      for (int z = 0; z < n; ++z) {
        const LaurentPoly& a = kl->P(x, z);
        if (a.is_zero()) continue;
        const LaurentPoly& b = kl->P(W.mul(w0, w), W.mul(w0, z));
        if (b.is_zero()) continue;
        LaurentPoly t = a * b;
        sum += (W.length(x) + W.length(z)) % 2 ? -t : t;
      }
      inv.check(sum == LaurentPoly(x == w ? 1 : 0),
                [&] { return W.word_string(x) + " " + W.word_string(w) + " -> " + sum.str("q"); });
    }

  std::vector<CheckResult> out = {bar.result(), oracle.result(), inv.result()};
  if (W.rank() == 3 && W.cartan() == cartan_matrix('A', 3)) {
    int y = W.parse_word("s2"), x = W.parse_word("s2.s1.s3.s2");
    LaurentPoly want = LaurentPoly::parse("1+q", "q");
    // P_{y,x} read off the solver: the T_y coefficient of c_x is
    // v^{l(y)-l(x)} P_{y,x}(v^2).
    LaurentPoly cy = solver.c(x).coeff({y, 0});
    LaurentPoly from_solver;
    for (const auto& [e, c] : cy.terms()) from_solver += LaurentPoly::monomial(c, (e + W.length(x) - W.length(y)) / 2);
    out.push_back({prefixed(L, "P_{s2, s2s1s3s2} = 1+q"), kl->P(y, x) == want && from_solver == want,
                   "table " + kl->P(y, x).str("q") + ", solver " + from_solver.str("q")});
  }
  return out;
}

std::vector<CheckResult> cell_checks(SysPtr sys) {
  const WeylGroup& W = sys->W();
  const std::string& L = sys->label();
  auto cd = shared_cell_data(sys->W_ptr());
  int n = static_cast<int>(W.size());
  std::vector<CheckResult> out;

  Tally cst(prefixed(L, "a constant on two-sided cells"));
  for (const auto& c : cd->cells())
    for (int z : c) cst.check(cd->a(z) == cd->a(c[0]), [&] { return W.word_string(z); });
  out.push_back(cst.result());
  out.push_back({prefixed(L, "a(e) = 0 and a(w0) = l(w0)"), cd->a(0) == 0 && cd->a(W.longest()) == W.length(W.longest()),
                 "a(e) = " + num(cd->a(0)) + ", a(w0) = " + num(cd->a(W.longest()))});

  Tally dist(prefixed(L, "one distinguished involution per left cell"));
  std::vector<int> per_left(cd->left_cells().size(), 0);
  for (int d : cd->distinguished()) {
    dist.check(W.mul(d, d) == 0, [&] { return W.word_string(d) + " is not an involution"; });
    ++per_left[cd->left_cell_of(d)];
  }
  for (std::size_t i = 0; i < per_left.size(); ++i)
    dist.check(per_left[i] == 1, [&] { return "left cell " + num(i) + " has " + num(per_left[i]); });
  out.push_back(dist.result());

  // t_x t_y vanishes unless x, y lie in one cell and then lies in that cell,
  // so associativity need only be checked on triples inside a cell.
  Tally supp(prefixed(L, "t_x t_y supported in the common cell of x, y"));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      bool ok = true;
      for (auto [z, g] : cd->t_mul(x, y))
        ok = ok && g != 0 && cd->cell_of(x) == cd->cell_of(y) && cd->cell_of(z) == cd->cell_of(x);
      supp.check(ok, [&] { return W.word_string(x) + " " + W.word_string(y); });
    }
  out.push_back(supp.result());

  Tally assoc(prefixed(L, "J associative"));
  std::vector<long long> acc(n, 0), acc2(n, 0);
  for (const auto& c : cd->cells())
    for (int x : c)
      for (int y : c)
        for (int z : c) {
          std::fill(acc.begin(), acc.end(), 0);
          std::fill(acc2.begin(), acc2.end(), 0);
          for (auto [u, g] : cd->t_mul(x, y))
            for (auto [w, h] : cd->t_mul(u, z)) acc[w] += static_cast<long long>(g) * h;
          for (auto [u, g] : cd->t_mul(y, z))
            for (auto [w, h] : cd->t_mul(x, u)) acc2[w] += static_cast<long long>(g) * h;
          assoc.check(acc == acc2, [&] { return W.word_string(x) + " " + W.word_string(y) + " " + W.word_string(z); });
        }
  out.push_back(assoc.result());

  Tally unit(prefixed(L, "sum of t_d over distinguished d is a two-sided unit"));
  for (int x = 0; x < n; ++x) {
    std::map<int, long long> left, right;
    for (int d : cd->distinguished()) {
      for (auto [z, g] : cd->t_mul(d, x)) left[z] += g;
      for (auto [z, g] : cd->t_mul(x, d)) right[z] += g;
    }
    std::erase_if(left, [](const auto& p) { return p.second == 0; });
    std::erase_if(right, [](const auto& p) { return p.second == 0; });
    std::map<int, long long> want = {{x, 1}};
    unit.check(left == want && right == want, [&] { return W.word_string(x); });
  }
  out.push_back(unit.result());
  return out;
}

CheckResult eps_stable_cell_count(int n) {
  auto sys = build_system("2D", n);
  auto cd = shared_cell_data(sys->W_ptr());
  std::size_t cells = eps_stable_cells(*sys, *cd).size(), bars = enum_barX(n).size();
  return {"2D" + num(n) + ": eps-stable two-sided cells = |bar X_n|", cells == bars,
          num(static_cast<long long>(cells)) + " cells, " + num(static_cast<long long>(bars)) + " bar-symbols"};
}

std::vector<CheckResult> trace_checks(const RepData& rd) {
  auto sys = rd.sys_ptr();
  const WeylGroup& W = rd.W();
  const std::string& L = sys->label();
  const auto& ext = rd.extensions();
  std::size_t n = W.size();

  Tally at_one(prefixed(L, "tr(T_w, E^v) at v = 1 is tr(w, E)")), inv(prefixed(L, "tr(T_{w^-1}, E^v) = tr(T_w, E^v)")),
      tinv(prefixed(L, "tr(T_w^-1, E^v) = bar tr(T_{w^-1}, E^v)")), bar(prefixed(L, "tr(bar h, E^v) = bar tr(h, E^v)")),
      dag(prefixed(L, "tr(T_w, (E^dagger)^v) = (-1)^l(w) bar tr(T_w, E^v)")),
      fdef(prefixed(L, "f_E^v and f_E^inf from the sums of squares over W")),
      orth_v(prefixed(L, "orthogonality of tr(T_{x phi}, E^v) on the coset")),
      orth_1(prefixed(L, "orthogonality of tr(x phi, E) on the coset")),
      lead_c(prefixed(L, "leading coefficient of tr(c^dagger_{x phi}, E^v) is tr(t_x phi, E^inf)")),
      lead_T(prefixed(L, "leading coefficient of tr(T_{x phi}, E^v) is sgn(x) tr(t_x phi, E^inf)")),
      fexp(prefixed(L, "f_E^v = f_E^inf v^(-2a_E) + higher powers")),
      orth_t(prefixed(L, "orthogonality of tr(t_x phi, E^inf) on the coset")),
      stable(prefixed(L, "eps(c_E) = c_E")), aleph(prefixed(L, "sum_x tr(t_x phi, E^inf) aleph_{x phi} = f_E^inf dim E phi_E")),
      lead(prefixed(L, "aleph_{x phi} from leading coefficients and the a_{y,x}"));

  std::vector<std::vector<LaurentPoly>> t1;
  std::vector<std::vector<Integer>> tinf1;
  for (std::size_t i = 0; i < ext.size(); ++i) {
    const ExtIrr& E = ext[i];
    auto who = [&](std::size_t x, int k = 1) { return E.label + " at " + sys->ext_string({static_cast<int>(x), k}); };
    auto tab = T_table(rd, E);
    auto dual = T_table(rd, sign_twist(W, E));
    for (int k = 0; k < sys->c(); ++k)
      for (std::size_t x = 0; x < n; ++x) {
        ExtElt w{static_cast<int>(x), k};
        ExtElt winv{sys->eps_power(W.inverse(w.w), sys->c() - k), (sys->c() - k) % sys->c()};
        at_one.check(tab[k][x].eval_at_one() == E.values[k][x], [&] { return who(x, k); });
        inv.check(sys->ext_mul(w, winv) == ExtElt{0, 0} && tab[winv.k][winv.w] == tab[k][x], [&] { return who(x, k); });
        tinv.check(trace_by_table(T_inverse(sys, w), tab) == tab[winv.k][winv.w].bar(), [&] { return who(x, k); });
        bar.check(trace_by_table(bar_h(HeckeElt::T(sys, w)), tab) == tab[k][x].bar(), [&] { return who(x, k); });
        dag.check(dual[k][x] == tab[k][x].bar() * Integer(W.sign(w.w)), [&] { return who(x, k); });
      }

    auto [fv, fi] = rd.f_values(E);
    LaurentPoly sq;
    for (std::size_t x = 0; x < n; ++x) sq += tab[0][x] * tab[0][x];
    Rational sqi = 0;
    for (const Integer& t : rd.tinf(E, 0)) sqi += Rational(t * t);
    fdef.check(sq == fv * Integer(E.dim()) && sqi == fi * Rational(E.dim()) &&
                   fv.eval_at_one() * Integer(E.dim()) == Integer(static_cast<long long>(n)),
               [&] { return E.label; });
    fexp.check(!fv.is_zero() && fv.low() == -2 * E.a && Rational(fv.coeff(-2 * E.a)) == fi, [&] { return E.label; });

    auto cdg = rd.cdagger_traces(E, 1);
    auto ti = rd.tinf(E, 1);
    for (std::size_t x = 0; x < n; ++x) {
      lead_c.check((cdg[x].is_zero() || cdg[x].low() >= -E.a) && cdg[x].coeff(-E.a) == ti[x], [&] { return who(x); });
      lead_T.check((tab[1][x].is_zero() || tab[1][x].low() >= -E.a) &&
                       tab[1][x].coeff(-E.a) == ti[x] * W.sign(static_cast<int>(x)),
                   [&] { return who(x); });
    }

    const auto& cell = rd.cells().cells()[rd.cell_of(i)];
    bool st = true;
    for (int z : cell) st = st && rd.cells().cell_of(sys->eps(z)) == rd.cell_of(i);
    stable.check(st, [&] { return E.label; });

    t1.push_back(tab[1]);
    tinf1.push_back(ti);
  }

  for (std::size_t i = 0; i < ext.size(); ++i) {
    auto [fv, fi] = rd.f_values(ext[i]);
    for (std::size_t j = 0; j < ext.size(); ++j) {
      LaurentPoly s;
      Integer st = 0;
      for (std::size_t x = 0; x < n; ++x) {
        s += t1[i][x] * t1[j][x];
        st += tinf1[i][x] * tinf1[j][x];
      }
      auto pair = [&] { return ext[i].label + ", " + ext[j].label; };
      orth_v.check(s == (i == j ? fv * Integer(ext[i].dim()) : LaurentPoly()), pair);
      orth_t.check(Rational(st) == (i == j ? fi * Rational(ext[i].dim()) : Rational(0)), pair);
      orth_1.check(inner_coset(rd.phi(i), rd.phi(j)) == Rational(i == j ? 1 : 0), pair);
    }
  }

  std::vector<CosetClassFunction> al;
  for (std::size_t x = 0; x < n; ++x) al.push_back(rd.aleph(static_cast<int>(x)));
  for (std::size_t i = 0; i < ext.size(); ++i) {
    auto s = CosetClassFunction::zero(sys);
    for (std::size_t x = 0; x < n; ++x) s.add_scaled(al[x], Rational(tinf1[i][x]));
    auto [fv, fi] = rd.f_values(ext[i]);
    aleph.check(s == rd.phi(i).scaled(fi * Rational(ext[i].dim())), [&] { return ext[i].label; });
  }
  for (std::size_t x = 0; x < n; ++x)
    lead.check(rd.aleph_from_leading(static_cast<int>(x)) == al[x], [&] { return W.word_string(static_cast<int>(x)); });

  std::vector<CheckResult> out;
  for (const Tally* t : {&at_one, &inv, &tinv, &bar, &dag, &fdef, &orth_v, &orth_1, &lead_c, &lead_T, &fexp, &orth_t,
                         &stable, &aleph, &lead})
    out.push_back(t->result());
  return out;
}

std::vector<CheckResult> induction_checks(std::shared_ptr<const RepData> big) {
  const auto& sys = big->sys();
  const std::string& L = sys.label();
  Tally dT(prefixed(L, "tr(T_{x phi}, E^v) = sum_E' <E', E> tr(T_{x phi}, E'^v) on W_I")),
      dt(prefixed(L, "tr(t_x phi, E^inf) = sum over a_E' = a_E of <E', E> tr(t_x phi, E'^inf) on W_I")),
      aineq(prefixed(L, "E' in E|W_I implies a_E' <= a_E")),
      below(prefixed(L, "E' in E|W_I implies c_E below the cell containing c_E'")),
      equal(prefixed(L, "E' in E|W_I with a_E' = a_E implies c_E is the cell containing c_E'")),
      jal(prefixed(L, "J(aleph^I_{x phi}) = aleph_{x phi}"));
  int subsets = 0;
  for (GenSet I : sys.eps_stable_proper_subsets()) {
    if (I == 0) continue;
    ++subsets;
    Induction ind(big, I);
    const auto& small = ind.small();
    const auto& sub = ind.sub();
    const auto& eb = big->extensions();
    const auto& es = small.extensions();
    std::vector<std::vector<LaurentPoly>> tb, ts;
    for (const auto& E : eb) tb.push_back(big->T_traces(E, 1));
    for (const auto& E : es) ts.push_back(small.T_traces(E, 1));
    for (std::size_t j = 0; j < eb.size(); ++j) {
      for (std::size_t x = 0; x < sub.embed.size(); ++x) {
        int y = sub.embed[x];
        LaurentPoly sumT;
        Rational sumt = 0;
        bool integral = true;
        for (std::size_t i = 0; i < es.size(); ++i) {
          Rational m = ind.signed_mult(i, j);
          integral = integral && denominator(m) == 1;
          sumT += ts[i][x] * numerator(m);
          if (es[i].a == eb[j].a) sumt += m * Rational(small.tinf_preferred(i)[x]);
        }
        auto who = [&] { return "I = " + num(I) + ", " + eb[j].label + " at " + sys.W().word_string(y); };
        dT.check(integral && sumT == tb[j][y], who);
        dt.check(sumt == Rational(big->tinf_preferred(j)[y]), who);
      }
      for (std::size_t i = 0; i < es.size(); ++i) {
        if (ind.restriction_mult(i, j) == 0) continue;
        auto who = [&] { return "I = " + num(I) + ", " + es[i].label + " in " + eb[j].label; };
        int cprime = small.cell_of(i);
        int c = big->cells().cell_of(sub.embed[small.cells().cells()[cprime][0]]);
        aineq.check(es[i].a <= eb[j].a, who);
        below.check(big->cells().cell_leq(big->cell_of(j), c), who);
        if (es[i].a == eb[j].a) equal.check(big->cell_of(j) == c, who);
      }
    }
    for (std::size_t x = 0; x < sub.embed.size(); ++x)
      jal.check(ind.j_induce(small.aleph(static_cast<int>(x))) == big->aleph(sub.embed[x]),
                [&] { return "I = " + num(I); });
  }
  if (subsets == 0) return {{prefixed(L, "induction"), true, "no eps-stable proper parabolic"}};
  std::vector<CheckResult> out;
  for (const Tally* t : {&dT, &dt, &aineq, &below, &equal, &jal}) out.push_back(t->result());
  return out;
}

CheckResult arrangement_counting(const BarSymbol& b) {
  auto arrangements = admissible_arrangements(b.M);
  std::size_t k = b.M.size() / 2;
  auto etas = enum_eta(b.M);
  auto restricts = [&](const EtaForm& e, const Arrangement& phi, unsigned xi) {
    for (std::size_t i = 0; i < k; ++i)
      if (e({phi.pairs[i].first, phi.pairs[i].second}) != static_cast<int>(xi >> i & 1)) return false;
    return true;
  };
  Tally t("half-sum inner products count linear forms on " + bar_symbol_string(b));
  for (const auto& p1 : arrangements)
    for (const auto& p2 : arrangements)
      for (unsigned x1 = 0; x1 < (1u << k); ++x1) {
        if (std::popcount(x1) % 2 == 0) continue;
        for (unsigned x2 = 0; x2 < (1u << k); ++x2) {
          if (std::popcount(x2) % 2 == 0) continue;
          long count = std::count_if(etas.begin(), etas.end(),
                                     [&](const EtaForm& e) { return restricts(e, p1, x1) && restricts(e, p2, x2); });
          Rational ip = symbol_inner(c_function(b, p1, x1), c_function(b, p2, x2));
          t.check(ip == Rational(count), [&] {
            return arrangement_string(p1) + " " + arrangement_string(p2) + ": " + to_string(ip) + " vs " + num(count);
          });
        }
      }
  return t.result();
}

std::vector<CheckResult> symbol_checks(int nmax) {
  std::vector<CheckResult> out;
  auto six = admissible_arrangements({0, 1, 2, 3, 4, 5});
  std::set<Arrangement> got(six.begin(), six.end());
  std::set<Arrangement> want = {{{{0, 1}, {2, 3}, {4, 5}}}, {{{0, 5}, {1, 2}, {3, 4}}}, {{{0, 3}, {1, 2}, {4, 5}}},
                                {{{0, 1}, {2, 5}, {3, 4}}}, {{{0, 5}, {1, 4}, {2, 3}}}};
  out.push_back({"admissible arrangements of {0,...,5}", got == want && six.size() == 5,
                 num(static_cast<long long>(six.size())) + " arrangements"});
  Tally cnt("sum over bar X_n of 2^(|M|-2) = sum over odd s of p_2(n - s^2)");
  for (int n = 2; n <= nmax; ++n) {
    Integer a = object_count(n), b = object_count_formula(n);
    cnt.check(a == b, [&] { return "n = " + num(n) + ": " + a.str() + " vs " + b.str(); });
  }
  out.push_back(cnt.result());
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"hecke", "cells", "traces", "induction", "symbols", "classify"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const std::string& family, int n, bool heavy) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw std::invalid_argument("unknown suite: " + suite);
  if (suite == "symbols") {
    auto out = symbol_checks(n > 0 ? n : 12);
    out.push_back(arrangement_counting({{0, 1, 2, 3}, {}}));
    out.push_back(arrangement_counting({{2, 3, 4, 5}, {0, 1}}));
    out.push_back(arrangement_counting({{0, 1, 2, 3, 4, 5}, {}}));
    return out;
  }
  auto sys = build_system(family, n);
  bool e6 = sys->W().size() > 50000;
  if (suite == "classify") {
    auto t = classify(family, n);
    VerifyOptions opt;
    if (!e6 || heavy) opt.rep = rep_data(sys);
    return verify_table(t, opt);
  }
  if (e6 && !heavy) throw std::invalid_argument("the " + suite + " suite on E6 needs --enable-e6-cells");
  if (suite == "hecke") return hecke_checks(sys);
  if (suite == "cells") {
    auto out = cell_checks(sys);
    if (sys->family() == Family::TwistedD) out.push_back(eps_stable_cell_count(sys->n()));
    return out;
  }
  auto rd = rep_data(sys);
  if (suite == "traces") return trace_checks(*rd);
  return induction_checks(rd);
}

bool all_pass(const std::vector<CheckResult>& r) {
  return std::all_of(r.begin(), r.end(), [](const CheckResult& c) { return c.pass; });
}

}  // namespace ht
