// Symbols, bar-symbols, linear forms on V_M, arrangements and counting.
#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "ht/symbols.h"

using namespace ht;

namespace {

// Independent count of pairs of subsets by brute force over bitmasks.
std::size_t brute_X(int n, int m) {
  int top = n + m;
  std::size_t count = 0;
  for (unsigned s = 0; s < (1u << top); ++s) {
    if (std::popcount(s) != m) continue;
    for (unsigned t = 0; t < (1u << top); ++t) {
      if (std::popcount(t) != m || s == t) continue;
      int sum = 0;
      for (int i = 0; i < top; ++i) sum += i * ((s >> i & 1) + (t >> i & 1));
      if (sum == n + m * m - m) ++count;
    }
  }
  return count;
}

std::size_t brute_barX(int n, int m) {
  int top = n + m;
  std::size_t count = 0;
  std::vector<int> digit(top, 0);
  // Ternary enumeration: 0 = neither, 1 = M, 2 = N.
  for (;;) {
    int msize = 0, nsize = 0, sum = 0;
    for (int i = 0; i < top; ++i) {
      if (digit[i] == 1) ++msize, sum += i;
      if (digit[i] == 2) ++nsize, sum += 2 * i;
    }
    if (msize > 0 && msize + 2 * nsize == 2 * m && sum == n + m * m - m) ++count;
    int i = 0;
    while (i < top && digit[i] == 2) digit[i++] = 0;
    if (i == top) break;
    ++digit[i];
  }
  return count;
}

Integer catalan(int k) {
  Integer c = 1;
  for (int i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

// All linear forms on V_M with eta(M) = 1, evaluated on every even subset,
// by brute force over assignments on the basis of singletons differences.
std::vector<std::vector<int>> all_forms_on(const Subset& M, const std::vector<Subset>& evens) {
  std::vector<std::vector<int>> out;
  for (const auto& e : enum_eta(M)) {
    std::vector<int> vals;
    for (const auto& E : evens) vals.push_back(e(E));
    out.push_back(vals);
  }
  return out;
}

std::vector<Subset> even_subsets(const Subset& M) {
  std::vector<Subset> out;
  for (unsigned mask = 0; mask < (1u << M.size()); ++mask) {
    if (std::popcount(mask) % 2) continue;
    Subset E;
    for (std::size_t i = 0; i < M.size(); ++i)
      if (mask >> i & 1) E.push_back(M[i]);
    out.push_back(E);
  }
  return out;
}

}  // namespace

TEST_CASE("symbols of rank two") {
  std::vector<Symbol> want = {{{0}, {2}}, {{2}, {0}}};
  CHECK(enum_X(2, 1) == want);
  auto b2 = enum_barX(2);
  std::set<BarSymbol> bars(b2.begin(), b2.end());
  CHECK(bars == std::set<BarSymbol>{{{1, 3}, {0}}, {{0, 2}, {1}}});
  CHECK(zeta(Symbol{{2}, {0}}) == BarSymbol{{0, 2}, {}});
  auto f = fiber(BarSymbol{{0, 2}, {1}});
  REQUIRE(f.size() == 2);
  CHECK(f[0] == Symbol{{0, 1}, {1, 2}});
  CHECK(f[1] == Symbol{{1, 2}, {0, 1}});
}

TEST_CASE("enumeration agrees with brute force") {
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) {
      CHECK(enum_X(n, m).size() == brute_X(n, m));
      CHECK(enum_barX(n, m).size() == brute_barX(n, m));
    }
  auto b4 = enum_barX(4);
  CHECK(b4.size() == 7);
  CHECK(std::count_if(b4.begin(), b4.end(), [](const BarSymbol& b) { return b.M.size() == 2; }) == 6);
  CHECK(std::find(b4.begin(), b4.end(), BarSymbol{{2, 3, 4, 5}, {0, 1}}) != b4.end());
}

TEST_CASE("shift maps") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= n + 1; ++m) {
      std::set<Symbol> img;
      for (const auto& s : enum_X(n, m)) img.insert(shift(s));
      CHECK(img.size() == enum_X(n, m).size());  // injective
      if (m >= n) CHECK(img.size() == enum_X(n, m + 1).size());
      std::set<BarSymbol> bimg;
      for (const auto& b : enum_barX(n, m)) bimg.insert(shift(b));
      CHECK(bimg.size() == enum_barX(n, m).size());
      if (m >= n) CHECK(bimg.size() == enum_barX(n, m + 1).size());
    }
}

TEST_CASE("zeta and its fibers") {
  for (int n = 2; n <= 5; ++n) {
    std::size_t total = 0;
    for (const auto& b : enum_barX(n)) {
      auto f = fiber(b);
      Integer binom = 1;
      int k = static_cast<int>(b.M.size());
      for (int i = 0; i < k / 2; ++i) binom = binom * (k - i) / (i + 1);
      CHECK(Integer(static_cast<long>(f.size())) == binom);
      for (const auto& s : f) CHECK(zeta(s) == b);
      total += f.size();
    }
    CHECK(total == enum_X(n, n).size());
  }
}

TEST_CASE("bipartitions of symbols") {
  CHECK(bipartition_of_symbol(Symbol{{2}, {0}}) == Bipartition{{2}, {}});
  for (const auto& s : enum_X(4, 4)) {
    auto b = bipartition_of_symbol(s);
    CHECK(partition_size(b.first) + partition_size(b.second) == 4);
    CHECK(b.first != b.second);
    CHECK(bipartition_of_symbol(shift(s)) == b);
    CHECK(symbol_of_bipartition(b, 4) == s);
  }
  // Every bipartition with alpha != beta comes from exactly one symbol.
  std::size_t nondeg = 0;
  for (const auto& b : bipartitions(4)) nondeg += b.first != b.second;
  CHECK(enum_X(4, 4).size() == nondeg);
  CHECK(nondeg == 18);
}

TEST_CASE("t_M and the sharp map") {
  Subset M = {0, 2};
  CHECK(t_map(M) == std::vector<int>{0, 1});
  CHECK(sharp(M, {2}).empty());
  CHECK(sharp(M, {0}) == Subset{0, 2});
  for (Subset M6 : {Subset{0, 1, 2, 3}, Subset{1, 3, 4, 7, 8, 9}}) {
    std::set<Subset> img;
    for (const auto& H : half_subsets(M6)) {
      auto s = sharp(M6, H);
      CHECK(s.size() % 2 == 0);
      img.insert(s);
    }
    CHECK(img.size() == half_subsets(M6).size());
  }
}

TEST_CASE("linear forms on V_M") {
  CHECK(enum_eta({3, 5}).size() == 1);
  CHECK(enum_eta({0, 1, 2, 3, 4, 5}).size() == 16);
  Subset M = {1, 4, 6, 9};
  auto etas = enum_eta(M);
  REQUIRE(etas.size() == 4);
  // eta_a, eta_b, eta_c, eta_d by their values on {x,y} and {y,z}.
  int want[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  for (int i = 0; i < 4; ++i) {
    CHECK(etas[i]({1, 4}) == want[i][0]);
    CHECK(etas[i]({4, 6}) == want[i][1]);
  }
  // Each form is linear with eta(M) = 1, and the forms are distinct.
  for (Subset MM : {Subset{1, 4, 6, 9}, Subset{0, 1, 2, 3, 4, 5}}) {
    auto evens = even_subsets(MM);
    auto forms = all_forms_on(MM, evens);
    std::set<std::vector<int>> distinct(forms.begin(), forms.end());
    CHECK(distinct.size() == forms.size());
    for (const auto& e : enum_eta(MM)) {
      CHECK(e(MM) == 1);
      CHECK(e({}) == 0);
      for (const auto& a : evens)
        for (const auto& b : evens) CHECK(e(sym_diff(a, b)) == (e(a) ^ e(b)));
      CHECK(parse_eta(MM, e.str()) == e);
    }
  }
}

TEST_CASE("admissible arrangements") {
  auto six = admissible_arrangements({0, 1, 2, 3, 4, 5});
  std::set<Arrangement> got(six.begin(), six.end());
  std::set<Arrangement> printed = {
      {{{0, 1}, {2, 3}, {4, 5}}}, {{{0, 5}, {1, 2}, {3, 4}}}, {{{0, 3}, {1, 2}, {4, 5}}},
      {{{0, 1}, {2, 5}, {3, 4}}}, {{{0, 5}, {1, 4}, {2, 3}}}};
  CHECK(got == printed);
  auto four = admissible_arrangements({0, 1, 2, 3});
  CHECK(four == std::vector<Arrangement>{{{{0, 1}, {2, 3}}}, {{{0, 3}, {1, 2}}}});
  CHECK_FALSE(is_admissible({0, 1, 2, 3}, {{{0, 2}, {1, 3}}}));
  CHECK(admissible_arrangements({4, 7}).size() == 1);
  for (int k = 1; k <= 5; ++k) {
    Subset M;
    for (int i = 0; i < 2 * k; ++i) M.push_back(3 * i + 1);
    auto arr = admissible_arrangements(M);
    CHECK(Integer(static_cast<long>(arr.size())) == catalan(k));
    for (const auto& a : arr) {
      CHECK(is_admissible(M, a));
      auto span = cc_span(a);
      CHECK(span.size() == (1u << k));
      CHECK(std::find(span.begin(), span.end(), M) != span.end());
    }
  }
}

TEST_CASE("expansion of coset characters in the half-sums") {
  for (const BarSymbol& b : {BarSymbol{{2, 3, 4, 5}, {0, 1}}, BarSymbol{{0, 1, 2, 3, 4, 5}, {}}}) {
    auto arrangements = admissible_arrangements(b.M);
    std::size_t k = b.M.size() / 2;
    for (const auto& H : half_subsets(b.M)) {
      bool found = false;
      for (const auto& phi : arrangements)
        for (unsigned psi = 0; psi < (1u << k) && !found; ++psi) {
          if (arrangement_H(b.M, phi, psi) != H) continue;
          found = true;
          SymbolCombination sum;
          Rational scale = Rational(1, 1 << (k - 1));
          for (unsigned marked = 0; marked < (1u << k); ++marked) {
            if (std::popcount(marked) % 2 == 0) continue;
            Rational sign = std::popcount(marked & psi) % 2 ? -1 : 1;
            for (auto [s, q] : c_function(b, phi, marked)) sum.emplace_back(s, scale * sign * q);
          }
          CHECK(normalize(sum) == normalize({{fiber_symbol(b, H), 1}}));
        }
      CHECK(found);
    }
  }
}

TEST_CASE("inner products of half-sums count linear forms") {
  for (const BarSymbol& b : {BarSymbol{{2, 3, 4, 5}, {0, 1}}, BarSymbol{{0, 1, 2, 3, 4, 5}, {}}}) {
    auto arrangements = admissible_arrangements(b.M);
    std::size_t k = b.M.size() / 2;
    auto etas = enum_eta(b.M);
    auto restricts = [&](const EtaForm& e, const Arrangement& phi, unsigned xi) {
      for (std::size_t i = 0; i < k; ++i)
        if (e({phi.pairs[i].first, phi.pairs[i].second}) != static_cast<int>(xi >> i & 1)) return false;
      return true;
    };
    for (const auto& p1 : arrangements)
      for (const auto& p2 : arrangements)
        for (unsigned x1 = 0; x1 < (1u << k); ++x1) {
          if (std::popcount(x1) % 2 == 0) continue;
          for (unsigned x2 = 0; x2 < (1u << k); ++x2) {
            if (std::popcount(x2) % 2 == 0) continue;
            long count = std::count_if(etas.begin(), etas.end(),
                                       [&](const EtaForm& e) { return restricts(e, p1, x1) && restricts(e, p2, x2); });
            CHECK(symbol_inner(c_function(b, p1, x1), c_function(b, p2, x2)) == count);
          }
        }
  }
}

TEST_CASE("object counts") {
  CHECK(p2(0) == 1);
  CHECK(p2(1) == 2);
  CHECK(p2(2) == 5);
  CHECK(p2(3) == 10);
  CHECK(object_count(2) == 2);
  CHECK(object_count(3) == 5);
  CHECK(object_count(4) == 10);
  for (int n = 2; n <= 12; ++n) CHECK(object_count(n) == object_count_formula(n));
}
