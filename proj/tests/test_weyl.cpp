// Weyl groups, diagram automorphisms, twisted classes and anisotropy.
#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "doctest.h"
#include "ht/weyl.h"

using namespace ht;

namespace {

// Subword oracle: y <= x iff some subword of the reduced word of x is a
// (not necessarily reduced) word for y.  Exponential, fine for tiny groups.
bool subword_leq(const WeylGroup& W, int y, int x) {
  const auto& word = W.word(x);
  std::size_t k = word.size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t(1) << i)) sub.push_back(word[i]);
    if (W.from_word(sub) == y) return true;
  }
  return false;
}

// Twisted-conjugacy oracle via full multiplication: the orbit of w under
// x -> y x eps(y)^-1 for all y in W.
std::set<int> twisted_orbit(const TwistedWeylSystem& sys, int w) {
  const WeylGroup& W = sys.W();
  std::set<int> out;
  for (std::size_t y = 0; y < W.size(); ++y) {
    int yi = static_cast<int>(y);
    out.insert(W.mul(W.mul(yi, w), W.inverse(sys.eps(yi))));
  }
  return out;
}

// Brute-force anisotropy from the definition: iterate over every proper
// eps-stable I and every element of W_I.
std::vector<bool> brute_anisotropic(const TwistedWeylSystem& sys) {
  const auto& tc = sys.twisted_classes();
  std::vector<bool> aniso(tc.size(), true);
  for (GenSet I : sys.eps_stable_proper_subsets())
    for (int x : sys.W().parabolic_elements(I)) aniso[tc.class_of[x]] = false;
  return aniso;
}

int popcount_eps_orbits(const TwistedWeylSystem& sys) { return sys.num_eps_orbits(); }

int partition_count(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int m = k; m <= n; ++m) p[m] += p[m - k];
  return static_cast<int>(p[n]);
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(WeylGroup(cartan_matrix('A', 2)).size() == 6);
  CHECK(WeylGroup(cartan_matrix('A', 3)).size() == 24);
  CHECK(WeylGroup(cartan_matrix('B', 3)).size() == 48);
  CHECK(WeylGroup(cartan_matrix('D', 4)).size() == 192);
  CHECK(WeylGroup(cartan_matrix('G', 2)).size() == 12);
  CHECK(WeylGroup(cartan_matrix('F', 4)).size() == 1152);
  CHECK(build_system("2D", 4)->W().size() == 192);
  CHECK(build_system("2D", 5)->W().size() == 1920);
  CHECK(build_system("2E6")->W().size() == 51840);
  CHECK(build_system("2E6")->W().num_positive_roots() == 36);
}

TEST_CASE("global order and reduced words") {
  WeylGroup W(cartan_matrix('A', 3));
  CHECK(W.length(0) == 0);
  CHECK(W.length(W.longest()) == 6);
  for (std::size_t w = 1; w < W.size(); ++w) {
    int wi = static_cast<int>(w);
    CHECK(W.length(wi - 1) <= W.length(wi));
    CHECK(static_cast<int>(W.word(wi).size()) == W.length(wi));
    CHECK(W.from_word(W.word(wi)) == wi);
    CHECK(W.parse_word(W.word_string(wi)) == wi);
    CHECK(W.mul(wi, W.inverse(wi)) == 0);
  }
  CHECK(W.word_string(0) == "e");
  CHECK(W.parse_word("s1.s2.s1") == W.parse_word("s2.s1.s2"));
  // Associativity of the multiplication.
  for (int a = 0; a < 24; a += 5)
    for (int b = 0; b < 24; b += 3)
      for (int c = 0; c < 24; c += 7) CHECK(W.mul(W.mul(a, b), c) == W.mul(a, W.mul(b, c)));
}

TEST_CASE("Bruhat order in S3 against the subword oracle") {
  WeylGroup W(cartan_matrix('A', 2));
  int pairs = 0;
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y) {
      bool b = W.bruhat_leq(y, x);
      CHECK(b == subword_leq(W, y, x));
      pairs += b;
    }
  CHECK(pairs == 19);
}

TEST_CASE("Bruhat order in D4 against the subword oracle") {
  WeylGroup W(cartan_matrix('D', 4));
  for (int x = 0; x < 192; x += 7)
    for (int y = 0; y < 192; y += 3) CHECK(W.bruhat_leq(y, x) == subword_leq(W, y, x));
}

TEST_CASE("diagram automorphisms preserve the Coxeter matrix") {
  for (auto sys : {build_system("2A", 3), build_system("2A", 5), build_system("2D", 4), build_system("3D4"),
                   build_system("2E6")}) {
    auto m = sys->coxeter_matrix();
    for (int i = 0; i < sys->rank(); ++i)
      for (int j = 0; j < sys->rank(); ++j) CHECK(m[i][j] == m[sys->eps_gen(i)][sys->eps_gen(j)]);
  }
  CHECK(build_system("3D4")->r() == 3);
  CHECK(build_system("3D4")->c() == 6);
  CHECK(build_system("2D", 4)->c() == 2);
  // An automorphism that does not preserve the Coxeter matrix is rejected.
  auto W = std::make_shared<const WeylGroup>(cartan_matrix('A', 3));
  CHECK_THROWS_AS(TwistedWeylSystem(Family::Untwisted, 3, W, {1, 0, 2}, "bad"), std::invalid_argument);
  // B2 has no nontrivial automorphism of the Coxeter graph preserving m = 4 orbits.
  auto B = std::make_shared<const WeylGroup>(cartan_matrix('B', 2));
  CHECK_THROWS_AS(TwistedWeylSystem(Family::Untwisted, 2, B, {1, 0}, "bad"), std::invalid_argument);
}

TEST_CASE("eps is a group automorphism and phi l(x) phi^-1 = l(eps x)") {
  auto sys = build_system("3D4");
  const WeylGroup& W = sys->W();
  for (int a = 0; a < 192; a += 5)
    for (int b = 0; b < 192; b += 11) CHECK(sys->eps(W.mul(a, b)) == W.mul(sys->eps(a), sys->eps(b)));
  for (int x = 0; x < 192; ++x) {
    CHECK(W.length(sys->eps(x)) == W.length(x));
    CHECK(sys->eps_power(x, 3) == x);
    ExtElt phi{0, 1};
    ExtElt lhs = sys->ext_mul(sys->ext_mul(phi, {x, 0}), {0, sys->c() - 1});
    CHECK(lhs == ExtElt{sys->eps(x), 0});
  }
  ExtElt e = sys->parse_ext("s1.s2*phi^2");
  CHECK(sys->ext_string(e) == "s1.s2*phi^2");
}

TEST_CASE("twisted classes against the orbit oracle") {
  auto s3 = build_system("2A", 3);
  CHECK(s3->twisted_classes().size() == 3);
  auto d4 = build_system("3D4");
  CHECK(d4->twisted_classes().size() == 7);
  for (auto sys : {s3, build_system("2A", 4), build_system("2D", 3), d4}) {
    const auto& tc = sys->twisted_classes();
    for (std::size_t c = 0; c < tc.size(); ++c) {
      auto orbit = twisted_orbit(*sys, tc.rep(c));
      CHECK(std::vector<int>(orbit.begin(), orbit.end()) == tc.members[c]);
    }
  }
  // For 2A the twisted classes of S_n are in bijection with its conjugacy
  // classes (eps is inner), so there are p(n) of them.
  for (int n = 2; n <= 6; ++n) CHECK(build_system("2A", n)->twisted_classes().size() == std::size_t(partition_count(n)));
  CHECK(build_system("2E6")->twisted_classes().size() == 25);
  CHECK(build_system("2E6")->conjugacy_classes().size() == 25);
  CHECK(build_system("D4")->conjugacy_classes().size() == 13);
}

TEST_CASE("2D twisted classes are W_n classes in the coset") {
  for (int n = 2; n <= 5; ++n) {
    auto sys = build_system("2D", n);
    const auto& tc = sys->twisted_classes();
    std::set<std::pair<std::vector<int>, std::vector<int>>> types;
    for (std::size_t c = 0; c < tc.size(); ++c) {
      auto t = signed_cycle_type(coset_signed_perm(*sys, tc.rep(c)));
      CHECK(t.second.size() % 2 == 1);
      for (int x : tc.members[c]) CHECK(signed_cycle_type(coset_signed_perm(*sys, x)) == t);
      types.insert(t);
    }
    CHECK(types.size() == tc.size());
  }
}

TEST_CASE("eps-stable proper subsets") {
  auto s3 = build_system("2A", 3);
  auto subs = s3->eps_stable_proper_subsets();
  CHECK(subs == std::vector<GenSet>{0});
  auto d4 = build_system("3D4");
  // Orbits {s1,s3,s4} and {s2}.
  CHECK(d4->eps_stable_proper_subsets() == std::vector<GenSet>{0, 2, 13});
  CHECK(d4->num_eps_orbits() == 2);
  auto e6 = build_system("2E6");
  CHECK(e6->num_eps_orbits() == 4);
  CHECK(e6->eps_stable_proper_subsets().size() == 15);
}

TEST_CASE("anisotropy examples") {
  auto s3 = build_system("2A", 3);
  const WeylGroup& W = s3->W();
  CHECK(s3->is_D_anisotropic(W.parse_word("s1")));
  CHECK_FALSE(s3->is_D_anisotropic(W.parse_word("s1.s2")));
  CHECK_FALSE(s3->is_D_anisotropic(0));
}

TEST_CASE("anisotropy: stored predicate equals brute force over parabolics") {
  for (auto sys : {build_system("2A", 3), build_system("2A", 4), build_system("2A", 5), build_system("2D", 3),
                   build_system("2D", 4), build_system("3D4"), build_system("2E6")}) {
    CHECK(sys->anisotropic_classes() == brute_anisotropic(*sys));
  }
}

TEST_CASE("anisotropy: closed criteria for 2A and 2D") {
  for (int n = 2; n <= 5; ++n) {
    auto sys = build_system("2A", n);
    const WeylGroup& W = sys->W();
    for (std::size_t w = 0; w < W.size(); ++w) {
      int wi = static_cast<int>(w);
      bool even_order = W.order(W.mul(wi, W.longest())) % 2 == 0;
      CHECK(sys->is_D_anisotropic(wi) == !even_order);
    }
  }
  for (int n = 2; n <= 4; ++n) {
    auto sys = build_system("2D", n);
    for (std::size_t w = 0; w < sys->W().size(); ++w) {
      int wi = static_cast<int>(w);
      // w s_n fixes a vector iff it has a positive cycle.
      bool fixes = !signed_cycle_type(coset_signed_perm(*sys, wi)).first.empty();
      CHECK(sys->is_D_anisotropic(wi) == !fixes);
    }
  }
}

TEST_CASE("anisotropy: parity and fixed-vector cross-check") {
  for (auto sys : {build_system("2A", 3), build_system("2A", 5), build_system("2D", 4), build_system("3D4"),
                   build_system("2E6")}) {
    const WeylGroup& W = sys->W();
    int orbits = popcount_eps_orbits(*sys);
    for (std::size_t w = 0; w < W.size(); ++w) {
      int wi = static_cast<int>(w);
      if (sys->is_D_anisotropic(wi)) CHECK(W.length(wi) % 2 == orbits % 2);
    }
    const auto& tc = sys->twisted_classes();
    for (std::size_t c = 0; c < tc.size(); ++c)
      CHECK(sys->no_fixed_vector(tc.rep(c)) == sys->anisotropic_classes()[c]);
  }
}

TEST_CASE("parabolic subsystems embed correctly") {
  auto d4 = build_system("3D4");
  auto sub = parabolic_subsystem(*d4, 13);
  CHECK(sub.sys->W().size() == 8);
  CHECK(sub.gens == std::vector<int>{0, 2, 3});
  for (std::size_t x = 0; x < sub.sys->W().size(); ++x) {
    int xi = static_cast<int>(x);
    CHECK(d4->W().length(sub.embed[x]) == sub.sys->W().length(xi));
    CHECK(sub.embed[sub.sys->eps(xi)] == d4->eps(sub.embed[x]));
  }
  CHECK_THROWS_AS(parabolic_subsystem(*d4, 1), std::invalid_argument);
  CHECK_THROWS_AS(parabolic_subsystem(*d4, 0), std::invalid_argument);
}

TEST_CASE("permutation models are homomorphisms") {
  auto a = build_system("2A", 4);
  const WeylGroup& W = a->W();
  for (int x = 0; x < 24; x += 3)
    for (int y = 0; y < 24; y += 5) {
      auto px = perm_of(*a, x), py = perm_of(*a, y), pxy = perm_of(*a, W.mul(x, y));
      std::vector<int> comp(4);
      for (int i = 0; i < 4; ++i) comp[i] = px[py[i] - 1];
      CHECK(comp == pxy);
    }
  auto d = build_system("2D", 4);
  std::set<SignedPerm> images;
  for (int x = 0; x < 192; ++x) {
    images.insert(signed_perm_of(*d, x));
    for (int y = 0; y < 192; y += 37)
      CHECK(signed_perm_compose(signed_perm_of(*d, x), signed_perm_of(*d, y)) == signed_perm_of(*d, d->W().mul(x, y)));
  }
  CHECK(images.size() == 192);
  CHECK(cycle_type({2, 1, 4, 5, 3}) == std::vector<int>{3, 2});
}
