// Character tables: Murnaghan-Nakayama by adding rim hooks, Dixon-Schneider
// from class multiplication coefficients, fake degrees and labels.
#include "ht/chartable.h"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "ht/linalg.h"

namespace ht {

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p.front(); ++j) {
    int cnt = 0;
    for (int x : p)
      if (x >= j) ++cnt;
    c.push_back(cnt);
  }
  return c;
}

int partition_n(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

namespace {

void partitions_rec(int n, int max_part, Partition& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<Bipartition> bipartitions(int n) {
  std::vector<Bipartition> out;
  for (int a = n; a >= 0; --a)
    for (const auto& alpha : partitions(a))
      for (const auto& beta : partitions(n - a)) out.emplace_back(alpha, beta);
  return out;
}

std::string partition_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

std::string bipartition_string(const Bipartition& b) {
  return "(" + partition_string(b.first) + "," + partition_string(b.second) + ")";
}

std::vector<std::pair<Partition, int>> add_rim_hooks(const Partition& p, int k) {
  // Beta-set with enough beads that the new partition has at most N parts.
  int N = static_cast<int>(p.size()) + k;
  std::vector<int> beta(N);
  std::vector<bool> occupied;
  for (int i = 0; i < N; ++i) beta[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + N - 1 - i;
  int top = beta.front() + k + 1;
  occupied.assign(top, false);
  for (int b : beta) occupied[b] = true;
  std::vector<std::pair<Partition, int>> out;
  for (int i = 0; i < N; ++i) {
    int b = beta[i];
    if (occupied[b + k]) continue;
    int between = 0;
    for (int c = b + 1; c < b + k; ++c)
      if (occupied[c]) ++between;
    std::vector<int> nb = beta;
    nb[i] = b + k;
    std::sort(nb.rbegin(), nb.rend());
    Partition q;
    for (int j = 0; j < N; ++j) {
      int part = nb[j] - (N - 1 - j);
      if (part > 0) q.push_back(part);
    }
    out.emplace_back(std::move(q), between % 2 ? -1 : 1);
  }
  return out;
}

std::map<Partition, Integer> sn_characters_at(const Partition& cycle_type) {
  std::map<Partition, Integer> cur{{Partition{}, 1}};
  for (int k : cycle_type) {
    std::map<Partition, Integer> next;
    for (const auto& [lam, c] : cur)
      for (const auto& [mu, sign] : add_rim_hooks(lam, k)) next[mu] += sign * c;
    cur.swap(next);
  }
  for (auto it = cur.begin(); it != cur.end();) it = it->second == 0 ? cur.erase(it) : std::next(it);
  std::map<Partition, Integer> out;
  for (const auto& p : partitions(partition_size(cycle_type))) {
    auto it = cur.find(p);
    out[p] = it == cur.end() ? Integer(0) : it->second;
  }
  return out;
}

std::map<Bipartition, Integer> wn_characters_at(const Partition& positive, const Partition& negative) {
  std::map<Bipartition, Integer> cur{{Bipartition{}, 1}};
  auto step = [&](int k, int beta_sign) {
    std::map<Bipartition, Integer> next;
    for (const auto& [ab, c] : cur) {
      for (const auto& [a2, s] : add_rim_hooks(ab.first, k)) next[{a2, ab.second}] += s * c;
      for (const auto& [b2, s] : add_rim_hooks(ab.second, k)) next[{ab.first, b2}] += beta_sign * s * c;
    }
    cur.swap(next);
  };
  for (int k : positive) step(k, 1);
  for (int k : negative) step(k, -1);
  std::map<Bipartition, Integer> out;
  for (const auto& b : bipartitions(partition_size(positive) + partition_size(negative))) {
    auto it = cur.find(b);
    out[b] = it == cur.end() ? Integer(0) : it->second;
  }
  return out;
}

int CharTable::find(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == label) return static_cast<int>(i);
  throw std::invalid_argument("no character labeled " + label);
}

namespace {

int find_row(const CharTable& t, const std::vector<long long>& row) {
  for (std::size_t i = 0; i < t.chi.size(); ++i)
    if (t.chi[i] == row) return static_cast<int>(i);
  throw std::logic_error("character not found in table");
}

}  // namespace

int CharTable::tensor_sign(const WeylGroup& W, std::size_t i) const {
  std::vector<long long> row(num_classes());
  for (std::size_t c = 0; c < num_classes(); ++c) row[c] = chi[i][c] * W.sign(reps[c]);
  return find_row(*this, row);
}

int CharTable::compose(const TwistedWeylSystem& sys, std::size_t i) const {
  std::vector<long long> row(num_classes());
  for (std::size_t c = 0; c < num_classes(); ++c) row[c] = chi[i][class_of[sys.eps(reps[c])]];
  return find_row(*this, row);
}

CharTable dixon_schneider(const WeylGroup& W, const ClassPartition& classes) {
  std::size_t k = classes.size();
  CharTable t;
  t.class_of = classes.class_of;
  for (std::size_t c = 0; c < k; ++c) {
    t.reps.push_back(classes.rep(c));
    t.sizes.push_back(static_cast<long long>(classes.members[c].size()));
  }
  t.identity_class = classes.class_of[0];
  long long order = static_cast<long long>(W.size());

  // A_j[i][l] = #{y in C_j : y^-1 z_l in C_i}; the central characters are the
  // common eigenvectors, with A_j omega = omega_j omega.
  std::vector<Mat<Rational>> A(k, Mat<Rational>(k, std::vector<Rational>(k, Rational(0))));
  for (std::size_t l = 0; l < k; ++l) {
    int z = classes.rep(l);
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<long long> cnt(k, 0);
      for (int y : classes.members[j]) ++cnt[classes.class_of[W.mul(W.inverse(y), z)]];
      for (std::size_t i = 0; i < k; ++i) A[j][i][l] = cnt[i];
    }
  }

  // Split Q^k into common eigenspaces, one class matrix at a time, largest
  // classes first.
  std::vector<std::size_t> order_j(k);
  std::iota(order_j.begin(), order_j.end(), 0);
  std::stable_sort(order_j.begin(), order_j.end(), [&](std::size_t a, std::size_t b) { return t.sizes[a] > t.sizes[b]; });
  std::vector<Mat<Rational>> spaces{identity_matrix<Rational>(k)};  // each a list of basis vectors
  for (std::size_t j : order_j) {
    std::vector<Mat<Rational>> next;
    for (auto& U : spaces) {
      std::size_t d = U.size();
      if (d == 1) {
        next.push_back(U);
        continue;
      }
      // Express vectors in the basis U by solving the transpose system.
      Mat<Rational> UT(k, std::vector<Rational>(d));
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t i = 0; i < k; ++i) UT[i][m] = U[m][i];
      Mat<Rational> R(d, std::vector<Rational>(d));  // R[row][col]: A_j U[col] = sum_row R[row][col] U[row]
      for (std::size_t col = 0; col < d; ++col) {
        std::vector<Rational> img(k, Rational(0));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t l = 0; l < k; ++l)
            if (A[j][i][l] != 0 && U[col][l] != 0) img[i] += A[j][i][l] * U[col][l];
        auto coords = solve(UT, img);
        if (!coords) throw std::logic_error("class matrix does not preserve an eigenspace");
        for (std::size_t row = 0; row < d; ++row) R[row][col] = (*coords)[row];
      }
      auto cp = char_poly(R);
      std::size_t found = 0;
      long long bound = t.sizes[j];
      for (long long lam = -bound; lam <= bound && found < d; ++lam) {
        Rational val = 0;
        for (std::size_t e = cp.size(); e-- > 0;) val = val * lam + cp[e];
        if (val != 0) continue;
        Mat<Rational> shifted = R;
        for (std::size_t m = 0; m < d; ++m) shifted[m][m] -= lam;
        auto ns = nullspace(shifted, d);
        Mat<Rational> V;
        for (const auto& c : ns) {
          std::vector<Rational> vec(k, Rational(0));
          for (std::size_t m = 0; m < d; ++m)
            if (c[m] != 0)
              for (std::size_t i = 0; i < k; ++i) vec[i] += c[m] * U[m][i];
          V.push_back(std::move(vec));
        }
        found += V.size();
        next.push_back(std::move(V));
      }
      if (found != d) throw std::logic_error("class matrix eigenvalues are not all integers");
    }
    spaces.swap(next);
  }
  if (spaces.size() != k) throw std::logic_error("class algebra did not split into lines");

  for (const auto& U : spaces) {
    std::vector<Rational> omega = U[0];
    Rational o1 = omega[t.identity_class];
    for (auto& x : omega) x /= o1;
    Rational s = 0;
    for (std::size_t l = 0; l < k; ++l) s += omega[l] * omega[l] / Rational(t.sizes[l]);
    auto d = rational_root(Rational(order) / s, 2);
    if (!d) throw std::logic_error("character degree is not rational");
    std::vector<long long> row(k);
    for (std::size_t l = 0; l < k; ++l) {
      Rational v = *d * omega[l] / Rational(t.sizes[l]);
      if (denominator(v) != 1) throw std::logic_error("non-integral character value");
      row[l] = static_cast<long long>(numerator(v));
    }
    t.chi.push_back(std::move(row));
  }
  std::sort(t.chi.begin(), t.chi.end(), [&](const auto& a, const auto& b) {
    if (a[t.identity_class] != b[t.identity_class]) return a[t.identity_class] < b[t.identity_class];
    return a > b;
  });
  for (std::size_t i = 0; i < t.chi.size(); ++i)
    t.labels.push_back("d" + std::to_string(t.dim(i)) + "." + std::to_string(i));
  return t;
}

std::vector<int> b_values(const WeylGroup& W, const CharTable& t) {
  // 1/det(1 - q g) as a power series to the degree of the sign character.
  int top = static_cast<int>(W.num_positive_roots());
  int r = W.rank();
  std::vector<std::vector<Integer>> series;
  for (int g : t.reps) {
    auto m = W.matrix(g);
    Mat<Rational> M(r, std::vector<Rational>(r));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) M[i][j] = m[i][j];
    auto cp = char_poly(M);  // det(tI - g), t^0 upward; det(1 - q g) = sum_i cp[i] q^{r-i}
    std::vector<Integer> den(r + 1);
    for (int i = 0; i <= r; ++i) den[r - i] = numerator(cp[i]);
    std::vector<Integer> s(top + 1, 0);
    for (int e = 0; e <= top; ++e) {
      Integer v = e == 0 ? Integer(1) : Integer(0);
      for (int i = 1; i <= std::min(e, r); ++i) v -= den[i] * s[e - i];
      s[e] = v;
    }
    series.push_back(std::move(s));
  }
  std::vector<int> out;
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    int b = -1;
    for (int e = 0; e <= top && b < 0; ++e) {
      Integer sum = 0;
      for (std::size_t c = 0; c < t.num_classes(); ++c) sum += t.sizes[c] * t.chi[i][c] * series[c][e];
      if (sum != 0) b = e;
    }
    if (b < 0) throw std::logic_error("fake degree vanishes to the top degree");
    out.push_back(b);
  }
  return out;
}

namespace {

void label_type_a(const TwistedWeylSystem& sys, CharTable& t) {
  std::vector<std::map<Partition, Integer>> at;
  for (int r : t.reps) {
    auto ct = cycle_type(perm_of(sys, r));
    at.push_back(sn_characters_at(ct));
  }
  CharTable out = t;
  out.chi.clear();
  out.labels.clear();
  for (const auto& lam : partitions(sys.n())) {
    std::vector<long long> row;
    for (std::size_t c = 0; c < t.num_classes(); ++c) row.push_back(static_cast<long long>(at[c].at(lam)));
    out.chi.push_back(row);
    out.labels.push_back(partition_string(lam));
  }
  t = std::move(out);
}

// Labels of W'_n characters by restriction from W_n.
void label_type_d(const TwistedWeylSystem& sys2d, CharTable& t) {
  int n = sys2d.n();
  std::vector<std::map<Bipartition, Integer>> at;
  for (int r : t.reps) {
    auto [pos, neg] = signed_cycle_type(signed_perm_of(sys2d, r));
    at.push_back(wn_characters_at(pos, neg));
  }
  std::vector<std::string> labels(t.num_irr());
  std::vector<bool> used(t.num_irr(), false);
  for (const auto& ab : bipartitions(n)) {
    if (ab.first < ab.second) continue;  // unordered pair, listed once
    std::vector<long long> res;
    for (std::size_t c = 0; c < t.num_classes(); ++c) res.push_back(static_cast<long long>(at[c].at(ab)));
    std::string base = "{" + partition_string(ab.first) + "," + partition_string(ab.second) + "}";
    if (ab.first != ab.second) {
      int i = find_row(t, res);
      labels[i] = base;
      used[i] = true;
      continue;
    }
    // The restriction splits into two characters of half the degree.
    std::vector<int> halves;
    for (std::size_t i = 0; i < t.num_irr(); ++i)
      if (!used[i] && 2 * t.dim(i) == res[t.identity_class]) {
        std::vector<long long> rest = res;
        for (std::size_t c = 0; c < t.num_classes(); ++c) rest[c] -= t.chi[i][c];
        bool ok = false;
        for (std::size_t j2 = 0; j2 < t.num_irr(); ++j2)
          if (j2 != i && !used[j2] && t.chi[j2] == rest) ok = true;
        if (ok) halves.push_back(static_cast<int>(i));
      }
    if (halves.size() != 2) throw std::logic_error("could not split a degenerate W_n character");
    std::sort(halves.begin(), halves.end(), [&](int a, int b) { return t.chi[a] > t.chi[b]; });
    labels[halves[0]] = base + "+";
    labels[halves[1]] = base + "-";
    used[halves[0]] = used[halves[1]] = true;
  }
  t.labels = labels;
}

void label_triality(const TwistedWeylSystem& sys, CharTable& t) {
  const WeylGroup& W = sys.W();
  auto sys2d = build_system("2D", 4);
  if (sys2d->W().cartan() != W.cartan()) throw std::logic_error("D4 numbering mismatch");
  label_type_d(*sys2d, t);
  std::vector<long long> triv, sign, refl, refl_sign;
  for (int r : t.reps) {
    auto m = W.matrix(r);
    long long tr = 0;
    for (int i = 0; i < W.rank(); ++i) tr += m[i][i];
    triv.push_back(1);
    sign.push_back(W.sign(r));
    refl.push_back(tr);
    refl_sign.push_back(tr * W.sign(r));
  }
  t.labels[find_row(t, triv)] = "1";
  t.labels[find_row(t, sign)] = "1'";
  t.labels[find_row(t, refl)] = "4";
  t.labels[find_row(t, refl_sign)] = "4'";
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    if (!t.eps_invariant(sys, i)) continue;
    long long d = t.dim(i);
    if (d == 2 || d == 6 || d == 8) t.labels[i] = std::to_string(d);
  }
}

void label_e6(const TwistedWeylSystem& sys, CharTable& t) {
  const WeylGroup& W = sys.W();
  auto b = b_values(W, t);
  static const std::map<std::pair<long long, int>, std::string> names = {
      {{1, 0}, "1_0"},     {{6, 1}, "6_1"},     {{20, 2}, "20_2"},   {{30, 3}, "30_3"},   {{15, 4}, "15_3"},
      {{15, 5}, "~15_3"},  {{64, 4}, "64_4"},   {{60, 5}, "60_5"},   {{81, 6}, "81_6"},   {{24, 6}, "24_6"},
      {{80, 7}, "80_7"},   {{60, 8}, "60_7"},   {{90, 8}, "90_7"},   {{10, 9}, "10_7"},   {{20, 10}, "20_7"},
      {{81, 10}, "81_10"}, {{60, 11}, "60_11"}, {{24, 12}, "24_12"}, {{64, 13}, "64_13"}, {{30, 15}, "30_15"},
      {{20, 20}, "20_20"}, {{6, 25}, "6_25"},   {{1, 36}, "1_36"}};
  std::vector<std::string> labels(t.num_irr());
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    auto it = names.find({t.dim(i), b[i]});
    if (it != names.end()) labels[i] = it->second;
  }
  // The two 15-dimensional characters of a-value 15 are the sign twists of 15_3, ~15_3.
  for (std::size_t i = 0; i < t.num_irr(); ++i) {
    if (labels[i] == "15_3") labels[t.tensor_sign(W, i)] = "15_15";
    if (labels[i] == "~15_3") labels[t.tensor_sign(W, i)] = "~15_15";
  }
  static const std::vector<std::string> e6_order = {
      "1_0",  "6_1",   "20_2",  "30_3",  "15_3",  "~15_3", "64_4",  "60_5",   "81_6",  "24_6",  "80_7",  "60_7",  "90_7",
      "10_7", "20_7",  "81_10", "60_11", "24_12", "64_13", "30_15", "15_15",  "~15_15", "20_20", "6_25",  "1_36"};
  CharTable out = t;
  out.chi.clear();
  out.labels.clear();
  for (const auto& name : e6_order) {
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::logic_error("E6 character " + name + " not identified");
    out.chi.push_back(t.chi[it - labels.begin()]);
    out.labels.push_back(name);
  }
  t = std::move(out);
}

}  // namespace

std::shared_ptr<const CharTable> char_table(std::shared_ptr<const TwistedWeylSystem> sys) {
  static std::mutex mu;
  static std::map<const TwistedWeylSystem*, std::pair<std::weak_ptr<const TwistedWeylSystem>, std::shared_ptr<const CharTable>>>
      cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(sys.get());
    if (it != cache.end() && !it->second.first.expired()) return it->second.second;
  }
  CharTable t;
  if (sys->family() == Family::TwistedA) {
    t.class_of = sys->conjugacy_classes().class_of;
    for (std::size_t c = 0; c < sys->conjugacy_classes().size(); ++c) {
      t.reps.push_back(sys->conjugacy_classes().rep(c));
      t.sizes.push_back(static_cast<long long>(sys->conjugacy_classes().members[c].size()));
    }
    t.identity_class = t.class_of[0];
    label_type_a(*sys, t);
  } else {
    t = dixon_schneider(sys->W(), sys->conjugacy_classes());
    if (sys->family() == Family::TwistedD) label_type_d(*sys, t);
    if (sys->family() == Family::Triality) label_triality(*sys, t);
    if (sys->family() == Family::TwistedE6) label_e6(*sys, t);
  }
  auto out = std::make_shared<const CharTable>(std::move(t));
  std::lock_guard<std::mutex> lock(mu);
  cache[sys.get()] = {sys, out};
  return out;
}

}  // namespace ht
