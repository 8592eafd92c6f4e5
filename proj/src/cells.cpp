// Cell engine.  The structure constants r_{x,y}^z are computed column by
// column (fixed y) from the left recursion c_x = c_s c_{x'} - sum mu c_z, with
// dense int64 coefficient arrays; a, gamma and Phi are read off the columns.
#include "ht/cells.h"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace ht {

namespace {

// Strongly connected components of a directed graph (iterative Tarjan).
std::vector<int> scc(const std::vector<std::vector<int>>& adj, int& ncomp) {
  int n = static_cast<int>(adj.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<bool> on_stack(n, false);
  int counter = 0;
  ncomp = 0;
  std::vector<std::pair<int, std::size_t>> work;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    work.push_back({root, 0});
    while (!work.empty()) {
      auto& [v, i] = work.back();
      if (i == 0) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (i < adj[v].size()) {
        int u = adj[v][i++];
        if (index[u] < 0) {
          work.push_back({u, 0});
        } else if (on_stack[u]) {
          low[v] = std::min(low[v], index[u]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          int u = stack.back();
          stack.pop_back();
          on_stack[u] = false;
          comp[u] = ncomp;
          if (u == v) break;
        }
        ++ncomp;
      }
      int done = v;
      work.pop_back();
      if (!work.empty()) low[work.back().first] = std::min(low[work.back().first], low[done]);
    }
  }
  return comp;
}

// Groups elements by component, sorts each group, then sorts groups by `key`.
template <class Key>
std::vector<std::vector<int>> group_components(const std::vector<int>& comp, int ncomp, Key key) {
  std::vector<std::vector<int>> groups(ncomp);
  for (std::size_t w = 0; w < comp.size(); ++w) groups[comp[w]].push_back(static_cast<int>(w));
  std::sort(groups.begin(), groups.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return groups;
}

// One column of structure constants: R[x][z] = r_{x,y}^z for fixed y, as
// dense integer arrays over exponents -off..off.
class RColumn {
 public:
  RColumn(const KLTable& kl) : kl_(kl), W_(kl.W()), n_(W_.size()) {
    int L = W_.length(W_.longest());
    off_ = L + 2;
    width_ = 2 * off_ + 1;
    data_.assign(n_ * n_ * width_, 0);
    nz_.assign(n_, {});
  }

  void compute(int y) {
    std::fill(data_.begin(), data_.end(), 0);
    for (auto& v : nz_) v.clear();
    mut_at(0, y)[off_] = 1;
    nz_[0].push_back(y);
    for (std::size_t x = 1; x < n_; ++x) {
      int xi = static_cast<int>(x);
      int s = W_.word(xi).front();
      int xp = W_.lmul(s, xi);
      // c_s R(x')
      for (int w : nz_[xp]) {
        const long long* src = at(xp, w);
        int sw = W_.lmul(s, w);
        if (W_.length(sw) < W_.length(w)) {
          long long* dst = mut_at(xi, w);
          for (int e = 1; e + 1 < width_; ++e) {
            if (src[e] == 0) continue;
            dst[e - 1] += src[e];
            dst[e + 1] += src[e];
          }
        } else {
          add_scaled(mut_at(xi, sw), src, 1);
          for (auto [z, mu] : kl_.mu_below(w))
            if (W_.length(W_.lmul(s, z)) < W_.length(z)) add_scaled(mut_at(xi, z), src, mu);
        }
      }
      for (auto [z, mu] : kl_.mu_below(xp))
        if (W_.length(W_.lmul(s, z)) < W_.length(z))
          for (int w : nz_[z]) add_scaled(mut_at(xi, w), at(z, w), -mu);
      for (std::size_t w = 0; w < n_; ++w) {
        const long long* row = at(xi, static_cast<int>(w));
        bool any = false;
        for (int e = 0; e < width_; ++e) {
          if (row[e] == 0) continue;
          any = true;
          if (row[e] > kLimit || row[e] < -kLimit || e == 0 || e + 1 == width_)
            throw std::overflow_error("structure constant outside the integer cell engine range");
        }
        if (any) nz_[x].push_back(static_cast<int>(w));
      }
    }
  }

  const std::vector<int>& nonzero(int x) const { return nz_[x]; }
  const long long* at(int x, int z) const { return data_.data() + (static_cast<std::size_t>(x) * n_ + z) * width_; }
  int offset() const { return off_; }
  int width() const { return width_; }

  LaurentPoly poly(int x, int z) const {
    const long long* p = at(x, z);
    std::map<int, Integer> terms;
    for (int e = 0; e < width_; ++e)
      if (p[e] != 0) terms[e - off_] = Integer(p[e]);
    return LaurentPoly::from_terms(terms);
  }

 private:
  static constexpr long long kLimit = 1LL << 55;
  long long* mut_at(int x, int z) { return data_.data() + (static_cast<std::size_t>(x) * n_ + z) * width_; }
  void add_scaled(long long* dst, const long long* src, long long c) {
    for (int e = 0; e < width_; ++e)
      if (src[e] != 0) dst[e] += c * src[e];
  }

  const KLTable& kl_;
  const WeylGroup& W_;
  std::size_t n_;
  int off_ = 0, width_ = 0;
  std::vector<long long> data_;
  std::vector<std::vector<int>> nz_;
};

}  // namespace

std::shared_ptr<const KLTable> shared_kl_table(std::shared_ptr<const WeylGroup> W) {
  static std::mutex mu;
  static std::map<CartanMatrix, std::shared_ptr<const KLTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(W->cartan());
  if (it != cache.end()) return it->second;
  auto kl = std::make_shared<const KLTable>(W, W->size());
  cache.emplace(W->cartan(), kl);
  return kl;
}

std::shared_ptr<const CellData> shared_cell_data(std::shared_ptr<const WeylGroup> W) {
  static std::mutex mu;
  static std::map<CartanMatrix, std::shared_ptr<const CellData>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(W->cartan());
    if (it != cache.end()) return it->second;
  }
  auto cd = std::make_shared<const CellData>(shared_kl_table(W));
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(W->cartan(), cd).first->second;
}

CellData::CellData(std::shared_ptr<const KLTable> kl) : kl_(std::move(kl)) {
  compute_r_data();
  compute_cells();
  compute_distinguished();
  compute_phi1();
}

void CellData::compute_r_data() {
  const WeylGroup& W = kl_->W();
  std::size_t n = W.size();
  a_.assign(n, 0);
  // Per (x, y): (z, top degree, top coefficient) for every z with r_{x,y}^z != 0.
  std::vector<std::vector<std::tuple<int, int, long long>>> top(n * n);
  RColumn col(*kl_);
  int off = col.offset();
  for (std::size_t y = 0; y < n; ++y) {
    col.compute(static_cast<int>(y));
    for (std::size_t x = 0; x < n; ++x)
      for (int z : col.nonzero(static_cast<int>(x))) {
        const long long* p = col.at(static_cast<int>(x), z);
        int e = col.width() - 1;
        while (p[e] == 0) --e;
        top[idx(static_cast<int>(x), static_cast<int>(y))].emplace_back(z, e - off, p[e]);
        a_[z] = std::max(a_[z], e - off);
      }
  }
  tmul_.assign(n * n, {});
  for (std::size_t i = 0; i < n * n; ++i)
    for (auto [z, deg, coef] : top[i])
      if (deg == a_[z]) tmul_[i].emplace_back(z, static_cast<int>(coef));
}

int CellData::gamma(int x, int y, int z) const {
  for (auto [w, g] : tmul_[idx(x, y)])
    if (w == z) return g;
  return 0;
}

void CellData::compute_cells() {
  const WeylGroup& W = kl_->W();
  int n = static_cast<int>(W.size());
  // Edges x -> z whenever c_z occurs in c_s c_x (left) or c_x c_s (right).
  std::vector<std::vector<int>> left(n), right(n);
  for (int x = 0; x < n; ++x)
    for (int s = 0; s < W.rank(); ++s) {
      int sx = W.lmul(s, x);
      if (W.length(sx) > W.length(x)) {
        left[x].push_back(sx);
        for (auto [z, mu] : kl_->mu_below(x))
          if (W.length(W.lmul(s, z)) < W.length(z)) left[x].push_back(z);
      }
      int xs = W.rmul(x, s);
      if (W.length(xs) > W.length(x)) {
        right[x].push_back(xs);
        for (auto [z, mu] : kl_->mu_below(x))
          if (W.length(W.rmul(z, s)) < W.length(z)) right[x].push_back(z);
      }
    }
  std::vector<std::vector<int>> both(n);
  for (int x = 0; x < n; ++x) {
    both[x] = left[x];
    both[x].insert(both[x].end(), right[x].begin(), right[x].end());
  }
  auto by_min = [](const std::vector<int>& g) { return g.front(); };
  int nc = 0;
  auto comp = scc(left, nc);
  left_cells_ = group_components(comp, nc, by_min);
  comp = scc(right, nc);
  right_cells_ = group_components(comp, nc, by_min);
  comp = scc(both, nc);
  cells_ = group_components(comp, nc, [&](const std::vector<int>& g) { return std::make_pair(a_[g.front()], g.front()); });
  auto index_of = [n](const std::vector<std::vector<int>>& groups) {
    std::vector<int> of(n);
    for (std::size_t i = 0; i < groups.size(); ++i)
      for (int w : groups[i]) of[w] = static_cast<int>(i);
    return of;
  };
  left_cell_of_ = index_of(left_cells_);
  right_cell_of_ = index_of(right_cells_);
  cell_of_ = index_of(cells_);
  for (const auto& c : cells_)
    for (int w : c)
      if (a_[w] != a_[c.front()]) throw std::logic_error("a-function is not constant on a two-sided cell");

  // Order on cells: cell(z) <= cell(x) for every edge x -> z, then closure.
  std::size_t k = cells_.size();
  cell_leq_.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) cell_leq_[i][i] = true;
  for (int x = 0; x < n; ++x)
    for (int z : both[x]) cell_leq_[cell_of_[z]][cell_of_[x]] = true;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < k; ++i)
      if (cell_leq_[i][m])
        for (std::size_t j = 0; j < k; ++j)
          if (cell_leq_[m][j]) cell_leq_[i][j] = true;
  order_.clear();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !cell_leq_[i][j]) continue;
      bool covering = true;
      for (std::size_t m = 0; m < k && covering; ++m)
        if (m != i && m != j && cell_leq_[i][m] && cell_leq_[m][j]) covering = false;
      if (covering) order_.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
}

void CellData::compute_distinguished() {
  std::size_t n = a_.size();
  is_dist_.assign(n, false);
  dist_.clear();
  for (const auto& c : cells_) {
    std::size_t m = c.size();
    std::map<int, std::size_t> pos;
    for (std::size_t i = 0; i < m; ++i) pos[c[i]] = i;
    // Left-unit equations sum_w u_w gamma(w, x, z) = delta_{x,z}, one per (x, z).
    std::map<std::pair<int, int>, std::vector<Rational>> eqs;
    for (int x : c)
      for (int z : c) eqs[{x, z}].assign(m + 1, Rational(0));
    for (int x : c) eqs[{x, x}][m] = 1;
    for (std::size_t wi = 0; wi < m; ++wi)
      for (int x : c)
        for (auto [z, g] : t_mul(c[wi], x)) {
          auto it = eqs.find({x, z});
          if (it == eqs.end()) throw std::logic_error("gamma constant leaves its two-sided cell");
          it->second[wi] += g;
        }
    RowReducer<Rational> rr(m + 1);
    for (const auto& [key, row] : eqs) {
      rr.add(row);
      if (rr.rank() == m) break;
    }
    if (rr.rank() != m) throw std::logic_error("unit of J is not determined on a cell");
    std::vector<Rational> u(m, Rational(0));
    for (std::size_t k = 0; k < m; ++k) {
      if (rr.pivots()[k] == m) throw std::logic_error("inconsistent unit equations");
      u[rr.pivots()[k]] = rr.rows()[k][m];
    }
    // Verify the full two-sided unit property exactly.
    for (const auto& [key, row] : eqs) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < m; ++i) lhs += u[i] * row[i];
      if (lhs != row[m]) throw std::logic_error("left unit equations inconsistent");
    }
    for (int x : c) {
      std::map<int, Rational> prod;
      for (std::size_t wi = 0; wi < m; ++wi)
        if (u[wi] != 0)
          for (auto [z, g] : t_mul(x, c[wi])) prod[z] += u[wi] * g;
      for (int z : c) {
        Rational want = (z == x) ? 1 : 0;
        if (prod[z] != want) throw std::logic_error("right unit equation fails");
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (u[i] == 0) continue;
      if (u[i] != 1) throw std::logic_error("unit coefficient different from 1");
      is_dist_[c[i]] = true;
      dist_.push_back(c[i]);
    }
  }
  std::sort(dist_.begin(), dist_.end());
}

void CellData::compute_phi1() {
  const WeylGroup& W = kl_->W();
  std::size_t n = W.size();
  RColumn col(*kl_);
  int off = col.offset(), width = col.width();
  std::vector<long long> acc(n * n * width, 0);
  for (int d : dist_) {
    col.compute(d);
    for (std::size_t x = 0; x < n; ++x)
      for (int z : col.nonzero(static_cast<int>(x))) {
        if (a_[z] != a_[d]) continue;
        const long long* p = col.at(static_cast<int>(x), z);
        long long* q = acc.data() + (x * n + z) * width;
        for (int e = 0; e < width; ++e) q[e] += p[e];
      }
  }
  phi_.assign(n, {});
  std::vector<std::vector<std::pair<int, long long>>> B(n);  // B[x] = Phi(c_x^dagger) at v = 1
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t z = 0; z < n; ++z) {
      const long long* q = acc.data() + (x * n + z) * width;
      std::map<int, Integer> terms;
      long long at_one = 0;
      for (int e = 0; e < width; ++e)
        if (q[e] != 0) {
          terms[e - off] = Integer(q[e]);
          at_one += q[e];
        }
      if (terms.empty()) continue;
      phi_[x].emplace_back(static_cast<int>(z), LaurentPoly::from_terms(terms));
      if (at_one != 0) B[x].emplace_back(static_cast<int>(z), at_one);
    }
  // w = sum_x Q_{x,w}(1) c_x^dagger(1), so Phi^1(w) = sum_x Q_{x,w}(1) B[x].
  DaggerBasis db = dagger_basis(*kl_);
  phi1_.assign(n, std::vector<Rational>(n, Rational(0)));
  std::vector<Integer> row(n);
  for (std::size_t w = 0; w < n; ++w) {
    std::fill(row.begin(), row.end(), Integer(0));
    for (const auto& [x, q] : db.T_in_c[w]) {
      Integer q1 = q.eval_at_one();
      if (q1 == 0) continue;
      for (auto [z, b] : B[x]) row[z] += q1 * b;
    }
    for (std::size_t z = 0; z < n; ++z)
      if (row[z] != 0) phi1_[w][z] = Rational(row[z]);
  }
  // Invert with indices permuted into cell order, where the matrix is block
  // triangular, to keep fill-in low.
  std::vector<int> perm;
  for (const auto& c : cells_) perm.insert(perm.end(), c.begin(), c.end());
  Mat<Rational> P(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) P[i][j] = phi1_[perm[i]][perm[j]];
  auto inv = inverse(P);
  if (!inv) throw std::logic_error("Phi^1 is singular");
  // P = Pi phi1 Pi^T, so phi1^-1 = Pi^T P^-1 Pi: rows indexed by z, columns by w.
  phi1_inv_.assign(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) phi1_inv_[perm[i]][perm[j]] = (*inv)[i][j];
}

std::vector<int> eps_stable_cells(const TwistedWeylSystem& sys, const CellData& cd) {
  std::vector<int> out;
  for (std::size_t c = 0; c < cd.cells().size(); ++c) {
    int w = cd.cells()[c].front();
    if (cd.cell_of(sys.eps(w)) == static_cast<int>(c)) out.push_back(static_cast<int>(c));
  }
  return out;
}

std::map<int, LaurentPoly> r_row(const CellData& cd, int x, int y) {
  RColumn col(cd.kl());
  col.compute(y);
  std::map<int, LaurentPoly> out;
  for (int z : col.nonzero(x)) out[z] = col.poly(x, z);
  return out;
}

}  // namespace ht
