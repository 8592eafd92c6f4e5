// Weyl groups from Cartan matrices, diagram automorphisms and twisted classes.
#include "ht/weyl.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ht/linalg.h"

namespace ht {

CartanMatrix cartan_matrix(char type, int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  CartanMatrix a(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw std::invalid_argument("B/C need rank >= 2");
      for (int i = 0; i + 1 < rank; ++i) link(i, i + 1);
      if (type == 'B')
        a[rank - 1][rank - 2] = -2;
      else
        a[rank - 2][rank - 1] = -2;
      break;
    case 'D':
      if (rank < 2) throw std::invalid_argument("D needs rank >= 2");
      for (int i = 0; i + 2 < rank; ++i) link(i, i + 1);
      if (rank >= 3) link(rank - 1, rank - 3);
      break;
    case 'E':
      if (rank < 6 || rank > 8) throw std::invalid_argument("E needs rank 6..8");
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < rank; ++i) link(i, i + 1);
      break;
    case 'F':
      if (rank != 4) throw std::invalid_argument("F needs rank 4");
      link(0, 1);
      link(2, 3);
      a[1][2] = -1;
      a[2][1] = -2;
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G needs rank 2");
      a[0][1] = -3;
      a[1][0] = -1;
      break;
    default:
      throw std::invalid_argument(std::string("unsupported Cartan type ") + type);
  }
  return a;
}

namespace {

std::uint64_t pack_root(const std::vector<int>& v) {
  std::uint64_t key = 0;
  for (int c : v) key = key * 64 + static_cast<std::uint64_t>(c + 32);
  return key;
}

}  // namespace

WeylGroup::WeylGroup(CartanMatrix a, std::size_t max_order) : rank_(static_cast<int>(a.size())), cartan_(std::move(a)) {
  if (rank_ < 1 || rank_ > 8) throw std::invalid_argument("rank must be in 1..8");
  // Roots: orbit of the simple roots under the simple reflections.
  std::unordered_map<std::uint64_t, int> index;
  std::vector<std::vector<int>> found;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> e(rank_, 0);
    e[i] = 1;
    index.emplace(pack_root(e), static_cast<int>(found.size()));
    found.push_back(e);
  }
  for (std::size_t k = 0; k < found.size(); ++k) {
    for (int i = 0; i < rank_; ++i) {
      std::vector<int> b = found[k];
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += b[j] * cartan_[i][j];
      b[i] -= pair;
      if (index.emplace(pack_root(b), static_cast<int>(found.size())).second) found.push_back(b);
      if (found.size() > 250) throw std::invalid_argument("root system too large or not finite");
    }
  }
  std::vector<std::vector<int>> pos;
  for (const auto& r : found)
    if (std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; })) pos.push_back(r);
  std::sort(pos.begin(), pos.end(), [](const auto& x, const auto& y) {
    int hx = std::accumulate(x.begin(), x.end(), 0), hy = std::accumulate(y.begin(), y.end(), 0);
    return hx != hy ? hx < hy : x > y;
  });
  roots_ = pos;
  for (const auto& r : pos) {
    std::vector<int> m(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) m[j] = -r[j];
    roots_.push_back(m);
  }
  if (roots_.size() != found.size()) throw std::logic_error("root enumeration inconsistent");
  index.clear();
  for (std::size_t k = 0; k < roots_.size(); ++k) index.emplace(pack_root(roots_[k]), static_cast<int>(k));
  refl_.assign(rank_, std::vector<int>(roots_.size()));
  for (int i = 0; i < rank_; ++i)
    for (std::size_t k = 0; k < roots_.size(); ++k) {
      std::vector<int> b = roots_[k];
      int pair = 0;
      for (int j = 0; j < rank_; ++j) pair += b[j] * cartan_[i][j];
      b[i] -= pair;
      refl_[i][k] = index.at(pack_root(b));
    }

  // Breadth-first enumeration by left multiplication; an element is keyed by
  // the images of the simple roots.
  std::vector<std::uint8_t> imgs;
  std::unordered_map<std::uint64_t, int> key_of;
  auto key = [&](const std::uint8_t* p) {
    std::uint64_t k = 0;
    for (int j = 0; j < rank_; ++j) k = (k << 8) | p[j];
    return k;
  };
  std::vector<int> bfs_len, bfs_lmul;
  for (int j = 0; j < rank_; ++j) imgs.push_back(static_cast<std::uint8_t>(j));
  key_of.emplace(key(imgs.data()), 0);
  bfs_len.push_back(0);
  std::vector<std::uint8_t> tmp(rank_);
  for (std::size_t w = 0; w < bfs_len.size(); ++w) {
    for (int s = 0; s < rank_; ++s) {
      for (int j = 0; j < rank_; ++j) tmp[j] = static_cast<std::uint8_t>(refl_[s][imgs[w * rank_ + j]]);
      auto [it, fresh] = key_of.emplace(key(tmp.data()), static_cast<int>(bfs_len.size()));
      if (fresh) {
        if (bfs_len.size() >= max_order) throw std::invalid_argument("Weyl group exceeds the order limit");
        imgs.insert(imgs.end(), tmp.begin(), tmp.end());
        bfs_len.push_back(bfs_len[w] + 1);
      }
      bfs_lmul.resize((w + 1) * rank_);
      bfs_lmul[w * rank_ + s] = it->second;
    }
  }
  n_ = bfs_len.size();

  // Lexicographically smallest reduced words, then the global order.
  std::vector<std::vector<int>> bw(n_);
  for (std::size_t w = 1; w < n_; ++w) {
    for (int s = 0; s < rank_; ++s) {
      int sw = bfs_lmul[w * rank_ + s];
      if (bfs_len[sw] < bfs_len[w]) {
        bw[w].push_back(s);
        bw[w].insert(bw[w].end(), bw[sw].begin(), bw[sw].end());
        break;
      }
    }
  }
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return bfs_len[x] != bfs_len[y] ? bfs_len[x] < bfs_len[y] : bw[x] < bw[y];
  });
  std::vector<int> pos_of(n_);
  for (std::size_t i = 0; i < n_; ++i) pos_of[order[i]] = static_cast<int>(i);

  len_.resize(n_);
  lmul_.resize(n_ * rank_);
  words_.resize(n_);
  support_.resize(n_);
  simple_images_.resize(n_ * rank_);
  for (std::size_t i = 0; i < n_; ++i) {
    int old = order[i];
    len_[i] = bfs_len[old];
    words_[i] = bw[old];
    GenSet sup = 0;
    for (int s : words_[i]) sup |= GenSet(1) << s;
    support_[i] = sup;
    for (int s = 0; s < rank_; ++s) {
      lmul_[i * rank_ + s] = pos_of[bfs_lmul[old * rank_ + s]];
      simple_images_[i * rank_ + s] = imgs[old * rank_ + s];
    }
  }
  inv_.resize(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<int> rev(words_[i].rbegin(), words_[i].rend());
    inv_[i] = from_word(rev);
  }
  rmul_.resize(n_ * rank_);
  for (std::size_t i = 0; i < n_; ++i)
    for (int s = 0; s < rank_; ++s) rmul_[i * rank_ + s] = inv_[lmul(s, inv_[i])];
  if (n_ <= 1200) {
    mul_.resize(n_ * n_);
    for (std::size_t a = 0; a < n_; ++a) {
      mul_[a * n_] = static_cast<int>(a);
      for (std::size_t b = 1; b < n_; ++b) {
        // b = b' s with s the last letter of its word, and b' earlier in the order.
        int s = words_[b].back();
        int bprime = rmul(static_cast<int>(b), s);
        mul_[a * n_ + b] = rmul(mul_[a * n_ + bprime], s);
      }
    }
  }
}

int WeylGroup::coxeter_entry(int i, int j) const {
  if (i == j) return 1;
  switch (cartan_[i][j] * cartan_[j][i]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("non-crystallographic Cartan entry");
  }
}

int WeylGroup::mul(int a, int b) const {
  if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * n_ + b];
  for (int s : words_[b]) a = rmul(a, s);
  return a;
}

GenSet WeylGroup::left_descents(int w) const {
  GenSet d = 0;
  for (int s = 0; s < rank_; ++s)
    if (is_left_descent(s, w)) d |= GenSet(1) << s;
  return d;
}

GenSet WeylGroup::right_descents(int w) const {
  GenSet d = 0;
  for (int s = 0; s < rank_; ++s)
    if (is_right_descent(w, s)) d |= GenSet(1) << s;
  return d;
}

int WeylGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank_) throw std::invalid_argument("generator index out of range");
    w = lmul(*it, w);
  }
  return w;
}

std::string WeylGroup::word_string(int w) const {
  if (words_[w].empty()) return "e";
  std::ostringstream os;
  for (std::size_t i = 0; i < words_[w].size(); ++i) os << (i ? "." : "") << 's' << words_[w][i] + 1;
  return os.str();
}

int WeylGroup::parse_word(const std::string& s) const {
  if (s == "e" || s.empty()) return 0;
  std::vector<int> word;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '.')) {
    if (tok.size() < 2 || tok[0] != 's') throw std::invalid_argument("bad word: " + s);
    word.push_back(std::stoi(tok.substr(1)) - 1);
  }
  return from_word(word);
}

// Lifting property: for s with sx < x, y <= x iff (sy < y ? sy <= sx : y <= sx).
bool WeylGroup::bruhat_leq(int y, int x) const {
  while (true) {
    if (len_[y] > len_[x]) return false;
    if (x == 0) return y == 0;
    int s = words_[x][0];
    int sx = lmul(s, x);
    int sy = lmul(s, y);
    if (len_[sy] < len_[y]) y = sy;
    x = sx;
  }
}

int WeylGroup::act_on_root(int w, int root) const {
  std::vector<int> v(rank_, 0);
  for (int j = 0; j < rank_; ++j) {
    const auto& img = roots_[simple_images_[static_cast<std::size_t>(w) * rank_ + j]];
    for (int t = 0; t < rank_; ++t) v[t] += roots_[root][j] * img[t];
  }
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == v) return static_cast<int>(k);
  throw std::logic_error("image is not a root");
}

std::vector<std::vector<int>> WeylGroup::matrix(int w) const {
  std::vector<std::vector<int>> m(rank_, std::vector<int>(rank_));
  for (int j = 0; j < rank_; ++j) {
    const auto& img = roots_[simple_images_[static_cast<std::size_t>(w) * rank_ + j]];
    for (int i = 0; i < rank_; ++i) m[i][j] = img[i];
  }
  return m;
}

int WeylGroup::order(int w) const {
  int k = 1;
  for (int p = w; p != 0; p = mul(p, w)) ++k;
  return k;
}

std::vector<int> WeylGroup::parabolic_elements(GenSet I) const {
  std::vector<int> out;
  for (std::size_t w = 0; w < n_; ++w)
    if ((support_[w] & ~I) == 0) out.push_back(static_cast<int>(w));
  return out;
}

// ---------------------------------------------------------------------------
// Twisted systems

namespace {

ClassPartition orbits(const WeylGroup& W, const std::vector<int>& eps_gen) {
  std::size_t n = W.size();
  ClassPartition cp;
  cp.class_of.assign(n, -1);
  std::vector<int> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (cp.class_of[start] >= 0) continue;
    int id = static_cast<int>(cp.members.size());
    cp.members.emplace_back();
    cp.class_of[start] = id;
    stack.push_back(static_cast<int>(start));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      cp.members[id].push_back(x);
      for (int s = 0; s < W.rank(); ++s) {
        int y = W.lmul(s, W.rmul(x, eps_gen[s]));
        if (cp.class_of[y] < 0) {
          cp.class_of[y] = id;
          stack.push_back(y);
        }
      }
    }
    std::sort(cp.members[id].begin(), cp.members[id].end());
  }
  return cp;
}

long long det_int(std::vector<std::vector<long long>> m) {
  // Bareiss fraction-free elimination.
  int n = static_cast<int>(m.size());
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TwistedWeylSystem::TwistedWeylSystem(Family family, int n, std::shared_ptr<const WeylGroup> w,
                                     std::vector<int> eps_gen, std::string label)
    : family_(family), n_(n), w_(std::move(w)), eps_gen_(std::move(eps_gen)), label_(std::move(label)) {
  const WeylGroup& W = *w_;
  int rk = W.rank();
  if (static_cast<int>(eps_gen_.size()) != rk) throw std::invalid_argument("eps has the wrong size");
  std::vector<int> seen(rk, 0);
  for (int s : eps_gen_) {
    if (s < 0 || s >= rk || seen[s]++) throw std::invalid_argument("eps is not a permutation");
  }
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j)
      if (W.coxeter_entry(i, j) != W.coxeter_entry(eps_gen_[i], eps_gen_[j]))
        throw std::invalid_argument("eps does not preserve the Coxeter matrix");
  // Order of eps, and the orbit hypothesis on products of order >= 4.
  r_ = 1;
  for (int i = 0; i < rk; ++i) {
    int len = 1;
    for (int j = eps_gen_[i]; j != i; j = eps_gen_[j]) {
      ++len;
      if (W.coxeter_entry(i, j) >= 4)
        throw std::invalid_argument("generators in one eps-orbit have product of order >= 4");
    }
    r_ = std::lcm(r_, len);
  }
  c_ = std::lcm(2, r_);
  eps_elt_.resize(W.size());
  for (std::size_t x = 0; x < W.size(); ++x) {
    std::vector<int> word = W.word(static_cast<int>(x));
    for (auto& s : word) s = eps_gen_[s];
    eps_elt_[x] = W.from_word(word);
  }
  twisted_ = orbits(W, eps_gen_);
  std::vector<int> id(rk);
  std::iota(id.begin(), id.end(), 0);
  conj_ = orbits(W, id);

  std::vector<bool> meets_parabolic(twisted_.size(), false);
  GenSet full = (GenSet(1) << rk) - 1;
  for (std::size_t x = 0; x < W.size(); ++x)
    if (eps_set(W.support(static_cast<int>(x))) != full) meets_parabolic[twisted_.class_of[x]] = true;
  anisotropic_.resize(twisted_.size());
  for (std::size_t c = 0; c < twisted_.size(); ++c) anisotropic_[c] = !meets_parabolic[c];
}

int TwistedWeylSystem::eps_power(int w, int k) const {
  k %= r_;
  if (k < 0) k += r_;
  for (int i = 0; i < k; ++i) w = eps_elt_[w];
  return w;
}

GenSet TwistedWeylSystem::eps_set(GenSet I) const {
  GenSet out = I;
  for (int round = 0; round < r_; ++round) {
    GenSet next = out;
    for (int s = 0; s < rank(); ++s)
      if (out & (GenSet(1) << s)) next |= GenSet(1) << eps_gen_[s];
    out = next;
  }
  return out;
}

std::vector<std::vector<int>> TwistedWeylSystem::coxeter_matrix() const {
  std::vector<std::vector<int>> m(rank(), std::vector<int>(rank()));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) m[i][j] = w_->coxeter_entry(i, j);
  return m;
}

ExtElt TwistedWeylSystem::ext_mul(const ExtElt& a, const ExtElt& b) const {
  return {w_->mul(a.w, eps_power(b.w, a.k)), (a.k + b.k) % c_};
}

std::string TwistedWeylSystem::ext_string(const ExtElt& a) const {
  std::string s = w_->word_string(a.w);
  if (a.k != 0) s += "*phi^" + std::to_string(a.k);
  return s;
}

ExtElt TwistedWeylSystem::parse_ext(const std::string& s) const {
  auto star = s.find("*phi^");
  if (star == std::string::npos) return {w_->parse_word(s), 0};
  int k = std::stoi(s.substr(star + 5));
  return {w_->parse_word(s.substr(0, star)), ((k % c_) + c_) % c_};
}

std::vector<GenSet> TwistedWeylSystem::eps_stable_proper_subsets() const {
  std::vector<GenSet> out;
  GenSet full = (GenSet(1) << rank()) - 1;
  for (GenSet I = 0; I < full; ++I)
    if (eps_set(I) == I) out.push_back(I);
  std::sort(out.begin(), out.end(), [](GenSet a, GenSet b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    // Compare the sorted member lists lexicographically.
    for (int s = 0; s < 32; ++s) {
      bool ia = a & (GenSet(1) << s), ib = b & (GenSet(1) << s);
      if (ia != ib) return ia;
    }
    return false;
  });
  return out;
}

int TwistedWeylSystem::num_eps_orbits() const {
  int count = 0;
  std::vector<bool> seen(rank(), false);
  for (int s = 0; s < rank(); ++s) {
    if (seen[s]) continue;
    ++count;
    for (int t = s; !seen[t]; t = eps_gen_[t]) seen[t] = true;
  }
  return count;
}

bool TwistedWeylSystem::no_fixed_vector(int w) const {
  // Matrix of v -> w(eps(v)) minus the identity.
  auto m = w_->matrix(w);
  int rk = rank();
  std::vector<std::vector<long long>> a(rk, std::vector<long long>(rk));
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < rk; ++j) a[i][j] = m[i][eps_gen_[j]] - (i == j ? 1 : 0);
  return det_int(a) != 0;
}

std::shared_ptr<const TwistedWeylSystem> build_system(const std::string& family, int n) {
  if (family == "2A") {
    if (n < 2) throw std::invalid_argument("2A needs n >= 2");
    auto W = std::make_shared<const WeylGroup>(cartan_matrix('A', n - 1));
    std::vector<int> eps(n - 1);
    for (int i = 0; i < n - 1; ++i) eps[i] = n - 2 - i;
    return std::make_shared<const TwistedWeylSystem>(Family::TwistedA, n, W, eps, "2A" + std::to_string(n - 1));
  }
  if (family == "2D") {
    if (n < 2) throw std::invalid_argument("2D needs n >= 2");
    auto W = std::make_shared<const WeylGroup>(cartan_matrix('D', n));
    std::vector<int> eps(n);
    std::iota(eps.begin(), eps.end(), 0);
    std::swap(eps[n - 2], eps[n - 1]);
    return std::make_shared<const TwistedWeylSystem>(Family::TwistedD, n, W, eps, "2D" + std::to_string(n));
  }
  if (family == "3D4") {
    auto W = std::make_shared<const WeylGroup>(cartan_matrix('D', 4));
    return std::make_shared<const TwistedWeylSystem>(Family::Triality, 4, W, std::vector<int>{2, 1, 3, 0}, "3D4");
  }
  if (family == "2E6") {
    auto W = std::make_shared<const WeylGroup>(cartan_matrix('E', 6));
    return std::make_shared<const TwistedWeylSystem>(Family::TwistedE6, 6, W,
                                                     std::vector<int>{5, 1, 4, 3, 2, 0}, "2E6");
  }
  if (family.size() >= 2 && std::isupper(static_cast<unsigned char>(family[0]))) {
    int rk = std::stoi(family.substr(1));
    auto W = std::make_shared<const WeylGroup>(cartan_matrix(family[0], rk));
    std::vector<int> eps(rk);
    std::iota(eps.begin(), eps.end(), 0);
    return std::make_shared<const TwistedWeylSystem>(Family::Untwisted, rk, W, eps, family);
  }
  throw std::invalid_argument("unsupported family: " + family);
}

Subsystem parabolic_subsystem(const TwistedWeylSystem& parent, GenSet I) {
  if (parent.eps_set(I) != I) throw std::invalid_argument("subset is not eps-stable");
  Subsystem out;
  for (int s = 0; s < parent.rank(); ++s)
    if (I & (GenSet(1) << s)) out.gens.push_back(s);
  int k = static_cast<int>(out.gens.size());
  std::vector<int> local(parent.rank(), -1);
  for (int i = 0; i < k; ++i) local[out.gens[i]] = i;
  std::ostringstream label;
  label << parent.label() << "|I={";
  for (int i = 0; i < k; ++i) label << (i ? "," : "") << 's' << out.gens[i] + 1;
  label << '}';
  if (k == 0) {
    // The trivial group: realize it as nothing; callers handle W_I = {e}.
    throw std::invalid_argument("empty parabolic subsystem");
  }
  CartanMatrix a(k, std::vector<int>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) a[i][j] = parent.W().cartan()[out.gens[i]][out.gens[j]];
  std::vector<int> eps(k);
  for (int i = 0; i < k; ++i) eps[i] = local[parent.eps_gen(out.gens[i])];
  auto W = std::make_shared<const WeylGroup>(a);
  out.sys = std::make_shared<const TwistedWeylSystem>(Family::Untwisted, k, W, eps, label.str());
  out.embed.resize(W->size());
  for (std::size_t x = 0; x < W->size(); ++x) {
    std::vector<int> word = W->word(static_cast<int>(x));
    for (auto& s : word) s = out.gens[s];
    out.embed[x] = parent.W().from_word(word);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Permutation models

SignedPerm signed_perm_compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    int j = b[i];
    c[i] = j > 0 ? a[j - 1] : -a[-j - 1];
  }
  return c;
}

namespace {

SignedPerm d_generator(int n, int g) {
  SignedPerm p(n);
  std::iota(p.begin(), p.end(), 1);
  if (g < n - 1) {
    std::swap(p[g], p[g + 1]);
  } else {
    // s_n s_{n-1} s_n: n-1 -> -n, n -> -(n-1).
    p[n - 2] = -n;
    p[n - 1] = -(n - 1);
  }
  return p;
}

}  // namespace

SignedPerm signed_perm_of(const TwistedWeylSystem& sys, int w) {
  if (sys.family() != Family::TwistedD) throw std::invalid_argument("signed permutations need family 2D");
  int n = sys.n();
  SignedPerm p(n);
  std::iota(p.begin(), p.end(), 1);
  for (int g : sys.W().word(w)) p = signed_perm_compose(p, d_generator(n, g));
  return p;
}

SignedPerm coset_signed_perm(const TwistedWeylSystem& sys, int w) {
  SignedPerm p = signed_perm_of(sys, w);
  SignedPerm sn(p.size());
  std::iota(sn.begin(), sn.end(), 1);
  sn.back() = -static_cast<int>(p.size());
  return signed_perm_compose(p, sn);
}

std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const SignedPerm& p) {
  std::size_t n = p.size();
  std::vector<bool> seen(n, false);
  std::vector<int> pos, neg;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, sign = 1;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      int img = p[j];
      if (img < 0) sign = -sign;
      j = static_cast<std::size_t>(std::abs(img) - 1);
    }
    (sign > 0 ? pos : neg).push_back(len);
  }
  std::sort(pos.rbegin(), pos.rend());
  std::sort(neg.rbegin(), neg.rend());
  return {pos, neg};
}

std::vector<int> perm_of(const TwistedWeylSystem& sys, int w) {
  if (sys.family() != Family::TwistedA) throw std::invalid_argument("permutations need family 2A");
  int n = sys.n();
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  // p = product of transpositions along the word, composed as functions.
  for (int g : sys.W().word(w)) {
    std::vector<int> q = p;
    q[g] = p[g + 1];
    q[g + 1] = p[g];
    p = q;
  }
  return p;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
  std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j] - 1)) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace ht
