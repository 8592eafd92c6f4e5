// Symbol combinatorics for type D.
#include "ht/symbols.h"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ht {

namespace {

int subset_sum(const Subset& s) { return std::accumulate(s.begin(), s.end(), 0); }

Subset shifted_up(const Subset& s) {
  Subset out;
  for (int x : s) out.push_back(x + 1);
  return out;
}

// Depth-first enumeration of (M, N) with |M| + 2|N| = slots and
// sum M + 2 sum N = target over the values 0..top.
void bar_dfs(int v, int slots, int target, Subset& M, Subset& N, std::vector<BarSymbol>& out) {
  if (slots == 0 && target == 0) {
    if (!M.empty()) {
      BarSymbol b{M, N};
      std::sort(b.M.begin(), b.M.end());
      std::sort(b.N.begin(), b.N.end());
      out.push_back(std::move(b));
    }
    return;
  }
  if (v < 0 || slots <= 0 || target < 0) return;
  // Every value offers two slots of weight v; bound the reachable sums.
  long long hi = 0, lo = 0;
  for (int k = 0; k < slots; ++k) hi += std::max(0, v - k / 2);
  for (int k = 0; k < slots; ++k) lo += k / 2;
  if (slots > 2 * (v + 1) || target > hi || target < lo) return;
  M.push_back(v);
  bar_dfs(v - 1, slots - 1, target - v, M, N, out);
  M.pop_back();
  N.push_back(v);
  bar_dfs(v - 1, slots - 2, target - 2 * v, M, N, out);
  N.pop_back();
  bar_dfs(v - 1, slots, target, M, N, out);
}

void symbol_dfs(int v, int need_s, int need_t, int target, Subset& S, Subset& T, std::vector<Symbol>& out) {
  if (need_s == 0 && need_t == 0 && target == 0) {
    Symbol s{S, T};
    std::sort(s.S.begin(), s.S.end());
    std::sort(s.T.begin(), s.T.end());
    if (s.S != s.T) out.push_back(std::move(s));
    return;
  }
  if (v < 0 || target < 0 || need_s > v + 1 || need_t > v + 1) return;
  long long hi = 0;
  for (int k = 0; k < need_s; ++k) hi += v - k;
  for (int k = 0; k < need_t; ++k) hi += v - k;
  if (target > hi) return;
  for (int choice = 0; choice < 4; ++choice) {
    bool in_s = choice & 1, in_t = choice & 2;
    if ((in_s && need_s == 0) || (in_t && need_t == 0)) continue;
    if (in_s) S.push_back(v);
    if (in_t) T.push_back(v);
    symbol_dfs(v - 1, need_s - in_s, need_t - in_t, target - v * (in_s + in_t), S, T, out);
    if (in_s) S.pop_back();
    if (in_t) T.pop_back();
  }
}

void combinations(const Subset& M, std::size_t k, std::size_t start, Subset& cur, std::vector<Subset>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < M.size(); ++i) {
    cur.push_back(M[i]);
    combinations(M, k, i + 1, cur, out);
    cur.pop_back();
  }
}

void matchings(Subset rest, std::vector<Pair>& cur, std::vector<Arrangement>& out) {
  if (rest.empty()) {
    Arrangement a{cur};
    std::sort(a.pairs.begin(), a.pairs.end());
    out.push_back(std::move(a));
    return;
  }
  // Pair the smallest element with a partner leaving an even block inside.
  for (std::size_t j = 1; j < rest.size(); j += 2) {
    cur.emplace_back(rest[0], rest[j]);
    Subset inner(rest.begin() + 1, rest.begin() + static_cast<long>(j));
    Subset outer(rest.begin() + static_cast<long>(j) + 1, rest.end());
    // Inner and outer blocks are matched independently.
    std::vector<Arrangement> ins;
    std::vector<Pair> tmp;
    matchings(inner, tmp, ins);
    for (const auto& in : ins) {
      std::vector<Pair> both = cur;
      both.insert(both.end(), in.pairs.begin(), in.pairs.end());
      matchings(outer, both, out);
    }
    cur.pop_back();
  }
}

}  // namespace

std::string subset_string(const Subset& s) {
  std::ostringstream o;
  o << '{';
  for (std::size_t i = 0; i < s.size(); ++i) o << (i ? "," : "") << s[i];
  o << '}';
  return o.str();
}

std::string symbol_string(const Symbol& s) { return "(" + subset_string(s.S) + "," + subset_string(s.T) + ")"; }

std::string bar_symbol_string(const BarSymbol& b) {
  return "(" + subset_string(b.M) + "," + subset_string(b.N) + ")";
}

Subset sym_diff(const Subset& a, const Subset& b) {
  Subset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_intersection(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_minus(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int symbol_rank(const Symbol& s) {
  int m = s.m();
  return subset_sum(s.S) + subset_sum(s.T) - m * m + m;
}

int bar_symbol_rank(const BarSymbol& b) {
  int m = b.m();
  return subset_sum(b.M) + 2 * subset_sum(b.N) - m * m + m;
}

std::vector<Symbol> enum_X(int n, int m) {
  if (n < 1 || m < 0) throw std::invalid_argument("enum_X needs n >= 1, m >= 0");
  std::vector<Symbol> out;
  Subset S, T;
  symbol_dfs(n + m - 1, m, m, n + m * m - m, S, T, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BarSymbol> enum_barX(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("enum_barX needs n >= 1, m >= 1");
  std::vector<BarSymbol> out;
  Subset M, N;
  bar_dfs(n + m - 1, 2 * m, n + m * m - m, M, N, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BarSymbol> enum_barX(int n) { return enum_barX(n, n); }

Symbol shift(const Symbol& s) {
  Symbol out{{0}, {0}};
  for (int x : s.S) out.S.push_back(x + 1);
  for (int x : s.T) out.T.push_back(x + 1);
  return out;
}

BarSymbol shift(const BarSymbol& b) {
  BarSymbol out{shifted_up(b.M), {0}};
  for (int x : b.N) out.N.push_back(x + 1);
  return out;
}

Symbol shift_to(Symbol s, int m) {
  if (s.m() > m) throw std::invalid_argument("symbol is above the requested level");
  while (s.m() < m) s = shift(s);
  return s;
}

BarSymbol shift_to(BarSymbol b, int m) {
  if (b.m() > m) throw std::invalid_argument("bar-symbol is above the requested level");
  while (b.m() < m) b = shift(b);
  return b;
}

BarSymbol zeta(const Symbol& s) {
  if (s.S.size() != s.T.size() || s.S == s.T) throw std::invalid_argument("malformed symbol");
  return {sym_diff(s.S, s.T), set_intersection(s.S, s.T)};
}

std::vector<Subset> half_subsets(const Subset& M) {
  std::vector<Subset> out;
  Subset cur;
  combinations(M, M.size() / 2, 0, cur, out);
  return out;
}

Symbol fiber_symbol(const BarSymbol& b, const Subset& H) {
  if (H.size() * 2 != b.M.size()) throw std::invalid_argument("H has the wrong cardinal");
  return {set_union(b.N, H), set_union(b.N, set_minus(b.M, H))};
}

std::vector<Symbol> fiber(const BarSymbol& b) {
  std::vector<Symbol> out;
  for (const auto& H : half_subsets(b.M)) out.push_back(fiber_symbol(b, H));
  return out;
}

Bipartition bipartition_of_symbol(const Symbol& s) {
  auto part = [](const Subset& lam) {
    Partition p;
    for (std::size_t i = 0; i < lam.size(); ++i) {
      int a = lam[i] - static_cast<int>(i);
      if (a < 0) throw std::invalid_argument("malformed symbol entry");
      if (a > 0) p.push_back(a);
    }
    std::reverse(p.begin(), p.end());
    return p;
  };
  return {part(s.S), part(s.T)};
}

Symbol symbol_of_bipartition(const Bipartition& b, int m) {
  auto side = [m](const Partition& p) {
    if (static_cast<int>(p.size()) > m) throw std::invalid_argument("level too small for the bipartition");
    Subset out;
    std::vector<int> parts(m - p.size(), 0);
    parts.insert(parts.end(), p.rbegin(), p.rend());
    for (int i = 0; i < m; ++i) out.push_back(parts[i] + i);
    return out;
  };
  return {side(b.first), side(b.second)};
}

std::pair<Symbol, int> preferred_symbol(const Symbol& s) {
  Subset M = sym_diff(s.S, s.T);
  if (M.empty()) throw std::invalid_argument("degenerate symbol");
  bool in_t = std::binary_search(s.T.begin(), s.T.end(), M.front());
  if (in_t) return {s, 1};
  return {Symbol{s.T, s.S}, -1};
}

std::vector<int> t_map(const Subset& M) {
  std::vector<int> out(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) out[i] = static_cast<int>(i % 2);
  return out;
}

Subset t_fiber(const Subset& M, int i) {
  Subset out;
  for (std::size_t k = 0; k < M.size(); ++k)
    if (static_cast<int>(k % 2) == i) out.push_back(M[k]);
  return out;
}

Subset sharp(const Subset& M, const Subset& H) {
  if (H.size() * 2 != M.size()) throw std::invalid_argument("H has the wrong cardinal");
  return sym_diff(t_fiber(M, 1), H);
}

int EtaForm::operator()(const Subset& E) const {
  // The coordinate of E on {m_i, m_{i+1}} is the parity of |E n {m_0..m_i}|.
  int parity = 0, value = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i + 1 < M.size(); ++i) {
    while (j < E.size() && E[j] <= M[i]) {
      if (E[j] == M[i]) parity ^= 1;
      ++j;
    }
    value ^= parity & bits[i];
  }
  return value;
}

std::string EtaForm::str() const {
  std::string s;
  for (int b : bits) s.push_back(static_cast<char>('0' + b));
  return s;
}

std::vector<EtaForm> enum_eta(const Subset& M) {
  if (M.size() < 2 || M.size() % 2) throw std::invalid_argument("enum_eta needs |M| even and >= 2");
  std::size_t k = M.size() - 1;  // basis size
  std::size_t last_even = k - 1;  // k - 1 = |M| - 2 is even
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < k; ++i)
    if (i != last_even) free.push_back(i);
  std::vector<EtaForm> out;
  for (unsigned code = 0; code < (1u << free.size()); ++code) {
    EtaForm e{M, std::vector<int>(k, 0)};
    for (std::size_t f = 0; f < free.size(); ++f)
      e.bits[free[f]] = (code >> (free.size() - 1 - f)) & 1;
    // eta(M) = sum of the even-indexed coordinates = 1.
    int s = 0;
    for (std::size_t i = 0; i < k; i += 2)
      if (i != last_even) s ^= e.bits[i];
    e.bits[last_even] = s ^ 1;
    out.push_back(std::move(e));
  }
  return out;
}

EtaForm parse_eta(const Subset& M, const std::string& bits) {
  if (bits.size() + 1 != M.size()) throw std::invalid_argument("eta bit string has the wrong length");
  EtaForm e{M, {}};
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("eta bits must be 0 or 1");
    e.bits.push_back(c - '0');
  }
  if (e(M) != 1) throw std::invalid_argument("eta(M) must be 1");
  return e;
}

std::string arrangement_string(const Arrangement& a) {
  std::ostringstream o;
  o << '{';
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    o << (i ? "," : "") << '(' << a.pairs[i].first << ',' << a.pairs[i].second << ')';
  o << '}';
  return o.str();
}

std::vector<Arrangement> admissible_arrangements(const Subset& M) {
  if (M.size() % 2) throw std::invalid_argument("M must have even cardinal");
  std::vector<Arrangement> out;
  std::vector<Pair> cur;
  matchings(M, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_admissible(const Subset& M, const Arrangement& a) {
  Subset seen;
  for (auto [x, y] : a.pairs) {
    if (x >= y) return false;
    seen.push_back(x);
    seen.push_back(y);
  }
  std::sort(seen.begin(), seen.end());
  if (seen != M) return false;
  for (auto [a1, b1] : a.pairs)
    for (auto [a2, b2] : a.pairs) {
      bool nested = (a1 <= a2 && b2 <= b1) || (a2 <= a1 && b1 <= b2);
      bool disjoint = b1 < a2 || b2 < a1;
      if (!nested && !disjoint) return false;
    }
  return true;
}

std::vector<Subset> cc_span(const Arrangement& phi) {
  std::vector<Subset> out;
  std::size_t k = phi.pairs.size();
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    Subset e;
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) e = sym_diff(e, {phi.pairs[i].first, phi.pairs[i].second});
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset arrangement_H(const Subset& M, const Arrangement& phi, unsigned psi) {
  auto t = [&](int x) {
    return static_cast<int>(std::lower_bound(M.begin(), M.end(), x) - M.begin()) % 2;
  };
  Subset H;
  for (std::size_t i = 0; i < phi.pairs.size(); ++i) {
    int want = (psi >> i & 1) ? 0 : 1;  // Psi^0 and (Phi - Psi)^1
    for (int x : {phi.pairs[i].first, phi.pairs[i].second})
      if (t(x) == want) H.push_back(x);
  }
  std::sort(H.begin(), H.end());
  return H;
}

SymbolCombination c_function(const BarSymbol& b, const Arrangement& phi, unsigned marked) {
  if (!is_admissible(b.M, phi)) throw std::invalid_argument("arrangement is not admissible");
  if (std::popcount(marked) % 2 == 0) throw std::invalid_argument("marked subset must have odd cardinal");
  SymbolCombination out;
  std::size_t k = phi.pairs.size();
  for (unsigned psi = 0; psi < (1u << k); ++psi) {
    Rational c(1, 2);
    if (std::popcount(marked & psi) % 2) c = -c;
    out.emplace_back(fiber_symbol(b, arrangement_H(b.M, phi, psi)), c);
  }
  return out;
}

SymbolCombination c_function_xi(const BarSymbol& b, const Arrangement& phi, const std::vector<int>& xi) {
  if (xi.size() != phi.pairs.size()) throw std::invalid_argument("xi needs one value per pair");
  unsigned marked = 0;
  for (std::size_t i = 0; i < xi.size(); ++i)
    if (xi[i]) marked |= 1u << i;
  return c_function(b, phi, marked);
}

SymbolCombination normalize(const SymbolCombination& c) {
  std::map<Symbol, Rational> acc;
  for (const auto& [s, q] : c) {
    auto [p, sign] = preferred_symbol(s);
    acc[p] += sign * q;
  }
  SymbolCombination out;
  for (auto& [s, q] : acc)
    if (q != 0) out.emplace_back(s, q);
  return out;
}

Rational symbol_inner(const SymbolCombination& a, const SymbolCombination& b) {
  auto na = normalize(a), nb = normalize(b);
  std::map<Symbol, Rational> mb(nb.begin(), nb.end());
  Rational s = 0;
  for (const auto& [sym, q] : na) {
    auto it = mb.find(sym);
    if (it != mb.end()) s += q * it->second;
  }
  return s;
}

Integer p2(int k) {
  if (k < 0) return 0;
  return static_cast<long>(bipartitions(k).size());
}

Integer object_count(int n) {
  Integer total = 0;
  for (const auto& b : enum_barX(n)) total += Integer(1) << (b.M.size() - 2);
  return total;
}

Integer object_count_formula(int n) {
  Integer total = 0;
  for (int s = 1; s * s <= n; s += 2) total += p2(n - s * s);
  return total;
}

}  // namespace ht
