// Symbols (S, T) and bar-symbols (M, N) for type D, the F_2 spaces V_M with
// their affine sets of linear forms V'_M, the maps t_M and H -> H^#,
// admissible arrangements and the half-sums c(M, N, Phi, Phi^).
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ht/chartable.h"
#include "ht/laurent.h"

namespace ht {

// Sorted subset of N.
using Subset = std::vector<int>;

struct Symbol {
  Subset S, T;
  int m() const { return static_cast<int>(S.size()); }
  friend bool operator==(const Symbol& a, const Symbol& b) { return a.S == b.S && a.T == b.T; }
  friend bool operator<(const Symbol& a, const Symbol& b) {
    return a.S != b.S ? a.S < b.S : a.T < b.T;
  }
};

struct BarSymbol {
  Subset M, N;
  int m() const { return static_cast<int>(M.size() / 2 + N.size()); }
  friend bool operator==(const BarSymbol& a, const BarSymbol& b) { return a.M == b.M && a.N == b.N; }
  friend bool operator<(const BarSymbol& a, const BarSymbol& b) {
    return a.M != b.M ? a.M < b.M : a.N < b.N;
  }
};

std::string subset_string(const Subset& s);  // "{0,2}"
std::string symbol_string(const Symbol& s);  // "({0,2},{1})"
std::string bar_symbol_string(const BarSymbol& b);

// Set operations on sorted subsets; sym_diff is the sum E * E' of V_M.
Subset sym_diff(const Subset& a, const Subset& b);
Subset set_union(const Subset& a, const Subset& b);
Subset set_intersection(const Subset& a, const Subset& b);
Subset set_minus(const Subset& a, const Subset& b);

// The rank n of a symbol or bar-symbol from its defining sum.
int symbol_rank(const Symbol& s);
int bar_symbol_rank(const BarSymbol& b);

// All (S, T) in X_n^m, lexicographically sorted.
std::vector<Symbol> enum_X(int n, int m);
// All (M, N) in bar X_n^m with m = n (the canonical representatives), sorted.
std::vector<BarSymbol> enum_barX(int n);
std::vector<BarSymbol> enum_barX(int n, int m);

Symbol shift(const Symbol& s);
BarSymbol shift(const BarSymbol& b);
// The representative at level m >= current level.
Symbol shift_to(Symbol s, int m);
BarSymbol shift_to(BarSymbol b, int m);

BarSymbol zeta(const Symbol& s);
// The symbols (N u H, N u (M - H)) for H of cardinal |M|/2, by H increasing.
std::vector<Symbol> fiber(const BarSymbol& b);
Symbol fiber_symbol(const BarSymbol& b, const Subset& H);
// All subsets of M of cardinal |M|/2, lexicographically.
std::vector<Subset> half_subsets(const Subset& M);

// (alpha, beta) with alpha_i = lambda_i - (i - 1), beta_i = mu_i - (i - 1).
Bipartition bipartition_of_symbol(const Symbol& s);
Symbol symbol_of_bipartition(const Bipartition& b, int m);

// Of the two symbols (S, T) and (T, S) with the same restriction to W'_n, the
// preferred one puts min(S * T) into T.  Returns it with the sign relating
// [[s]] to it on the coset (+1 when s is preferred).
std::pair<Symbol, int> preferred_symbol(const Symbol& s);

// t_M(x) = |{x' in M : x' < x}| mod 2, listed in the order of M.
std::vector<int> t_map(const Subset& M);
// t_M^-1(i) as a subset of M.
Subset t_fiber(const Subset& M, int i);
// H^# = t_M^-1(1) * H.
Subset sharp(const Subset& M, const Subset& H);

// A linear form on V_M with eta(M) = 1, by its values on the basis
// {m_1, m_2}, {m_2, m_3}, ... of consecutive pairs of M.
struct EtaForm {
  Subset M;
  std::vector<int> bits;  // |M| - 1 values in {0, 1}
  int operator()(const Subset& E) const;
  std::string str() const;  // the bits as a string, e.g. "010"
  friend bool operator==(const EtaForm& a, const EtaForm& b) { return a.M == b.M && a.bits == b.bits; }
};
// All 2^{|M|-2} forms; the free bits (all but the last even-indexed one) are
// counted in binary with the first basis vector most significant.
std::vector<EtaForm> enum_eta(const Subset& M);
EtaForm parse_eta(const Subset& M, const std::string& bits);

using Pair = std::pair<int, int>;

struct Arrangement {
  std::vector<Pair> pairs;  // sorted, each pair (smaller, larger)
  friend bool operator==(const Arrangement& a, const Arrangement& b) { return a.pairs == b.pairs; }
  friend bool operator<(const Arrangement& a, const Arrangement& b) { return a.pairs < b.pairs; }
};
std::string arrangement_string(const Arrangement& a);
// Perfect matchings of M by pairs whose closed intervals are nested or
// disjoint, sorted.
std::vector<Arrangement> admissible_arrangements(const Subset& M);
bool is_admissible(const Subset& M, const Arrangement& a);

// The subspace cc_Phi of V_M spanned by the pairs of Phi, as all its elements.
std::vector<Subset> cc_span(const Arrangement& phi);

// A formal combination of the symbols [[S, T]] with rational coefficients.
using SymbolCombination = std::vector<std::pair<Symbol, Rational>>;

// Psi^0 u (Phi - Psi)^1 for Psi a subset of Phi (given by a bitmask on pairs).
Subset arrangement_H(const Subset& M, const Arrangement& phi, unsigned psi);
// c(M, N, Phi, Phi^) for the marked subset Phi^ (bitmask on pairs, odd size).
SymbolCombination c_function(const BarSymbol& b, const Arrangement& phi, unsigned marked);
// The same for the linear form xi on cc_Phi given by its values on the pairs.
SymbolCombination c_function_xi(const BarSymbol& b, const Arrangement& phi, const std::vector<int>& xi);

// Sum of the two combinations after rewriting every symbol in preferred
// form; the result is sorted by symbol.
SymbolCombination normalize(const SymbolCombination& c);
// Inner product for the orthonormal system [[S, T]] = -[[T, S]].
Rational symbol_inner(const SymbolCombination& a, const SymbolCombination& b);

// Number of bipartitions of k by enumeration.
Integer p2(int k);
// sum over bar X_n of 2^{|M| - 2}.
Integer object_count(int n);
// sum over odd s >= 1 with s^2 + k = n of p_2(k).
Integer object_count_formula(int n);

}  // namespace ht
