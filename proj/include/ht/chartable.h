// Character tables of Weyl groups: partitions and bipartitions, the
// Murnaghan-Nakayama rule for S_n and W_n, an exact Dixon-Schneider
// construction for any W given its conjugacy classes, and family labels.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ht/laurent.h"
#include "ht/weyl.h"

namespace ht {

// Partitions are weakly decreasing lists of positive parts.
using Partition = std::vector<int>;
using Bipartition = std::pair<Partition, Partition>;

int partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// sum_i (i - 1) lambda_i
int partition_n(const Partition& p);
// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(int n);
// All ordered pairs (alpha, beta) with |alpha| + |beta| = n, by |alpha|
// decreasing and then reverse lexicographically.
std::vector<Bipartition> bipartitions(int n);
// "[2,1]"; the empty partition is "[]".
std::string partition_string(const Partition& p);
std::string bipartition_string(const Bipartition& b);

// All partitions lambda + (a rim hook of size k), with the hook signs
// (-1)^{height}.
std::vector<std::pair<Partition, int>> add_rim_hooks(const Partition& p, int k);

// chi_lambda(mu) for every partition lambda of |mu|.
std::map<Partition, Integer> sn_characters_at(const Partition& cycle_type);
// chi_{(alpha,beta)} on the signed cycle type (positive cycles, negative
// cycles) for every bipartition.  Conventions: ((n), []) is the unit
// character; a negative cycle contributes a factor -1 on the beta side.
std::map<Bipartition, Integer> wn_characters_at(const Partition& positive, const Partition& negative);

struct CharTable {
  std::vector<int> reps;         // class representatives
  std::vector<long long> sizes;  // class sizes
  std::vector<int> class_of;     // element -> class
  int identity_class = 0;
  std::vector<std::vector<long long>> chi;  // chi[i][class]
  std::vector<std::string> labels;

  std::size_t num_irr() const { return chi.size(); }
  std::size_t num_classes() const { return reps.size(); }
  long long dim(std::size_t i) const { return chi[i][identity_class]; }
  long long value(std::size_t i, int w) const { return chi[i][class_of[w]]; }
  // Index of the character with this label; throws if absent.
  int find(const std::string& label) const;
  // Index of chi tensor sign, and of chi composed with eps.
  int tensor_sign(const WeylGroup& W, std::size_t i) const;
  int compose(const TwistedWeylSystem& sys, std::size_t i) const;
  bool eps_invariant(const TwistedWeylSystem& sys, std::size_t i) const {
    return compose(sys, i) == static_cast<int>(i);
  }
};

// Irreducible characters from the class algebra (Dixon-Schneider with exact
// integer eigenvalues).  Characters are sorted by (dimension, values).
CharTable dixon_schneider(const WeylGroup& W, const ClassPartition& classes);

// Labeled table for a system: partitions for 2A (and type A), unordered
// bipartitions "{[..],[..]}" (with +/- for a split pair) for 2D, the names
// 1,1',2,4,4',6,8 for the triality-stable characters of 3D4, and N_a names
// for E6 (N = dimension, a = a-value, ~ for the second of two).  Other types
// get "d<dim>.<k>".  Cached per system.
std::shared_ptr<const CharTable> char_table(std::shared_ptr<const TwistedWeylSystem> sys);

// The b-value (lowest degree in the fake degree) of every character.
std::vector<int> b_values(const WeylGroup& W, const CharTable& t);

}  // namespace ht
