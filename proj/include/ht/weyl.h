// Finite Weyl groups realized from a Cartan matrix, their diagram
// automorphisms, the extended group W~ = W x| <phi>, twisted conjugacy classes
// and the D-anisotropy predicate.
//
// Elements are integers 0..|W|-1 in the global order (length, lexicographic
// reduced word); 0 is the identity.  The canonical form of an element is the
// tuple of images of the simple roots, which determines it uniquely.
#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ht {

using CartanMatrix = std::vector<std::vector<int>>;
using GenSet = std::uint32_t;  // bitmask of generators

// Cartan matrix A with s_i(alpha_j) = alpha_j - A[i][j] alpha_i.  Types A, B,
// C, D, E, F, G.  D_n numbers the chain 1..n-1 and attaches node n to node
// n-2 (so D_2 = A1 x A1 and D_3 = A_3 with node 1 in the middle).
CartanMatrix cartan_matrix(char type, int rank);

class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix a, std::size_t max_order = 2000000);

  int rank() const { return rank_; }
  std::size_t size() const { return n_; }
  const CartanMatrix& cartan() const { return cartan_; }
  int coxeter_entry(int i, int j) const;

  int identity() const { return 0; }
  int longest() const { return static_cast<int>(n_) - 1; }
  int length(int w) const { return len_[w]; }
  int sign(int w) const { return (len_[w] % 2) ? -1 : 1; }
  int rmul(int w, int s) const { return rmul_[static_cast<std::size_t>(w) * rank_ + s]; }
  int lmul(int s, int w) const { return lmul_[static_cast<std::size_t>(w) * rank_ + s]; }
  int mul(int a, int b) const;
  int inverse(int w) const { return inv_[w]; }
  bool is_left_descent(int s, int w) const { return len_[lmul(s, w)] < len_[w]; }
  bool is_right_descent(int w, int s) const { return len_[rmul(w, s)] < len_[w]; }
  GenSet left_descents(int w) const;
  GenSet right_descents(int w) const;
  // Generators occurring in a (any) reduced word.
  GenSet support(int w) const { return support_[w]; }
  // Lexicographically smallest reduced word.
  const std::vector<int>& word(int w) const { return words_[w]; }
  // Product of an arbitrary word of generators.
  int from_word(const std::vector<int>& word) const;
  bool has_mul_table() const { return !mul_.empty(); }

  // "s1.s3.s2" (1-based generator names), "e" for the identity.
  std::string word_string(int w) const;
  int parse_word(const std::string& s) const;

  bool bruhat_leq(int y, int x) const;

  // Positive roots come first; roots are in simple-root coordinates.
  std::size_t num_roots() const { return roots_.size(); }
  std::size_t num_positive_roots() const { return roots_.size() / 2; }
  const std::vector<int>& root(std::size_t i) const { return roots_[i]; }
  // Image of root i under w.
  int act_on_root(int w, int root) const;
  // Matrix of w on the root lattice in the simple-root basis; column j is w(alpha_j).
  std::vector<std::vector<int>> matrix(int w) const;
  // Order of w as a group element.
  int order(int w) const;

  // Elements of the standard parabolic subgroup W_I, in global order.
  std::vector<int> parabolic_elements(GenSet I) const;

 private:
  int rank_;
  std::size_t n_;
  CartanMatrix cartan_;
  std::vector<std::vector<int>> roots_;
  std::vector<std::vector<int>> refl_;  // refl_[i][root] = s_i(root)
  std::vector<int> len_, rmul_, lmul_, inv_, mul_;
  std::vector<GenSet> support_;
  std::vector<std::vector<int>> words_;
  std::vector<std::uint8_t> simple_images_;  // n_ x rank_
};

// Element of W~: x * phi^k with 0 <= k < c.
struct ExtElt {
  int w = 0;
  int k = 0;
  friend bool operator==(const ExtElt& a, const ExtElt& b) { return a.w == b.w && a.k == b.k; }
  friend bool operator<(const ExtElt& a, const ExtElt& b) {
    return a.k != b.k ? a.k < b.k : a.w < b.w;
  }
};

enum class Family { TwistedA, TwistedD, Triality, TwistedE6, Untwisted };

struct ClassPartition {
  std::vector<int> class_of;             // element -> class id
  std::vector<std::vector<int>> members;  // sorted; members[i][0] is the representative
  std::size_t size() const { return members.size(); }
  int rep(std::size_t i) const { return members[i][0]; }
};

class TwistedWeylSystem {
 public:
  TwistedWeylSystem(Family family, int n, std::shared_ptr<const WeylGroup> w,
                    std::vector<int> eps_gen, std::string label);

  Family family() const { return family_; }
  int n() const { return n_; }
  const std::string& label() const { return label_; }
  const WeylGroup& W() const { return *w_; }
  std::shared_ptr<const WeylGroup> W_ptr() const { return w_; }
  int rank() const { return w_->rank(); }
  const std::vector<int>& eps_gen() const { return eps_gen_; }
  int eps_gen(int s) const { return eps_gen_[s]; }
  int eps(int w) const { return eps_elt_[w]; }
  int eps_power(int w, int k) const;
  GenSet eps_set(GenSet I) const;
  int r() const { return r_; }
  int c() const { return c_; }
  std::vector<std::vector<int>> coxeter_matrix() const;

  ExtElt ext_mul(const ExtElt& a, const ExtElt& b) const;
  int ext_length(const ExtElt& a) const { return w_->length(a.w); }
  std::string ext_string(const ExtElt& a) const;
  ExtElt parse_ext(const std::string& s) const;

  // Orbits of x -> y x eps(y)^-1, ordered by representative.
  const ClassPartition& twisted_classes() const { return twisted_; }
  // Ordinary conjugacy classes of W.
  const ClassPartition& conjugacy_classes() const { return conj_; }

  // Proper eps-stable subsets of the generators, sorted by (size, members).
  std::vector<GenSet> eps_stable_proper_subsets() const;
  // Number of eps-orbits on the generators.
  int num_eps_orbits() const;

  // By the definition: no twisted conjugate of w lies in W_I for a proper
  // eps-stable I.  Evaluated class-wise from the supports of elements.
  bool is_D_anisotropic(int w) const { return anisotropic_[twisted_.class_of[w]]; }
  const std::vector<bool>& anisotropic_classes() const { return anisotropic_; }
  // w composed with the diagram automorphism has no fixed vector on the root
  // lattice.
  bool no_fixed_vector(int w) const;

 private:
  Family family_;
  int n_;
  std::shared_ptr<const WeylGroup> w_;
  std::vector<int> eps_gen_;
  std::string label_;
  std::vector<int> eps_elt_;
  int r_ = 1, c_ = 2;
  ClassPartition twisted_, conj_;
  std::vector<bool> anisotropic_;
};

// family: "2A" (W = S_n, n >= 2), "2D" (W = W'_n, n >= 2), "3D4", "2E6", or
// an untwisted type such as "A3", "D4", "B3", "E6".  For the fixed families n
// is ignored.
std::shared_ptr<const TwistedWeylSystem> build_system(const std::string& family, int n = 0);

// The system attached to a standard parabolic subgroup W_I (I eps-stable),
// together with the embedding of its elements into the parent group.
struct Subsystem {
  std::shared_ptr<const TwistedWeylSystem> sys;
  std::vector<int> gens;   // parent generator of each sub generator
  std::vector<int> embed;  // sub element -> parent element
};
Subsystem parabolic_subsystem(const TwistedWeylSystem& parent, GenSet I);

// Signed permutation of {1..n} (values +-1..n): w(i) = p[i-1].
using SignedPerm = std::vector<int>;
SignedPerm signed_perm_compose(const SignedPerm& a, const SignedPerm& b);  // a after b
// For 2D: the image of w in W_n under W'_n -> W_n.
SignedPerm signed_perm_of(const TwistedWeylSystem& sys, int w);
// For 2D: the image of w phi, that is w s_n.
SignedPerm coset_signed_perm(const TwistedWeylSystem& sys, int w);
// Cycle type of a signed permutation: (positive cycle lengths, negative cycle
// lengths), each sorted decreasingly.
std::pair<std::vector<int>, std::vector<int>> signed_cycle_type(const SignedPerm& p);
// For 2A: the permutation of {1..n} (values 1..n) attached to w in S_n.
std::vector<int> perm_of(const TwistedWeylSystem& sys, int w);
std::vector<int> cycle_type(const std::vector<int>& perm);

}  // namespace ht
