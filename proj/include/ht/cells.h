// The a-function, gamma constants, left and two-sided cells with their order,
// the distinguished involutions, the ring J = H^inf and the homomorphism Phi
// (with its specialization Phi^1 at v = 1).
#pragma once

#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "ht/hecke.h"
#include "ht/linalg.h"

namespace ht {

// Shared KL tables, keyed by Cartan matrix (element numbering is a function of
// the Cartan matrix, so systems with the same W share one table).
std::shared_ptr<const KLTable> shared_kl_table(std::shared_ptr<const WeylGroup> W);

class CellData {
 public:
  explicit CellData(std::shared_ptr<const KLTable> kl);

  const WeylGroup& W() const { return kl_->W(); }
  const KLTable& kl() const { return *kl_; }
  std::size_t size() const { return a_.size(); }

  int a(int z) const { return a_[z]; }
  // gamma(x, y, z) is the coefficient gamma_{x,y,z^-1}: the v^{a(z)} coefficient
  // of r_{x,y}^z.
  int gamma(int x, int y, int z) const;
  // t_x t_y = sum_z gamma(x, y, z) t_z, as (z, coefficient) pairs, z increasing.
  const std::vector<std::pair<int, int>>& t_mul(int x, int y) const { return tmul_[idx(x, y)]; }
  // Highest v-degree of r_{x,y}^z over all (x, y) attaining it, per z.
  int max_r_degree(int z) const { return a_[z]; }

  // Two-sided cells, sorted by (a, smallest element); members increasing.
  const std::vector<std::vector<int>>& cells() const { return cells_; }
  int cell_of(int w) const { return cell_of_[w]; }
  int cell_a(int c) const { return a_[cells_[c][0]]; }
  // Covering pairs (lower, upper) of the partial order on cells induced by the
  // preorder: lower <= upper when c_lower occurs in h c_upper h'.
  const std::vector<std::pair<int, int>>& order() const { return order_; }
  // Reflexive-transitive order on cells.
  bool cell_leq(int lower, int upper) const { return cell_leq_[lower][upper]; }

  const std::vector<std::vector<int>>& left_cells() const { return left_cells_; }
  int left_cell_of(int w) const { return left_cell_of_[w]; }
  const std::vector<std::vector<int>>& right_cells() const { return right_cells_; }
  int right_cell_of(int w) const { return right_cell_of_[w]; }

  // Distinguished involutions: the support of the unit of J (sorted).
  const std::vector<int>& distinguished() const { return dist_; }
  bool is_distinguished(int w) const { return is_dist_[w]; }

  // Phi(c_x^dagger) = sum_z phi_coeff(x)[z] t_z.
  const std::vector<std::pair<int, LaurentPoly>>& phi(int x) const { return phi_[x]; }
  // Phi^1 in the group basis: w -> sum_z phi1()[w][z] t_z, and its inverse
  // t_z -> sum_w phi1_inverse()[z][w] w.
  const Mat<Rational>& phi1() const { return phi1_; }
  const Mat<Rational>& phi1_inverse() const { return phi1_inv_; }

 private:
  std::size_t idx(int x, int y) const { return static_cast<std::size_t>(x) * a_.size() + y; }
  void compute_r_data();
  void compute_cells();
  void compute_distinguished();
  void compute_phi1();

  std::shared_ptr<const KLTable> kl_;
  std::vector<int> a_;
  std::vector<std::vector<std::pair<int, int>>> tmul_;
  std::vector<int> cell_of_, left_cell_of_, right_cell_of_;
  std::vector<std::vector<int>> cells_, left_cells_, right_cells_;
  std::vector<std::pair<int, int>> order_;
  std::vector<std::vector<bool>> cell_leq_;
  std::vector<int> dist_;
  std::vector<bool> is_dist_;
  std::vector<std::vector<std::pair<int, LaurentPoly>>> phi_;
  Mat<Rational> phi1_, phi1_inv_;
};

// Cell data shared across systems with the same Cartan matrix.
std::shared_ptr<const CellData> shared_cell_data(std::shared_ptr<const WeylGroup> W);

// Indices of two-sided cells c with eps(c) = c.
std::vector<int> eps_stable_cells(const TwistedWeylSystem& sys, const CellData& cd);

// The c-basis expansion of c_x c_y (all z) through the cell engine's integer
// recursion; agrees with r_constants.
std::map<int, LaurentPoly> r_row(const CellData& cd, int x, int y);

}  // namespace ht
