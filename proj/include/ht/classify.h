// Classification tables of unipotent character sheaves on the twisted
// component: objects, the pairing (A : R_E) against the preferred extensions,
// grouping by two-sided cell, the sign eps^A, duality A -> A°, cuspidality and
// the consistency checks run on a finished table.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ht/laurent.h"
#include "ht/reps.h"
#include "ht/symbols.h"

namespace ht {

// One column of a table: a preferred extension E.
struct TableColumn {
  std::string label;  // label of E_0
  int a = 0;
  std::string cell;   // key of the two-sided cell of E_0
  int sgn_column = -1;  // column E' with E tensor sgn = sgn_sign * E'
  int sgn_sign = 1;
  std::optional<Symbol> symbol;  // 2D: E = [[S, T]]
  friend bool operator==(const TableColumn&, const TableColumn&) = default;
};

// A cell of the table: its key, columns and objects (indices into the
// table's lists).  For 2D the cell carries its bar-symbol.
struct TableCell {
  std::string key;
  std::optional<BarSymbol> bar;
  std::vector<int> columns;
  std::vector<int> objects;
  friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct SheafLabel {
  std::string family;
  std::string cell;   // cell key
  std::string datum;  // partition label (2A), eta bits (2D), or the object name
  friend bool operator==(const SheafLabel&, const SheafLabel&) = default;
};

struct ClassificationTable {
  std::string family;
  int n = 0;
  std::vector<TableColumn> columns;  // in the order of the preferred set
  std::vector<SheafLabel> objects;   // grouped by cell, cells in column order
  std::vector<TableCell> cells;
  std::vector<std::vector<Rational>> pairing;  // pairing[object][column]
  std::vector<int> eps_sign;
  std::vector<bool> cuspidal;
  std::vector<int> dual;       // A -> A°
  std::vector<int> dual_sign;  // d(A) = dual_sign * A°

  int find_object(const std::string& datum) const;
  int find_column(const std::string& label) const;
  friend bool operator==(const ClassificationTable&, const ClassificationTable&) = default;
};

// family: "2A" (n >= 2), "2D" (n >= 2), "3D4", "2E6".  Throws
// std::invalid_argument for anything else.  Duality is filled in; the
// cuspidal flags come from class-wise character sums (2A, 2D) or from the
// stored data (3D4, 2E6, re-verified by cuspidal_objects).
ClassificationTable classify(const std::string& family, int n = 0);

// The a = 7 family of 2E6 is printed both as seven relations among the R_E
// and as five resolved lines, and the two disagree in the sign of R_20_7.
// `relations` (the default of classify) solves the relations; `verbatim`
// copies the resolved lines as printed.
enum class E6Reading { relations, verbatim };
ClassificationTable classify_2e6(E6Reading reading);

// The 2D entry (A_eta : R_[[N u H, N u (M - H)]]) = 2^{1 - |M|/2} (-1)^{eta(H#)}.
Rational type_d_entry(const EtaForm& eta, const Subset& H);

// A is cuspidal iff sum_E tr(w phi, E) (A : R_E) = 0 for every twisted class
// which is not D-anisotropic.  Evaluated on the system's own twisted classes
// with the preferred extensions (desk ranks).
std::vector<int> cuspidal_objects(const ClassificationTable& t, const std::vector<ExtIrr>& ext,
                                  const TwistedWeylSystem& sys);
// The same test for 2A and 2D evaluated class-wise on cycle types, usable at
// any rank: a class of S_n (after w -> w w_0) is not anisotropic iff it has a
// cycle of even length; a class of W_n - W'_n is not anisotropic iff it has a
// positive cycle.
std::vector<int> cuspidal_by_cycle_types(const ClassificationTable& t);

// The object permutation A -> A° with signs, from d(R_E) = R_{E tensor sgn}:
// the row of A° is the transformed row of A up to sign.  Where several
// objects share a row (the g, h of the a = 7 family of 2E6) a fixed point is
// preferred.  Throws std::runtime_error if no consistent signed permutation
// exists.
std::pair<std::vector<int>, std::vector<int>> duality(const ClassificationTable& t);

// Object coordinates of R_f for f = sum_E coords[E] phi_E.
std::vector<Rational> decompose(const std::vector<Rational>& coords, const ClassificationTable& t);
// The same for a class function on W phi; the columns of t are matched to
// the preferred set of rd by label.  Throws std::domain_error if f is not in
// the span of the phi_E.
std::vector<Rational> decompose(const CosetClassFunction& f, const ClassificationTable& t, const RepData& rd);

// A relation sum_E k_E R_E = sum_A k_A A printed with an exceptional table.
struct PrintedRelation {
  std::string text;
  std::vector<std::pair<std::string, Rational>> columns;  // column label, coefficient
  std::vector<std::pair<std::string, Rational>> objects;  // object name, coefficient
  // The printed line for -R_20_7, whose sign contradicts the relations above
  // it; no table satisfies both.
  bool sign_conflict = false;
};
// The printed relations of 3D4 and 2E6 (empty for other families).
std::vector<PrintedRelation> printed_relations(const std::string& family);
// Texts of the printed relations that do not hold in t.
std::vector<std::string> failing_relations(const ClassificationTable& t);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  // Hecke-side checks (aleph positivity, eps^A, induction) need RepData for
  // the system; left empty they are skipped.
  std::shared_ptr<const RepData> rep;
};

// Gram identity, nonzero rows and columns, cell purity, duality, the 2D
// object count, the printed relations (all but the one sign conflict) and, with RepData, the column/cell agreement, positivity of
// decompose(aleph_x), the eps^A signs, cuspidality from characters and the
// induction check.
std::vector<CheckResult> verify_table(const ClassificationTable& t, const VerifyOptions& opt = {});

}  // namespace ht
