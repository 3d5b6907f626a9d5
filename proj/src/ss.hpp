#pragma once

#include <array>
#include <map>
#include <optional>

#include "stems.hpp"

namespace morincob {

enum class CellStatus { known, unknown, indeterminate };

// unknown: depends on stem data past the table (or on a product the table
// does not store). indeterminate: depends on an integral second differential
// the data only pins modulo the class of finite 2-groups.
struct Cell {
  CellStatus status = CellStatus::known;
  FinAbGroup group;
};

struct Differential {
  CellStatus status = CellStatus::known;
  GroupHom map;  // valid when status == known
};

struct MaybeGroup {
  CellStatus status = CellStatus::known;
  FinAbGroup group;
};

// One page of the three-column spectral sequence for prim maps: columns
// i = 0, 1, 2, rows j = 0 .. jmax, first page cell (i, j) = pi^s(j - i).
// Differentials on page r run (i, j) -> (i - r, j + r - 1). Pages keep one
// internal padding row (jmax + 1) so the second differential out of the top
// row has its target available; rendering ignores it.
struct SSPage {
  int r = 1;
  int jmax = 13;
  Localization loc = Localization::integral;
  const StemTable* table = nullptr;
  std::array<std::vector<Cell>, 3> cells;                  // cells[i][j], j <= jmax + 1
  std::map<std::pair<int, int>, Differential> diffs;       // keyed by source (i, j)
  std::map<int, GroupHom> col0_proj;                       // page 2 only: pi^s(j) -> cell (0, j)

  const Cell& cell(int i, int j) const;
  const Differential* diff(int i, int j) const;
  bool operator==(const SSPage& o) const;
};

SSPage build_prim_first_page(int jmax, const StemTable& table, Localization loc);
SSPage turn_page(const SSPage& page);
SSPage e_infinity(int jmax, const StemTable& table, Localization loc);

// First-page differential on generators-level data. i = 1 composes with eta,
// i = 2 vanishes (the fold curve on the cusp boundary bounds), i = 0 has no
// differential and is rejected.
GroupHom prim_d1(int i, int j, const StemTable& table);

// Second-page differential d2_{2,j} into the page-2 cell (0, j+1). Localized
// requests compose with alpha1 (sign fixed to +); the integral map is only
// pinned at j = 2, where the generator goes to the order-6 class. Other
// integral requests with nontrivial source and target throw
// IndeterminateError.
GroupHom prim_d2(int j, const StemTable& table, Localization loc);

// Assembled graded answers with their Serre-class qualifiers.
struct LabeledGroup {
  std::string label;
  MaybeGroup value;
};

struct GradedAnswer {
  int n = 0;
  std::string family;
  std::string qualifier;
  std::string sequence;  // the exact sequence being reported, as text
  std::vector<LabeledGroup> pieces;
  std::optional<FinAbGroup> total;  // set when the extension is forced
};

GradedAnswer prim_fold_group(int n, const StemTable& table);
GradedAnswer prim_cusp_3primary(int n, const StemTable& table);
GradedAnswer cusp_cob_sequence(int n, const StemTable& table);

}  // namespace morincob
