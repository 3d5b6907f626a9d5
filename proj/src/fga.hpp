#pragma once

#include <optional>
#include <string>
#include <vector>

#include "snf.hpp"

namespace morincob {

// Canonical form of a finitely generated abelian group: free rank plus the
// invariant factor chain d1 | d2 | ... (each di >= 2). Two groups are
// isomorphic exactly when the fields are equal.
//
// Generator convention used by every matrix in this module: free generators
// first, then one generator per torsion factor in chain order.
struct FinAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  bool operator==(const FinAbGroup& o) const = default;

  std::size_t gen_count() const { return free_rank + torsion.size(); }
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
  bool is_finite() const { return free_rank == 0; }
  // Order of the torsion part (the whole group when finite).
  Int torsion_order() const;
  // 0 for free generators, the invariant factor for torsion ones.
  Int gen_order(std::size_t i) const {
    return i < free_rank ? Int(0) : torsion[i - free_rank];
  }
  std::string to_string() const;

  static FinAbGroup trivial() { return {}; }
  static FinAbGroup free(std::size_t rank) { return {rank, {}}; }
  static FinAbGroup cyclic(const Int& n);
};

// Reduce a coordinate vector to canonical residues (free coordinates are
// left alone, torsion coordinate i lands in [0, d_i)).
void reduce_coords(const FinAbGroup& g, std::vector<Int>& coords);
IntMatrix reduce_matrix(const FinAbGroup& target, IntMatrix m);

// Order of the element with the given canonical coordinates; 0 if infinite.
Int element_order(const FinAbGroup& g, const std::vector<Int>& coords);

// Relation lattice of the canonical presentation, as columns of a
// gen_count x #torsion matrix (d_i * e_i for each torsion generator).
IntMatrix relation_lattice(const FinAbGroup& g);

// Quotient of Z^generators by the span of the relation columns, plus the
// projection that rewrites old coordinates in canonical ones and a set of
// lifts expressing the canonical generators in the old coordinates.
struct PresentedGroup {
  FinAbGroup group;
  IntMatrix to_canonical;    // gen_count(group) x generators
  IntMatrix from_canonical;  // generators x gen_count(group)
};
PresentedGroup quotient_by_columns(std::size_t generators, const IntMatrix& relation_cols);

// Row-relation form: each row of the matrix is one relation.
FinAbGroup group_from_presentation(std::size_t generators, const IntMatrix& relation_rows);

// Homomorphism given by its matrix on canonical generators: column j holds
// the target coordinates of the image of source generator j. Matrices are
// kept reduced.
struct GroupHom {
  FinAbGroup source, target;
  IntMatrix matrix;

  GroupHom() = default;
  GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m);

  static GroupHom zero(FinAbGroup src, FinAbGroup tgt);
  static GroupHom identity(const FinAbGroup& g);

  bool is_zero() const { return matrix.is_zero(); }
  bool is_well_defined() const;
  std::vector<Int> apply(const std::vector<Int>& coords) const;

  GroupHom scaled(const Int& c) const { return {source, target, matrix.scaled(c)}; }
};

GroupHom compose(const GroupHom& g, const GroupHom& f);  // g after f

FinAbGroup hom_kernel(const GroupHom& h);
FinAbGroup hom_image(const GroupHom& h);
FinAbGroup hom_cokernel(const GroupHom& h);

// Same computations but keeping the connecting maps, which later pages of
// the spectral sequence need.
struct KernelResult {
  FinAbGroup group;
  GroupHom inclusion;  // group -> h.source
};
KernelResult hom_kernel_with_inclusion(const GroupHom& h);

struct CokernelResult {
  FinAbGroup group;
  GroupHom projection;  // h.target -> group
};
CokernelResult hom_cokernel_with_projection(const GroupHom& h);

// ker(out) / im(in); pass zero maps for the missing sides.
FinAbGroup homology(const GroupHom& out, const GroupHom& in);

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

// Localizations. The free part is always preserved: (Z)_p = Z.
FinAbGroup p_primary_part(const FinAbGroup& g, const Int& p);  // rejects non-prime p
FinAbGroup odd_part(const FinAbGroup& g);

enum class Localization { integral, odd, three_primary };
FinAbGroup localize(const FinAbGroup& g, Localization loc);
// Quotient map G -> G_loc on canonical generators.
GroupHom localization_projection(const FinAbGroup& g, Localization loc);
// Induced map between localized groups.
GroupHom localize_hom(const GroupHom& h, Localization loc);

}  // namespace morincob
