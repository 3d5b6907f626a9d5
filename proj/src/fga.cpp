#include "fga.hpp"

#include <sstream>

namespace morincob {

Int FinAbGroup::torsion_order() const {
  Int n = 1;
  for (const Int& d : torsion) n *= d;
  return n;
}

FinAbGroup FinAbGroup::cyclic(const Int& n) {
  if (n == 0) return free(1);
  Int a = abs_int(n);
  if (a == 1) return trivial();
  return {0, {a}};
}

std::string FinAbGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) os << " x ";
    os << "Z_" << d.str();
    first = false;
  }
  return os.str();
}

void reduce_coords(const FinAbGroup& g, std::vector<Int>& coords) {
  if (coords.size() != g.gen_count())
    throw std::invalid_argument("reduce_coords: coordinate length mismatch");
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    Int& c = coords[g.free_rank + i];
    c %= g.torsion[i];
    if (c < 0) c += g.torsion[i];
  }
}

IntMatrix reduce_matrix(const FinAbGroup& target, IntMatrix m) {
  if (m.rows() != target.gen_count())
    throw std::invalid_argument("reduce_matrix: row count mismatch");
  for (std::size_t i = 0; i < target.torsion.size(); ++i) {
    const Int& d = target.torsion[i];
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int& c = m.at(target.free_rank + i, j);
      c %= d;
      if (c < 0) c += d;
    }
  }
  return m;
}

Int element_order(const FinAbGroup& g, const std::vector<Int>& coords) {
  if (coords.size() != g.gen_count())
    throw std::invalid_argument("element_order: coordinate length mismatch");
  for (std::size_t i = 0; i < g.free_rank; ++i)
    if (coords[i] != 0) return 0;
  Int ord = 1;
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    const Int& d = g.torsion[i];
    Int c = coords[g.free_rank + i] % d;
    ord = lcm_int(ord, d / gcd_int(d, c));
  }
  return ord;
}

IntMatrix relation_lattice(const FinAbGroup& g) {
  IntMatrix rel(g.gen_count(), g.torsion.size());
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    rel.at(g.free_rank + i, i) = g.torsion[i];
  return rel;
}

PresentedGroup quotient_by_columns(std::size_t generators, const IntMatrix& relation_cols) {
  if (relation_cols.cols() > 0 && relation_cols.rows() != generators)
    throw std::invalid_argument("quotient_by_columns: relation shape mismatch");
  IntMatrix rel = relation_cols.cols() > 0 ? relation_cols : IntMatrix(generators, 0);
  SmithResult s = smith_normal_form(rel);

  // In the basis given by the columns of u_inv the relation lattice is
  // spanned by diag(i) times the i-th basis vector.
  std::vector<std::size_t> free_idx, tor_idx;
  for (std::size_t i = 0; i < generators; ++i) {
    Int d = s.diag(i);
    if (d == 0)
      free_idx.push_back(i);
    else if (d >= 2)
      tor_idx.push_back(i);
  }

  PresentedGroup out;
  out.group.free_rank = free_idx.size();
  for (std::size_t i : tor_idx) out.group.torsion.push_back(s.diag(i));

  std::vector<std::size_t> order = free_idx;
  order.insert(order.end(), tor_idx.begin(), tor_idx.end());
  out.to_canonical = s.u.rows_slice(order);
  out.from_canonical = s.u_inv.cols_slice(order);
  return out;
}

FinAbGroup group_from_presentation(std::size_t generators, const IntMatrix& relation_rows) {
  if (relation_rows.rows() > 0 && relation_rows.cols() != generators)
    throw std::invalid_argument("group_from_presentation: relations need one column per generator");
  return quotient_by_columns(generators, relation_rows.transposed()).group;
}

GroupHom::GroupHom(FinAbGroup src, FinAbGroup tgt, IntMatrix m)
    : source(std::move(src)), target(std::move(tgt)) {
  if (m.rows() != target.gen_count() || m.cols() != source.gen_count())
    throw std::invalid_argument("GroupHom: matrix shape mismatch");
  matrix = reduce_matrix(target, std::move(m));
}

GroupHom GroupHom::zero(FinAbGroup src, FinAbGroup tgt) {
  IntMatrix m(tgt.gen_count(), src.gen_count());
  return {std::move(src), std::move(tgt), std::move(m)};
}

GroupHom GroupHom::identity(const FinAbGroup& g) {
  return {g, g, IntMatrix::identity(g.gen_count())};
}

bool GroupHom::is_well_defined() const {
  IntMatrix rel = relation_lattice(target);
  for (std::size_t j = 0; j < source.gen_count(); ++j) {
    Int d = source.gen_order(j);
    if (d == 0) continue;
    if (!lattice_contains(rel, matrix.column(j).scaled(d))) return false;
  }
  return true;
}

std::vector<Int> GroupHom::apply(const std::vector<Int>& coords) const {
  if (coords.size() != source.gen_count())
    throw std::invalid_argument("GroupHom::apply: coordinate length mismatch");
  std::vector<Int> out(target.gen_count(), 0);
  for (std::size_t i = 0; i < target.gen_count(); ++i)
    for (std::size_t j = 0; j < coords.size(); ++j)
      out[i] += matrix.at(i, j) * coords[j];
  reduce_coords(target, out);
  return out;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
  if (!(g.source == f.target))
    throw std::invalid_argument("compose: middle groups differ");
  return {f.source, g.target, g.matrix * f.matrix};
}

KernelResult hom_kernel_with_inclusion(const GroupHom& h) {
  IntMatrix gens = preimage_lattice(h.matrix, relation_lattice(h.target));
  IntMatrix rels = preimage_lattice(gens, relation_lattice(h.source));
  PresentedGroup pg = quotient_by_columns(gens.cols(), rels);
  GroupHom incl(pg.group, h.source, gens * pg.from_canonical);
  return {pg.group, std::move(incl)};
}

FinAbGroup hom_kernel(const GroupHom& h) { return hom_kernel_with_inclusion(h).group; }

FinAbGroup hom_image(const GroupHom& h) {
  IntMatrix rels = preimage_lattice(h.matrix, relation_lattice(h.target));
  return quotient_by_columns(h.source.gen_count(), rels).group;
}

CokernelResult hom_cokernel_with_projection(const GroupHom& h) {
  IntMatrix killed = h.matrix.hstack(relation_lattice(h.target));
  PresentedGroup pg = quotient_by_columns(h.target.gen_count(), killed);
  GroupHom proj(h.target, pg.group, pg.to_canonical);
  return {pg.group, std::move(proj)};
}

FinAbGroup hom_cokernel(const GroupHom& h) {
  return hom_cokernel_with_projection(h).group;
}

FinAbGroup homology(const GroupHom& out, const GroupHom& in) {
  if (!(out.source == in.target))
    throw std::invalid_argument("homology: cell group mismatch");
  IntMatrix gens = preimage_lattice(out.matrix, relation_lattice(out.target));
  IntMatrix killed = in.matrix.hstack(relation_lattice(in.target));
  IntMatrix rels = preimage_lattice(gens, killed);
  return quotient_by_columns(gens.cols(), rels).group;
}

FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Int> factors = a.torsion;
  factors.insert(factors.end(), b.torsion.begin(), b.torsion.end());
  IntMatrix rel(factors.size(), factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) rel.at(i, i) = factors[i];
  FinAbGroup sum = quotient_by_columns(factors.size(), rel).group;
  sum.free_rank += a.free_rank + b.free_rank;
  return sum;
}

FinAbGroup p_primary_part(const FinAbGroup& g, const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("p_primary_part: p must be prime");
  FinAbGroup out;
  out.free_rank = g.free_rank;
  for (const Int& d : g.torsion) {
    Int q = p_part(d, p);
    if (q >= 2) out.torsion.push_back(q);
  }
  return out;
}

FinAbGroup odd_part(const FinAbGroup& g) {
  FinAbGroup out;
  out.free_rank = g.free_rank;
  for (const Int& d : g.torsion) {
    Int q = coprime_part(d, 2);
    if (q >= 2) out.torsion.push_back(q);
  }
  return out;
}

namespace {

Int localized_factor(const Int& d, Localization loc) {
  switch (loc) {
    case Localization::integral: return d;
    case Localization::odd: return coprime_part(d, 2);
    case Localization::three_primary: return p_part(d, 3);
  }
  return d;
}

}  // namespace

FinAbGroup localize(const FinAbGroup& g, Localization loc) {
  switch (loc) {
    case Localization::integral: return g;
    case Localization::odd: return odd_part(g);
    case Localization::three_primary: return p_primary_part(g, 3);
  }
  return g;
}

GroupHom localization_projection(const FinAbGroup& g, Localization loc) {
  FinAbGroup l = localize(g, loc);
  IntMatrix m(l.gen_count(), g.gen_count());
  for (std::size_t i = 0; i < g.free_rank; ++i) m.at(i, i) = 1;
  std::size_t out = l.free_rank;
  for (std::size_t i = 0; i < g.torsion.size(); ++i)
    if (localized_factor(g.torsion[i], loc) >= 2) m.at(out++, g.free_rank + i) = 1;
  return {g, l, std::move(m)};
}

GroupHom localize_hom(const GroupHom& h, Localization loc) {
  if (loc == Localization::integral) return h;
  FinAbGroup src = localize(h.source, loc);
  FinAbGroup tgt = localize(h.target, loc);

  // Surviving generators stay aligned, so the localized matrix is just the
  // original one restricted to the surviving rows and columns.
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < h.target.free_rank; ++i) rows.push_back(i);
  for (std::size_t i = 0; i < h.target.torsion.size(); ++i)
    if (localized_factor(h.target.torsion[i], loc) >= 2)
      rows.push_back(h.target.free_rank + i);
  for (std::size_t j = 0; j < h.source.free_rank; ++j) cols.push_back(j);
  for (std::size_t j = 0; j < h.source.torsion.size(); ++j)
    if (localized_factor(h.source.torsion[j], loc) >= 2)
      cols.push_back(h.source.free_rank + j);

  IntMatrix m = h.matrix.rows_slice(rows).cols_slice(cols);
  return {std::move(src), std::move(tgt), std::move(m)};
}

}  // namespace morincob
