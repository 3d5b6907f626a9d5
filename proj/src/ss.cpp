#include "ss.hpp"

namespace morincob {

namespace {

CellStatus worst(CellStatus a, CellStatus b) {
  if (a == CellStatus::unknown || b == CellStatus::unknown) return CellStatus::unknown;
  if (a == CellStatus::indeterminate || b == CellStatus::indeterminate)
    return CellStatus::indeterminate;
  return CellStatus::known;
}

Cell stem_cell(const StemTable& t, int degree, Localization loc) {
  if (degree > StemTable::max_degree) return {CellStatus::unknown, {}};
  return {CellStatus::known, localize(t.group(degree), loc)};
}

// d1 out of column 1 is composition with eta. eta has order 2, so on the odd
// and 3-primary localizations the induced map is zero without any table
// lookup; integrally it needs the stored products.
Differential d1_column1(const SSPage& p, int j) {
  const Cell& src = p.cell(1, j);
  const Cell& tgt = p.cell(0, j);
  if (src.status != CellStatus::known || tgt.status != CellStatus::known)
    return {worst(src.status, tgt.status), {}};
  if (src.group.is_trivial() || tgt.group.is_trivial() || p.loc != Localization::integral)
    return {CellStatus::known, GroupHom::zero(src.group, tgt.group)};
  try {
    return {CellStatus::known, p.table->left_mult_hom("eta", j - 1)};
  } catch (const UnknownProductError&) {
    return {CellStatus::unknown, {}};
  }
}

GroupHom zero_from_trivial(const FinAbGroup& target) {
  return GroupHom::zero(FinAbGroup::trivial(), target);
}

GroupHom zero_to_trivial(const FinAbGroup& source) {
  return GroupHom::zero(source, FinAbGroup::trivial());
}

// d2_{2,j} against an already computed page-2 target cell and its projection
// from pi^s(j+1). Shared by turn_page and the standalone prim_d2.
Differential make_d2(const StemTable& t, Localization loc, int j, const Cell& src,
                     const Cell& tgt, const GroupHom* proj) {
  if (src.status != CellStatus::known || tgt.status != CellStatus::known)
    return {worst(src.status, tgt.status), {}};
  if (src.group.is_trivial() || tgt.group.is_trivial())
    return {CellStatus::known, GroupHom::zero(src.group, tgt.group)};
  if (loc == Localization::integral) {
    if (j == 2) {
      // The generator of the Z at (2,2) goes to the order-6 class: twice a
      // generator of the Z_12 at (0,3), sign being a convention.
      IntMatrix m(tgt.group.gen_count(), src.group.gen_count());
      m.at(0, 0) = 2;
      return {CellStatus::known, GroupHom(src.group, tgt.group, std::move(m))};
    }
    return {CellStatus::indeterminate, {}};
  }
  try {
    GroupHom base = localize_hom(t.left_mult_hom("alpha1", j - 2), loc);
    if (proj == nullptr)
      throw ValidationError("internal: missing column-0 projection for d2");
    return {CellStatus::known, compose(*proj, base)};
  } catch (const UnknownProductError&) {
    return {CellStatus::unknown, {}};
  } catch (const OutOfTableError&) {
    return {CellStatus::unknown, {}};
  }
}

}  // namespace

const Cell& SSPage::cell(int i, int j) const {
  static const Cell trivial_cell{CellStatus::known, FinAbGroup::trivial()};
  if (i < 0 || i > 2 || j < 0) return trivial_cell;
  if (j >= static_cast<int>(cells[i].size()))
    throw std::out_of_range("SSPage::cell: row beyond the computed grid");
  return cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

const Differential* SSPage::diff(int i, int j) const {
  auto it = diffs.find({i, j});
  return it == diffs.end() ? nullptr : &it->second;
}

bool SSPage::operator==(const SSPage& o) const {
  if (r != o.r || jmax != o.jmax || loc != o.loc) return false;
  for (int i = 0; i < 3; ++i) {
    if (cells[i].size() != o.cells[i].size()) return false;
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const Cell &a = cells[i][j], &b = o.cells[i][j];
      if (a.status != b.status) return false;
      if (a.status == CellStatus::known && !(a.group == b.group)) return false;
    }
  }
  if (diffs.size() != o.diffs.size()) return false;
  for (const auto& [key, d] : diffs) {
    auto it = o.diffs.find(key);
    if (it == o.diffs.end() || it->second.status != d.status) return false;
    if (d.status == CellStatus::known && !(d.map.matrix == it->second.map.matrix))
      return false;
  }
  return true;
}

GroupHom prim_d1(int i, int j, const StemTable& table) {
  if (i == 0) throw std::invalid_argument("prim_d1: column 0 has no differential");
  if (i != 1 && i != 2) throw std::invalid_argument("prim_d1: column out of range");
  if (i == 2) return GroupHom::zero(table.group(j - 2), table.group(j - 1));
  return table.left_mult_hom("eta", j - 1);
}

SSPage build_prim_first_page(int jmax, const StemTable& table, Localization loc) {
  if (jmax < 1 || jmax > 13)
    throw std::invalid_argument("jmax must be between 1 and 13");
  SSPage p;
  p.r = 1;
  p.jmax = jmax;
  p.loc = loc;
  p.table = &table;
  const int jtop = jmax + 1;  // padding row for d2 targets
  for (int i = 0; i < 3; ++i) {
    p.cells[i].resize(jtop + 1);
    for (int j = 0; j <= jtop; ++j) p.cells[i][j] = stem_cell(table, j - i, loc);
  }
  for (int j = 0; j <= jtop; ++j) {
    p.diffs[{1, j}] = d1_column1(p, j);
    const Cell& src = p.cell(2, j);
    const Cell& tgt = p.cell(1, j);
    if (src.status == CellStatus::known && tgt.status == CellStatus::known)
      p.diffs[{2, j}] = {CellStatus::known, GroupHom::zero(src.group, tgt.group)};
    else
      p.diffs[{2, j}] = {worst(src.status, tgt.status), {}};
  }
  return p;
}

namespace {

SSPage turn_first_page(const SSPage& p) {
  SSPage q;
  q.r = 2;
  q.jmax = p.jmax;
  q.loc = p.loc;
  q.table = p.table;
  const int jtop = p.jmax + 1;
  for (int i = 0; i < 3; ++i) q.cells[i].resize(jtop + 1);

  for (int j = 0; j <= jtop; ++j) {
    for (int i = 0; i < 3; ++i) {
      const Cell& c = p.cell(i, j);
      const Differential* out = i >= 1 ? p.diff(i, j) : nullptr;
      const Differential* in = i <= 1 ? p.diff(i + 1, j) : nullptr;
      CellStatus st = c.status;
      if (out) st = worst(st, out->status);
      if (in) st = worst(st, in->status);
      if (st != CellStatus::known) {
        q.cells[i][j] = {st, {}};
        continue;
      }
      if (i == 0) {
        GroupHom in_map = in ? in->map : zero_from_trivial(c.group);
        CokernelResult ck = hom_cokernel_with_projection(in_map);
        q.cells[i][j] = {CellStatus::known, ck.group};
        q.col0_proj[j] = ck.projection;
      } else {
        GroupHom out_map = out ? out->map : zero_to_trivial(c.group);
        GroupHom in_map = in ? in->map : zero_from_trivial(c.group);
        q.cells[i][j] = {CellStatus::known, homology(out_map, in_map)};
      }
    }
  }

  for (int j = 0; j + 1 <= jtop; ++j) {
    const Cell& src = q.cell(2, j);
    const Cell& tgt = q.cell(0, j + 1);
    auto it = q.col0_proj.find(j + 1);
    const GroupHom* proj = it == q.col0_proj.end() ? nullptr : &it->second;
    q.diffs[{2, j}] = make_d2(*q.table, q.loc, j, src, tgt, proj);
  }
  return q;
}

SSPage turn_second_page(const SSPage& p) {
  SSPage q;
  q.r = 3;
  q.jmax = p.jmax;
  q.loc = p.loc;
  q.table = p.table;
  const int jtop = p.jmax + 1;
  for (int i = 0; i < 3; ++i) q.cells[i].resize(jtop + 1);

  for (int j = 0; j <= jtop; ++j) {
    // Column 1: nothing maps in or out on page 2.
    q.cells[1][j] = p.cell(1, j);

    // Column 2: kernel of the outgoing d2. The padding row has no computed
    // d2 (its target would lie outside the grid), so a nontrivial cell there
    // cannot be settled.
    {
      const Cell& c = p.cell(2, j);
      const Differential* out = p.diff(2, j);
      CellStatus st = c.status;
      if (out) st = worst(st, out->status);
      if (st != CellStatus::known)
        q.cells[2][j] = {st, {}};
      else if (c.group.is_trivial())
        q.cells[2][j] = {CellStatus::known, FinAbGroup::trivial()};
      else if (out == nullptr)
        q.cells[2][j] = {CellStatus::unknown, {}};
      else
        q.cells[2][j] = {CellStatus::known, hom_kernel(out->map)};
    }

    // Column 0: cokernel of the incoming d2 from (2, j - 1).
    {
      const Cell& c = p.cell(0, j);
      const Differential* in = j >= 1 ? p.diff(2, j - 1) : nullptr;
      CellStatus st = c.status;
      if (in) {
        // A trivial source cannot change the cell even if the map itself was
        // not determined.
        const Cell& src = p.cell(2, j - 1);
        if (src.status == CellStatus::known && src.group.is_trivial())
          in = nullptr;
        else
          st = worst(st, in->status);
      }
      if (st != CellStatus::known)
        q.cells[0][j] = {st, {}};
      else {
        GroupHom in_map = in ? in->map : zero_from_trivial(c.group);
        q.cells[0][j] = {CellStatus::known, hom_cokernel(in_map)};
      }
    }
  }
  return q;
}

}  // namespace

SSPage turn_page(const SSPage& page) {
  switch (page.r) {
    case 1: return turn_first_page(page);
    case 2: return turn_second_page(page);
    case 3: return page;  // stabilized
    default: throw std::invalid_argument("turn_page: page number out of range");
  }
}

SSPage e_infinity(int jmax, const StemTable& table, Localization loc) {
  return turn_page(turn_page(build_prim_first_page(jmax, table, loc)));
}

GroupHom prim_d2(int j, const StemTable& table, Localization loc) {
  if (j < 0) throw std::invalid_argument("prim_d2: negative row");
  if (j + 1 > StemTable::max_degree + 2)
    throw OutOfTableError("prim_d2: target row beyond the table");
  SSPage p1 = build_prim_first_page(std::min(std::max(j + 1, 1), 13), table, loc);
  SSPage p2 = turn_page(p1);
  const Differential* d = p2.diff(2, j);
  if (d == nullptr) throw std::invalid_argument("prim_d2: no differential at this row");
  if (d->status == CellStatus::indeterminate)
    throw IndeterminateError(
        "integral d2 is pinned only at (2,2); this value is determined mod C2 only "
        "(use the odd or 3-primary localization)");
  if (d->status == CellStatus::unknown)
    throw OutOfTableError("prim_d2: depends on stems beyond the table");
  return d->map;
}

namespace {

MaybeGroup try_coker(const StemTable& t, const char* name, int n, Localization loc) {
  try {
    GroupHom h = localize_hom(t.left_mult_hom(name, n), loc);
    return {CellStatus::known, hom_cokernel(h)};
  } catch (const UnknownProductError&) {
    return {CellStatus::unknown, {}};
  }
}

MaybeGroup try_ker(const StemTable& t, const char* name, int n, Localization loc) {
  try {
    GroupHom h = localize_hom(t.left_mult_hom(name, n), loc);
    return {CellStatus::known, hom_kernel(h)};
  } catch (const UnknownProductError&) {
    return {CellStatus::unknown, {}};
  }
}

// 0 -> A -> G -> B -> 0 determines G when either end vanishes or the
// quotient is free (the sequence then splits). Anything else stays an
// extension problem and is reported as such.
std::optional<FinAbGroup> resolve_extension(const MaybeGroup& sub, const MaybeGroup& quot) {
  if (sub.status != CellStatus::known || quot.status != CellStatus::known)
    return std::nullopt;
  if (quot.group.is_trivial()) return sub.group;
  if (sub.group.is_trivial()) return quot.group;
  if (quot.group.torsion.empty()) return direct_sum(sub.group, quot.group);
  return std::nullopt;
}

void check_range(int n) {
  if (n < 0 || n > StemTable::max_degree)
    throw OutOfTableError("n must be between 0 and 11");
}

}  // namespace

GradedAnswer prim_fold_group(int n, const StemTable& table) {
  check_range(n);
  GradedAnswer out;
  out.n = n;
  out.family = "primfold";
  out.sequence = "0 -> Coker(eta: pi^s(" + std::to_string(n - 1) + ") -> pi^s(" +
                 std::to_string(n) + ")) -> G -> ker(eta: pi^s(" + std::to_string(n - 2) +
                 ") -> pi^s(" + std::to_string(n - 1) + ")) -> 0";

  MaybeGroup coker = try_coker(table, "eta", n - 1, Localization::integral);
  MaybeGroup ker = try_ker(table, "eta", n - 2, Localization::integral);

  // Odd localization kills eta (it has order 2), so both ends are computable
  // there for every n and the sequence splits off the 2-torsion: the direct
  // sum below is the group mod C2.
  GroupHom eta_odd_1 = GroupHom::zero(odd_part(table.group(n - 1)), odd_part(table.group(n)));
  GroupHom eta_odd_2 =
      GroupHom::zero(odd_part(table.group(n - 2)), odd_part(table.group(n - 1)));
  FinAbGroup odd_sum = direct_sum(hom_cokernel(eta_odd_1), hom_kernel(eta_odd_2));

  out.pieces.push_back({"coker_eta", coker});
  out.pieces.push_back({"ker_eta", ker});
  out.pieces.push_back({"odd_part_sum", {CellStatus::known, odd_sum}});
  out.total = resolve_extension(coker, ker);
  out.qualifier = out.total ? "exact" : "mod C2";
  return out;
}

GradedAnswer prim_cusp_3primary(int n, const StemTable& table) {
  check_range(n);
  GradedAnswer out;
  out.n = n;
  out.family = "primcusp3";
  out.qualifier = "3-primary, up to extension";
  out.sequence = "0 -> (Coker(alpha1: pi^s(" + std::to_string(n - 3) + ") -> pi^s(" +
                 std::to_string(n) + ")))_3 (+) (pi^s(" + std::to_string(n - 2) +
                 "))_3 -> G_3 -> (ker(alpha1: pi^s(" + std::to_string(n - 4) +
                 ") -> pi^s(" + std::to_string(n - 1) + ")))_3 -> 0";

  MaybeGroup coker3 = try_coker(table, "alpha1", n - 3, Localization::three_primary);
  MaybeGroup mid3{CellStatus::known, p_primary_part(table.group(n - 2), 3)};
  MaybeGroup ker3 = try_ker(table, "alpha1", n - 4, Localization::three_primary);

  out.pieces.push_back({"coker_alpha1_3", coker3});
  out.pieces.push_back({"stem_3", mid3});
  out.pieces.push_back({"ker_alpha1_3", ker3});

  MaybeGroup sub = coker3;
  if (sub.status == CellStatus::known)
    sub.group = direct_sum(sub.group, mid3.group);
  out.total = resolve_extension(sub, ker3);
  if (out.total) out.qualifier = "3-primary, exact";
  return out;
}

GradedAnswer cusp_cob_sequence(int n, const StemTable& table) {
  check_range(n);
  GradedAnswer out;
  out.n = n;
  out.family = "cuspcob";
  out.qualifier = "mod C2, up to extension";
  out.sequence = "0 -> Coker(alpha1: pi^s(" + std::to_string(n - 3) + ") -> pi^s(" +
                 std::to_string(n) + ")) -> G -> ker(alpha1: pi^s(" + std::to_string(n - 4) +
                 ") -> pi^s(" + std::to_string(n - 1) + ")) -> 0   (C2-exact)";

  // The middle column of the corresponding spectral sequence is a finite
  // 2-group, so the odd localization carries the whole statement.
  MaybeGroup coker = try_coker(table, "alpha1", n - 3, Localization::odd);
  MaybeGroup ker = try_ker(table, "alpha1", n - 4, Localization::odd);

  out.pieces.push_back({"coker_alpha1_odd", coker});
  out.pieces.push_back({"ker_alpha1_odd", ker});
  out.total = resolve_extension(coker, ker);
  if (out.total) out.qualifier = "mod C2";
  return out;
}

}  // namespace morincob
