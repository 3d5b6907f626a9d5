#include "stems.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace morincob {

namespace {

using nlohmann::json;

// The groups of the table are fixed mathematics; a data file that disagrees
// is rejected outright. Canonical forms, degree 0 through 11.
const std::vector<FinAbGroup>& expected_canonical() {
  static const std::vector<FinAbGroup> table = {
      FinAbGroup::free(1),     FinAbGroup::cyclic(2),   FinAbGroup::cyclic(2),
      FinAbGroup::cyclic(24),  FinAbGroup::trivial(),   FinAbGroup::trivial(),
      FinAbGroup::cyclic(2),   FinAbGroup::cyclic(240), FinAbGroup{0, {2, 2}},
      FinAbGroup{0, {2, 2, 2}}, FinAbGroup::cyclic(6),  FinAbGroup::cyclic(504)};
  return table;
}

Int json_to_int(const json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ValidationError(std::string("stems file: ") + what + " must be an integer");
}

std::vector<Int> json_to_coords(const json& j, const char* what) {
  if (!j.is_array()) throw ValidationError(std::string("stems file: ") + what + " must be an array");
  std::vector<Int> out;
  for (const auto& v : j) out.push_back(json_to_int(v, what));
  return out;
}

DeclaredStem make_declared(int degree, std::size_t rank, std::vector<Int> factors,
                           std::vector<std::string> names) {
  DeclaredStem s;
  s.degree = degree;
  s.free_rank = rank;
  s.factors = std::move(factors);
  s.generator_names = std::move(names);

  IntMatrix rel(s.gen_count(), s.factors.size());
  for (std::size_t i = 0; i < s.factors.size(); ++i)
    rel.at(s.free_rank + i, i) = s.factors[i];
  PresentedGroup pg = quotient_by_columns(s.gen_count(), rel);
  s.canonical = pg.group;
  s.to_canonical = pg.to_canonical;
  s.from_canonical = pg.from_canonical;
  return s;
}

void reduce_declared(const DeclaredStem& s, std::vector<Int>& coords) {
  if (coords.size() != s.gen_count())
    throw ValidationError("stems: coordinate length does not match the declared decomposition");
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    Int& c = coords[s.free_rank + i];
    c %= s.factors[i];
    if (c < 0) c += s.factors[i];
  }
}

}  // namespace

const DeclaredStem& StemTable::declared(int n) const {
  if (n < 0 || n > max_degree)
    throw OutOfTableError("stem degree " + std::to_string(n) + " is outside the table");
  return stems_[static_cast<std::size_t>(n)];
}

FinAbGroup StemTable::group(int n) const {
  if (n < 0) return FinAbGroup::trivial();
  if (n > max_degree)
    throw OutOfTableError("stem degree " + std::to_string(n) + " is outside the table");
  return stems_[static_cast<std::size_t>(n)].canonical;
}

StemElement StemTable::named_element(const std::string& name) const {
  auto it = named_.find(name);
  if (it == named_.end())
    throw ValidationError("stems: no element named '" + name + "'");
  return it->second;
}

int StemTable::name_degree(const std::string& name) const {
  return named_element(name).degree;
}

StemElement StemTable::zero_element(int degree) const {
  if (degree < 0) return StemElement{degree, {}};
  return StemElement{degree, std::vector<Int>(declared(degree).gen_count(), 0)};
}

std::optional<StemElement> StemTable::lookup_product(const std::string& lhs,
                                                     const std::string& rhs) const {
  auto it = product_map_.find({lhs, rhs});
  if (it != product_map_.end()) return it->second;
  auto flip = product_map_.find({rhs, lhs});
  if (flip != product_map_.end()) {
    StemElement e = flip->second;
    // x o y = (-1)^(deg x * deg y) y o x
    if ((name_degree(lhs) * name_degree(rhs)) % 2 != 0)
      for (Int& c : e.coords) c = -c;
    if (e.degree >= 0) reduce_declared(declared(e.degree), e.coords);
    return e;
  }
  return std::nullopt;
}

StemElement StemTable::compose(const StemElement& a, const StemElement& b) const {
  const int n = a.degree + b.degree;
  if (a.degree < 0 || b.degree < 0) return zero_element(n);
  if (n > max_degree)
    throw OutOfTableError("composition lands in degree " + std::to_string(n) +
                          ", beyond the table");
  const DeclaredStem& sa = declared(a.degree);
  const DeclaredStem& sb = declared(b.degree);
  if (a.coords.size() != sa.gen_count() || b.coords.size() != sb.gen_count())
    throw ValidationError("compose: coordinate length mismatch");

  StemElement out = zero_element(n);
  const DeclaredStem& st = declared(n);
  for (std::size_t i = 0; i < sa.gen_count(); ++i) {
    if (a.coords[i] == 0) continue;
    for (std::size_t j = 0; j < sb.gen_count(); ++j) {
      if (b.coords[j] == 0) continue;
      auto p = lookup_product(sa.generator_names[i], sb.generator_names[j]);
      if (!p)
        throw UnknownProductError(sa.generator_names[i], sb.generator_names[j]);
      for (std::size_t k = 0; k < st.gen_count(); ++k)
        out.coords[k] += a.coords[i] * b.coords[j] * p->coords[k];
    }
  }
  reduce_declared(st, out.coords);
  return out;
}

GroupHom StemTable::left_mult_hom(const std::string& name, int n) const {
  const StemElement g = named_element(name);
  const int m = n + g.degree;
  FinAbGroup source = group(n);  // zero for negative n
  if (m > max_degree) {
    if (source.is_trivial())
      throw OutOfTableError("left multiplication lands beyond the table");
    throw OutOfTableError("left multiplication lands in degree " + std::to_string(m) +
                          ", beyond the table");
  }
  FinAbGroup target = group(m);
  if (source.is_trivial() || target.is_trivial())
    return GroupHom::zero(source, target);

  const DeclaredStem& ss = declared(n);
  const DeclaredStem& st = declared(m);
  IntMatrix images(st.gen_count(), ss.gen_count());
  for (std::size_t j = 0; j < ss.gen_count(); ++j) {
    auto p = lookup_product(name, ss.generator_names[j]);
    if (!p) throw UnknownProductError(name, ss.generator_names[j]);
    for (std::size_t k = 0; k < st.gen_count(); ++k) images.at(k, j) = p->coords[k];
  }
  GroupHom h(source, target, st.to_canonical * images * ss.from_canonical);
  if (!h.is_well_defined())
    throw ValidationError("stems: product table entries for '" + name +
                          "' do not respect the group relations");
  return h;
}

GroupHom StemTable::left_mult_hom(const StemElement& g, int n) const {
  const int m = n + g.degree;
  FinAbGroup source = group(n);
  if (m > max_degree) {
    if (source.is_trivial())
      throw OutOfTableError("left multiplication lands beyond the table");
    throw OutOfTableError("left multiplication lands in degree " + std::to_string(m) +
                          ", beyond the table");
  }
  FinAbGroup target = group(m);
  if (source.is_trivial() || target.is_trivial() || g.degree < 0)
    return GroupHom::zero(source, target);

  const DeclaredStem& sg = declared(g.degree);
  const DeclaredStem& ss = declared(n);
  const DeclaredStem& st = declared(m);
  IntMatrix images(st.gen_count(), ss.gen_count());
  for (std::size_t i = 0; i < sg.gen_count(); ++i) {
    if (g.coords[i] == 0) continue;
    for (std::size_t j = 0; j < ss.gen_count(); ++j) {
      auto p = lookup_product(sg.generator_names[i], ss.generator_names[j]);
      if (!p) throw UnknownProductError(sg.generator_names[i], ss.generator_names[j]);
      for (std::size_t k = 0; k < st.gen_count(); ++k)
        images.at(k, j) += g.coords[i] * p->coords[k];
    }
  }
  GroupHom h(source, target, st.to_canonical * images * ss.from_canonical);
  if (!h.is_well_defined())
    throw ValidationError("stems: product table entries do not respect the group relations");
  return h;
}

std::vector<Int> StemTable::to_canonical_coords(const StemElement& e) const {
  const DeclaredStem& s = declared(e.degree);
  if (e.coords.size() != s.gen_count())
    throw ValidationError("stems: coordinate length mismatch");
  std::vector<Int> out(s.canonical.gen_count(), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < e.coords.size(); ++j)
      out[i] += s.to_canonical.at(i, j) * e.coords[j];
  reduce_coords(s.canonical, out);
  return out;
}

Int StemTable::order_of(const StemElement& e) const {
  if (e.degree < 0) return 1;
  return element_order(declared(e.degree).canonical, to_canonical_coords(e));
}

bool StemTable::operator==(const StemTable& o) const {
  if (stems_.size() != o.stems_.size()) return false;
  for (std::size_t i = 0; i < stems_.size(); ++i) {
    const DeclaredStem &a = stems_[i], &b = o.stems_[i];
    if (a.free_rank != b.free_rank || a.factors != b.factors ||
        a.generator_names != b.generator_names)
      return false;
  }
  auto tp = [](const ThreePrimaryGen& g) { return std::tie(g.degree, g.name, g.coords); };
  if (three_primary_.size() != o.three_primary_.size()) return false;
  for (std::size_t i = 0; i < three_primary_.size(); ++i)
    if (tp(three_primary_[i]) != tp(o.three_primary_[i])) return false;
  return product_map_ == o.product_map_;
}

StemTable StemTable::load_json_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("stems file: JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("stems file: top level must be an object");
  if (!doc.contains("max_degree") || !doc["max_degree"].is_number_integer() ||
      doc["max_degree"].get<int>() != max_degree)
    throw ValidationError("stems file: max_degree must be 11");
  if (!doc.contains("groups") || !doc["groups"].is_array())
    throw ValidationError("stems file: missing groups array");

  StemTable t;
  t.stems_.resize(max_degree + 1);
  std::vector<bool> seen(max_degree + 1, false);
  for (const auto& g : doc["groups"]) {
    if (!g.is_object() || !g.contains("n") || !g.contains("rank") ||
        !g.contains("torsion") || !g.contains("generators"))
      throw ValidationError("stems file: group entries need n, rank, torsion, generators");
    int n = g["n"].get<int>();
    if (n < 0 || n > max_degree) throw ValidationError("stems file: group degree out of range");
    if (seen[n]) throw ValidationError("stems file: duplicate group degree");
    seen[n] = true;
    std::size_t rank = g["rank"].get<std::size_t>();
    std::vector<Int> factors = json_to_coords(g["torsion"], "torsion");
    for (const Int& d : factors)
      if (d < 2) throw ValidationError("stems file: torsion factors must be >= 2");
    std::vector<std::string> names;
    for (const auto& nm : g["generators"]) {
      if (!nm.is_string()) throw ValidationError("stems file: generator names must be strings");
      names.push_back(nm.get<std::string>());
    }
    if (names.size() != rank + factors.size())
      throw ValidationError("stems file: need one generator name per cyclic factor");
    t.stems_[n] = make_declared(n, rank, std::move(factors), std::move(names));
  }
  for (int n = 0; n <= max_degree; ++n)
    if (!seen[n]) throw ValidationError("stems file: missing degree " + std::to_string(n));

  if (doc.contains("three_primary")) {
    if (!doc["three_primary"].is_array())
      throw ValidationError("stems file: three_primary must be an array");
    for (const auto& e : doc["three_primary"]) {
      if (!e.is_object() || !e.contains("n") || !e.contains("name") || !e.contains("element"))
        throw ValidationError("stems file: three_primary entries need n, name, element");
      ThreePrimaryGen g;
      g.degree = e["n"].get<int>();
      g.name = e["name"].get<std::string>();
      g.coords = json_to_coords(e["element"], "element");
      t.three_primary_.push_back(std::move(g));
    }
  }

  if (doc.contains("products")) {
    if (!doc["products"].is_array())
      throw ValidationError("stems file: products must be an array");
    for (const auto& e : doc["products"]) {
      if (!e.is_object() || !e.contains("lhs") || !e.contains("rhs") || !e.contains("result"))
        throw ValidationError("stems file: product entries need lhs, rhs, result");
      const auto& r = e["result"];
      if (!r.is_object() || !r.contains("n") || !r.contains("coords"))
        throw ValidationError("stems file: product result needs n and coords");
      ProductEntry p;
      p.lhs = e["lhs"].get<std::string>();
      p.rhs = e["rhs"].get<std::string>();
      p.result.degree = r["n"].get<int>();
      p.result.coords = json_to_coords(r["coords"], "coords");
      t.products_.push_back(std::move(p));
    }
  }

  t.validate();
  return t;
}

void StemTable::validate() {
  // Group checksum against the fixed table.
  const auto& expected = expected_canonical();
  for (int n = 0; n <= max_degree; ++n) {
    if (!(stems_[n].canonical == expected[n]))
      throw ValidationError("stems file: group in degree " + std::to_string(n) +
                            " is " + stems_[n].canonical.to_string() + ", expected " +
                            expected[n].to_string());
  }

  // Named element registry: declared generators first.
  for (const DeclaredStem& s : stems_) {
    for (std::size_t i = 0; i < s.gen_count(); ++i) {
      const std::string& nm = s.generator_names[i];
      if (named_.count(nm))
        throw ValidationError("stems file: generator name '" + nm + "' is not unique");
      StemElement e{s.degree, std::vector<Int>(s.gen_count(), 0)};
      e.coords[i] = 1;
      named_.emplace(nm, std::move(e));
    }
  }
  // Three-primary annotations; a name may coincide with a declared generator
  // only if it denotes the same element.
  for (const ThreePrimaryGen& g : three_primary_) {
    if (g.degree < 0 || g.degree > max_degree)
      throw ValidationError("stems file: three_primary degree out of range");
    const DeclaredStem& s = stems_[g.degree];
    std::vector<Int> coords = g.coords;
    reduce_declared(s, coords);
    StemElement e{g.degree, coords};
    auto it = named_.find(g.name);
    if (it != named_.end()) {
      if (!(it->second == e))
        throw ValidationError("stems file: name '" + g.name +
                              "' bound to two different elements");
    } else {
      named_.emplace(g.name, e);
    }
    Int ord = order_of(e);
    if (ord < 3) throw ValidationError("stems file: three_primary element '" + g.name +
                                       "' is trivial on the 3-primary part");
    Int q = ord;
    while (q % 3 == 0) q /= 3;
    if (q != 1)
      throw ValidationError("stems file: three_primary element '" + g.name +
                            "' must have 3-power order");
    FinAbGroup three = p_primary_part(s.canonical, 3);
    if (three.free_rank != 0 || three.torsion.size() != 1 || three.torsion[0] != ord)
      throw ValidationError("stems file: '" + g.name +
                            "' does not generate the 3-primary part in degree " +
                            std::to_string(g.degree));
  }

  // Product table: grading, coordinate sanity, order compatibility, and the
  // skew-commutativity closure on every stored pair.
  for (const ProductEntry& p : products_) {
    if (!named_.count(p.lhs) || !named_.count(p.rhs))
      throw ValidationError("stems file: product references unknown name (" + p.lhs +
                            ", " + p.rhs + ")");
    const StemElement &l = named_.at(p.lhs), &r = named_.at(p.rhs);
    if (p.result.degree != l.degree + r.degree)
      throw ValidationError("stems file: product (" + p.lhs + ", " + p.rhs +
                            ") is not graded");
    if (p.result.degree > max_degree)
      throw ValidationError("stems file: product (" + p.lhs + ", " + p.rhs +
                            ") lands beyond degree 11");
    const DeclaredStem& st = stems_[p.result.degree];
    StemElement result = p.result;
    if (result.coords.size() != st.gen_count())
      throw ValidationError("stems file: product (" + p.lhs + ", " + p.rhs +
                            ") has wrong coordinate length");
    reduce_declared(st, result.coords);
    for (const StemElement* side : {&l, &r}) {
      Int ord = order_of(*side);
      if (ord == 0) continue;
      std::vector<Int> scaled = result.coords;
      for (Int& c : scaled) c *= ord;
      reduce_declared(st, scaled);
      for (const Int& c : scaled)
        if (c != 0)
          throw ValidationError("stems file: product (" + p.lhs + ", " + p.rhs +
                                ") is incompatible with the factor orders");
    }
    auto key = std::make_pair(p.lhs, p.rhs);
    if (product_map_.count(key))
      throw ValidationError("stems file: duplicate product entry (" + p.lhs + ", " +
                            p.rhs + ")");
    product_map_.emplace(key, result);
  }
  for (const auto& [key, val] : product_map_) {
    auto mirror = product_map_.find({key.second, key.first});
    if (mirror == product_map_.end()) continue;
    StemElement expect = mirror->second;
    if ((named_.at(key.first).degree * named_.at(key.second).degree) % 2 != 0)
      for (Int& c : expect.coords) c = -c;
    if (expect.degree >= 0) reduce_declared(stems_[expect.degree], expect.coords);
    if (!(expect == val))
      throw ValidationError("stems file: skew-commutativity violated for (" + key.first +
                            ", " + key.second + ")");
  }
}

StemTable StemTable::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("stems file: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_json_text(buf.str());
}

const StemTable& StemTable::bundled() {
  static const StemTable t = load_json_text(bundled_json_text());
  return t;
}

}  // namespace morincob
