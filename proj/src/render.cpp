#include "render.hpp"

#include <iomanip>
#include <sstream>

namespace morincob {

using nlohmann::json;

namespace {

json int_to_json(const Int& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return json(v.convert_to<long long>());
  return json(v.str());
}

std::string pad(const std::string& s, std::size_t w) {
  return s + std::string(s.size() < w ? w - s.size() : 0, ' ');
}

json maybe_group_to_json(const MaybeGroup& m) {
  json j;
  j["status"] = cell_status_name(m.status);
  if (m.status == CellStatus::known) j["group"] = group_to_json(m.group);
  return j;
}

std::string maybe_group_str(const MaybeGroup& m) {
  switch (m.status) {
    case CellStatus::known: return m.group.to_string();
    case CellStatus::unknown: return "?";
    case CellStatus::indeterminate: return "indet(C2)";
  }
  return "?";
}

}  // namespace

const char* localization_name(Localization loc) {
  switch (loc) {
    case Localization::integral: return "integral";
    case Localization::odd: return "odd";
    case Localization::three_primary: return "3";
  }
  return "integral";
}

const char* cell_status_name(CellStatus s) {
  switch (s) {
    case CellStatus::known: return "known";
    case CellStatus::unknown: return "unknown";
    case CellStatus::indeterminate: return "indeterminate";
  }
  return "unknown";
}

json group_to_json(const FinAbGroup& g) {
  json j;
  j["rank"] = g.free_rank;
  j["torsion"] = json::array();
  for (const Int& d : g.torsion) j["torsion"].push_back(int_to_json(d));
  return j;
}

FinAbGroup group_from_json(const json& j) {
  FinAbGroup g;
  g.free_rank = j.at("rank").get<std::size_t>();
  for (const auto& d : j.at("torsion"))
    g.torsion.push_back(d.is_string() ? Int(d.get<std::string>())
                                      : Int(d.get<long long>()));
  return g;
}

std::string declared_stem_display(const DeclaredStem& s) {
  if (s.free_rank == 0 && s.factors.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (s.free_rank > 0) {
    os << "Z";
    if (s.free_rank > 1) os << "^" << s.free_rank;
    first = false;
  }
  for (const Int& d : s.factors) {
    if (!first) os << " x ";
    os << "Z_" << d.str();
    first = false;
  }
  return os.str();
}

std::string render_stems_text(const StemTable& t) {
  const int N = StemTable::max_degree;
  std::vector<std::string> head, row_group, row_three, row_gens;
  for (int n = 0; n <= N; ++n) {
    const DeclaredStem& s = t.declared(n);
    head.push_back(std::to_string(n));
    row_group.push_back(declared_stem_display(s));

    FinAbGroup three = p_primary_part(s.canonical, 3);
    std::string cell;
    if (three.is_trivial()) {
      cell = ".";
    } else {
      cell = three.to_string();
      std::string names;
      for (const ThreePrimaryGen& g : t.three_primary())
        if (g.degree == n) names += (names.empty() ? "" : ",") + g.name;
      if (!names.empty()) cell += "<" + names + ">";
    }
    row_three.push_back(cell);

    std::string gens;
    for (const std::string& nm : s.generator_names)
      gens += (gens.empty() ? "" : " ") + nm;
    row_gens.push_back(gens.empty() ? "-" : gens);
  }

  std::vector<std::size_t> width(N + 1);
  for (int n = 0; n <= N; ++n)
    width[n] = std::max({head[n].size(), row_group[n].size(), row_three[n].size()});

  std::ostringstream os;
  auto emit = [&](const std::string& label, const std::vector<std::string>& row) {
    os << pad(label, 14) << "|";
    for (int n = 0; n <= N; ++n) os << " " << pad(row[n], width[n]);
    os << "\n";
  };
  emit("n", head);
  emit("pi^s(n)", row_group);
  emit("(pi^s(n))_3", row_three);
  os << "\n" << "generators:\n";
  for (int n = 0; n <= N; ++n) os << "  " << std::setw(2) << n << ": " << row_gens[n] << "\n";
  return os.str();
}

json stems_to_json(const StemTable& t) {
  json j;
  j["schema"] = "1";
  j["max_degree"] = StemTable::max_degree;
  j["groups"] = json::array();
  for (int n = 0; n <= StemTable::max_degree; ++n) {
    const DeclaredStem& s = t.declared(n);
    json g;
    g["n"] = n;
    g["rank"] = s.free_rank;
    g["torsion"] = json::array();
    for (const Int& d : s.factors) g["torsion"].push_back(int_to_json(d));
    g["generators"] = s.generator_names;
    g["display"] = declared_stem_display(s);
    j["groups"].push_back(std::move(g));
  }
  j["three_primary"] = json::array();
  for (const ThreePrimaryGen& g : t.three_primary()) {
    json e;
    e["n"] = g.degree;
    e["name"] = g.name;
    e["element"] = json::array();
    for (const Int& c : g.coords) e["element"].push_back(int_to_json(c));
    j["three_primary"].push_back(std::move(e));
  }
  j["products"] = json::array();
  for (const ProductEntry& p : t.products()) {
    json e;
    e["lhs"] = p.lhs;
    e["rhs"] = p.rhs;
    e["result"]["n"] = p.result.degree;
    e["result"]["coords"] = json::array();
    for (const Int& c : p.result.coords) e["result"]["coords"].push_back(int_to_json(c));
    j["products"].push_back(std::move(e));
  }
  return j;
}

std::string render_page_text(const SSPage& p) {
  std::ostringstream os;
  os << "page r=" << p.r << ", localization=" << localization_name(p.loc)
     << ", jmax=" << p.jmax << "\n";

  std::vector<std::vector<std::string>> grid(p.jmax + 1, std::vector<std::string>(3));
  for (int j = 0; j <= p.jmax; ++j)
    for (int i = 0; i < 3; ++i) {
      if (j < i) {
        grid[j][i] = ".";  // below the diagonal everything is zero
        continue;
      }
      const Cell& c = p.cell(i, j);
      grid[j][i] = c.status == CellStatus::known
                       ? c.group.to_string()
                       : (c.status == CellStatus::unknown ? "?" : "indet(C2)");
    }
  std::array<std::size_t, 3> w{3, 3, 3};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j <= p.jmax; ++j) w[i] = std::max(w[i], grid[j][i].size());

  for (int j = p.jmax; j >= 0; --j) {
    os << " j=" << std::setw(2) << j << " |";
    for (int i = 0; i < 3; ++i) os << " " << pad(grid[j][i], w[i]);
    os << "\n";
  }
  os << "       +" << std::string(w[0] + w[1] + w[2] + 6, '-') << "\n";
  os << "        ";
  for (int i = 0; i < 3; ++i) os << " " << pad("i=" + std::to_string(i), w[i]);
  os << "\n";

  bool any_flag = false;
  for (int j = 0; j <= p.jmax && !any_flag; ++j)
    for (int i = 0; i < 3; ++i)
      if (p.cell(i, j).status != CellStatus::known) any_flag = true;
  if (any_flag)
    os << "('?' = beyond the stems table or missing product; 'indet(C2)' = integral "
          "value pinned only mod C2)\n";
  return os.str();
}

json page_to_json(const SSPage& p) {
  json j;
  j["schema"] = "1";
  j["r"] = p.r;
  j["jmax"] = p.jmax;
  j["localization"] = localization_name(p.loc);
  j["cells"] = json::array();
  for (int i = 0; i < 3; ++i)
    for (int jj = 0; jj <= p.jmax; ++jj) {
      const Cell& c = p.cell(i, jj);
      json e;
      e["i"] = i;
      e["j"] = jj;
      e["status"] = cell_status_name(c.status);
      if (c.status == CellStatus::known) e["group"] = group_to_json(c.group);
      j["cells"].push_back(std::move(e));
    }
  j["differentials"] = json::array();
  for (const auto& [key, d] : p.diffs) {
    const auto& [i, jj] = key;
    if (jj > p.jmax) continue;
    json e;
    e["from"] = {i, jj};
    e["to"] = {i - p.r, jj + p.r - 1};
    e["status"] = cell_status_name(d.status);
    if (d.status == CellStatus::known) {
      json m = json::array();
      for (std::size_t a = 0; a < d.map.matrix.rows(); ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < d.map.matrix.cols(); ++b)
          row.push_back(int_to_json(d.map.matrix.at(a, b)));
        m.push_back(std::move(row));
      }
      e["matrix"] = std::move(m);
    }
    j["differentials"].push_back(std::move(e));
  }
  return j;
}

std::string render_answer_text(const GradedAnswer& a) {
  std::ostringstream os;
  os << a.family << " n=" << a.n << "\n";
  os << "  sequence: " << a.sequence << "\n";
  for (const LabeledGroup& p : a.pieces)
    os << "  " << pad(p.label, 18) << "= " << maybe_group_str(p.value) << "\n";
  if (a.total)
    os << "  " << pad("group", 18) << "= " << a.total->to_string() << "\n";
  os << "  qualifier: " << a.qualifier << "\n";
  return os.str();
}

json answer_to_json(const GradedAnswer& a) {
  json j;
  j["schema"] = "1";
  j["family"] = a.family;
  j["n"] = a.n;
  j["qualifier"] = a.qualifier;
  j["sequence"] = a.sequence;
  j["pieces"] = json::array();
  for (const LabeledGroup& p : a.pieces) {
    json e = maybe_group_to_json(p.value);
    e["label"] = p.label;
    j["pieces"].push_back(std::move(e));
  }
  j["total"] = a.total ? group_to_json(*a.total) : json(nullptr);
  return j;
}

std::string render_report_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verification suite: " << r.suite << "\n";
  int npass = 0;
  for (const CheckResult& c : r.checks) {
    os << (c.pass ? "  PASS " : "  FAIL ") << c.name;
    if (!c.note.empty()) os << ": " << c.note;
    os << "\n";
    if (!c.pass)
      for (const std::string& res : c.residuals) os << "       residual " << res << "\n";
    if (c.pass) ++npass;
  }
  os << npass << "/" << r.checks.size() << " checks passed\n";
  return os.str();
}

json report_to_json(const VerifyReport& r) {
  json j;
  j["schema"] = "1";
  j["suite"] = r.suite;
  j["all_pass"] = r.all_pass();
  j["checks"] = json::array();
  for (const CheckResult& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["note"] = c.note;
    e["residuals"] = c.residuals;
    j["checks"].push_back(std::move(e));
  }
  return j;
}

}  // namespace morincob
