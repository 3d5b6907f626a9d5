#include "morincob.h"

#include <cstring>
#include <string>

#include "disc_framing.hpp"
#include "render.hpp"
#include "ss.hpp"
#include "strata.hpp"

using namespace morincob;

struct mcb_stems {
  StemTable table;
};
struct mcb_page {
  SSPage page;
};
struct mcb_answer {
  GradedAnswer answer;
};
struct mcb_report {
  VerifyReport report;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
mcb_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const UnknownProductError& e) {
    g_last_error = e.what();
    return MCB_ERR_UNKNOWN_PRODUCT;
  } catch (const OutOfTableError& e) {
    g_last_error = e.what();
    return MCB_ERR_OUT_OF_TABLE;
  } catch (const IndeterminateError& e) {
    g_last_error = e.what();
    return MCB_ERR_INDETERMINATE;
  } catch (const IoError& e) {
    g_last_error = e.what();
    return MCB_ERR_IO;
  } catch (const ValidationError& e) {
    g_last_error = e.what();
    return MCB_ERR_VALIDATION;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return MCB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return MCB_ERR_INTERNAL;
  }
}

mcb_status require(bool ok, const char* message) {
  if (ok) return MCB_OK;
  g_last_error = message;
  return MCB_ERR_INVALID_ARGUMENT;
}

Localization to_loc(mcb_localization loc) {
  switch (loc) {
    case MCB_LOC_ODD: return Localization::odd;
    case MCB_LOC_3PRIMARY: return Localization::three_primary;
    default: return Localization::integral;
  }
}

}  // namespace

extern "C" {

const char* mcb_status_name(mcb_status status) {
  switch (status) {
    case MCB_OK: return "ok";
    case MCB_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MCB_ERR_VALIDATION: return "validation error";
    case MCB_ERR_UNKNOWN_PRODUCT: return "unknown product";
    case MCB_ERR_OUT_OF_TABLE: return "out of table";
    case MCB_ERR_INDETERMINATE: return "indeterminate mod C2";
    case MCB_ERR_IO: return "io error";
    case MCB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* mcb_last_error(void) { return g_last_error.c_str(); }

void mcb_string_free(char* s) { std::free(s); }

mcb_status mcb_stems_create_default(mcb_stems** out) {
  if (mcb_status st = require(out != nullptr, "out must not be null"); st != MCB_OK)
    return st;
  return guarded([&] {
    *out = new mcb_stems{StemTable::bundled()};
    return MCB_OK;
  });
}

mcb_status mcb_stems_create_from_json(const char* json_text, mcb_stems** out) {
  if (mcb_status st = require(out && json_text, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    *out = new mcb_stems{StemTable::load_json_text(json_text)};
    return MCB_OK;
  });
}

mcb_status mcb_stems_create_from_file(const char* path, mcb_stems** out) {
  if (mcb_status st = require(out && path, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    *out = new mcb_stems{StemTable::load_file(path)};
    return MCB_OK;
  });
}

void mcb_stems_free(mcb_stems* t) { delete t; }

mcb_status mcb_stems_render(const mcb_stems* t, int as_json, char** out) {
  if (mcb_status st = require(t && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    std::string s =
        as_json ? stems_to_json(t->table).dump(2) + "\n" : render_stems_text(t->table);
    *out = dup_string(s);
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

mcb_status mcb_stems_group_json(const mcb_stems* t, int degree, char** out) {
  if (mcb_status st = require(t && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    *out = dup_string(group_to_json(t->table.group(degree)).dump());
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

mcb_status mcb_page_compute(const mcb_stems* t, int r, int jmax, mcb_localization loc,
                            mcb_page** out) {
  if (mcb_status st = require(t && out, "null argument"); st != MCB_OK) return st;
  if (mcb_status st = require(r >= 1 && r <= 3, "page number must be 1, 2 or 3");
      st != MCB_OK)
    return st;
  return guarded([&] {
    SSPage page = build_prim_first_page(jmax, t->table, to_loc(loc));
    for (int k = 1; k < r; ++k) page = turn_page(page);
    for (int j = 0; j <= page.jmax; ++j)
      for (int i = 0; i < 3; ++i)
        if (page.cell(i, j).status == CellStatus::indeterminate) {
          g_last_error =
              "cell (" + std::to_string(i) + "," + std::to_string(j) +
              ") depends on an integral second differential that the data pins only "
              "at (2,2); request --localization odd or 3, or jmax <= 4";
          return MCB_ERR_INDETERMINATE;
        }
    *out = new mcb_page{std::move(page)};
    return MCB_OK;
  });
}

void mcb_page_free(mcb_page* p) { delete p; }

mcb_status mcb_page_render(const mcb_page* p, int as_json, char** out) {
  if (mcb_status st = require(p && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    std::string s =
        as_json ? page_to_json(p->page).dump(2) + "\n" : render_page_text(p->page);
    *out = dup_string(s);
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

mcb_status mcb_page_cell_json(const mcb_page* p, int i, int j, char** out) {
  if (mcb_status st = require(p && out, "null argument"); st != MCB_OK) return st;
  if (mcb_status st = require(i >= 0 && i <= 2 && j >= 0 && j <= p->page.jmax,
                              "cell outside the grid");
      st != MCB_OK)
    return st;
  return guarded([&] {
    const Cell& c = p->page.cell(i, j);
    nlohmann::json e;
    e["status"] = cell_status_name(c.status);
    if (c.status == CellStatus::known) e["group"] = group_to_json(c.group);
    *out = dup_string(e.dump());
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

mcb_status mcb_groups_compute(const mcb_stems* t, mcb_family family, int n,
                              mcb_answer** out) {
  if (mcb_status st = require(t && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    GradedAnswer a;
    switch (family) {
      case MCB_FAMILY_PRIMFOLD: a = prim_fold_group(n, t->table); break;
      case MCB_FAMILY_PRIMCUSP3: a = prim_cusp_3primary(n, t->table); break;
      case MCB_FAMILY_CUSPCOB: a = cusp_cob_sequence(n, t->table); break;
      default: return require(false, "unknown family");
    }
    *out = new mcb_answer{std::move(a)};
    return MCB_OK;
  });
}

void mcb_answer_free(mcb_answer* a) { delete a; }

mcb_status mcb_answer_render(const mcb_answer* a, int as_json, char** out) {
  if (mcb_status st = require(a && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    std::string s =
        as_json ? answer_to_json(a->answer).dump(2) + "\n" : render_answer_text(a->answer);
    *out = dup_string(s);
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

mcb_status mcb_verify(int which, int max_r, int samples, uint64_t seed,
                      const char* inject_defect, mcb_report** out) {
  if (mcb_status st = require(out != nullptr, "out must not be null"); st != MCB_OK)
    return st;
  if (mcb_status st = require(which == 1 || which == 2, "which must be 1 or 2");
      st != MCB_OK)
    return st;
  return guarded([&] {
    VerifyReport rep;
    if (which == 1) {
      rep = verify_disc_framing(inject_defect ? inject_defect : "");
    } else {
      if (inject_defect && *inject_defect)
        return require(false, "defect injection applies to suite 1 only");
      rep = verify_root_strata(max_r > 0 ? max_r : 4, samples > 0 ? samples : 100,
                               seed != 0 ? seed : 0x6d6f72696e636f62ull);
    }
    *out = new mcb_report{std::move(rep)};
    return MCB_OK;
  });
}

void mcb_report_free(mcb_report* r) { delete r; }

mcb_status mcb_report_render(const mcb_report* r, int as_json, char** out) {
  if (mcb_status st = require(r && out, "null argument"); st != MCB_OK) return st;
  return guarded([&] {
    std::string s =
        as_json ? report_to_json(r->report).dump(2) + "\n" : render_report_text(r->report);
    *out = dup_string(s);
    return *out ? MCB_OK : MCB_ERR_INTERNAL;
  });
}

int mcb_report_passed(const mcb_report* r) {
  return r != nullptr && r->report.all_pass() ? 1 : 0;
}

}  // extern "C"
