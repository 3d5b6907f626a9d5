#include <string>

#include "doctest.h"
#include "json.hpp"
#include "morincob.h"

using nlohmann::json;

namespace {

struct StemsHandle {
  mcb_stems* t = nullptr;
  StemsHandle() { REQUIRE(mcb_stems_create_default(&t) == MCB_OK); }
  ~StemsHandle() { mcb_stems_free(t); }
};

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  mcb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("stems handle, rendering and group queries") {
  StemsHandle h;
  char* text = nullptr;
  REQUIRE(mcb_stems_render(h.t, 0, &text) == MCB_OK);
  std::string s = take(text);
  CHECK(s.find("Z_24") != std::string::npos);
  CHECK(s.find("Z_56 x Z_9") != std::string::npos);
  CHECK(s.find("alpha3") != std::string::npos);

  char* gj = nullptr;
  REQUIRE(mcb_stems_group_json(h.t, 3, &gj) == MCB_OK);
  json g = json::parse(take(gj));
  CHECK(g.at("rank") == 0);
  CHECK(g.at("torsion") == json::array({24}));

  REQUIRE(mcb_stems_group_json(h.t, -2, &gj) == MCB_OK);
  CHECK(json::parse(take(gj)).at("torsion").empty());

  CHECK(mcb_stems_group_json(h.t, 12, &gj) == MCB_ERR_OUT_OF_TABLE);
  CHECK(std::string(mcb_last_error()).find("outside the table") != std::string::npos);

  // json rendering re-parses as a stems file
  char* jtext = nullptr;
  REQUIRE(mcb_stems_render(h.t, 1, &jtext) == MCB_OK);
  std::string jstr = take(jtext);
  mcb_stems* reloaded = nullptr;
  REQUIRE(mcb_stems_create_from_json(jstr.c_str(), &reloaded) == MCB_OK);
  mcb_stems_free(reloaded);
}

TEST_CASE("stems error paths") {
  mcb_stems* t = nullptr;
  CHECK(mcb_stems_create_from_json("{ not json", &t) == MCB_ERR_VALIDATION);
  CHECK(mcb_stems_create_from_file("/nonexistent/stems.json", &t) == MCB_ERR_IO);
  CHECK(mcb_stems_create_default(nullptr) == MCB_ERR_INVALID_ARGUMENT);
  CHECK(std::string(mcb_status_name(MCB_ERR_VALIDATION)) == "validation error");
}

TEST_CASE("page computation through the C API") {
  StemsHandle h;
  mcb_page* page = nullptr;
  REQUIRE(mcb_page_compute(h.t, 2, 3, MCB_LOC_INTEGRAL, &page) == MCB_OK);
  char* cj = nullptr;
  REQUIRE(mcb_page_cell_json(page, 0, 3, &cj) == MCB_OK);
  json cell = json::parse(take(cj));
  CHECK(cell.at("status") == "known");
  CHECK(cell.at("group").at("torsion") == json::array({12}));
  CHECK(mcb_page_cell_json(page, 0, 9, &cj) == MCB_ERR_INVALID_ARGUMENT);
  char* text = nullptr;
  REQUIRE(mcb_page_render(page, 0, &text) == MCB_OK);
  CHECK(take(text).find("Z_12") != std::string::npos);
  mcb_page_free(page);

  // integral page 3 on a tall grid hits the indeterminate differential
  CHECK(mcb_page_compute(h.t, 3, 13, MCB_LOC_INTEGRAL, &page) == MCB_ERR_INDETERMINATE);
  CHECK(std::string(mcb_last_error()).find("localization") != std::string::npos);
  // the same request is fine 3-primary, and integral on a short grid
  REQUIRE(mcb_page_compute(h.t, 3, 13, MCB_LOC_3PRIMARY, &page) == MCB_OK);
  mcb_page_free(page);
  REQUIRE(mcb_page_compute(h.t, 3, 4, MCB_LOC_INTEGRAL, &page) == MCB_OK);
  mcb_page_free(page);

  CHECK(mcb_page_compute(h.t, 4, 3, MCB_LOC_INTEGRAL, &page) == MCB_ERR_INVALID_ARGUMENT);
  CHECK(mcb_page_compute(h.t, 1, 0, MCB_LOC_INTEGRAL, &page) == MCB_ERR_INVALID_ARGUMENT);
}

TEST_CASE("graded answers through the C API") {
  StemsHandle h;
  mcb_answer* a = nullptr;
  REQUIRE(mcb_groups_compute(h.t, MCB_FAMILY_PRIMFOLD, 3, &a) == MCB_OK);
  char* text = nullptr;
  REQUIRE(mcb_answer_render(a, 1, &text) == MCB_OK);
  json j = json::parse(take(text));
  CHECK(j.at("family") == "primfold");
  CHECK(j.at("total").at("torsion") == json::array({12}));
  mcb_answer_free(a);

  CHECK(mcb_groups_compute(h.t, MCB_FAMILY_CUSPCOB, 12, &a) == MCB_ERR_OUT_OF_TABLE);
}

TEST_CASE("verification suites through the C API") {
  mcb_report* rep = nullptr;
  REQUIRE(mcb_verify(1, 0, 0, 0, nullptr, &rep) == MCB_OK);
  CHECK(mcb_report_passed(rep) == 1);
  char* t1 = nullptr;
  REQUIRE(mcb_report_render(rep, 0, &t1) == MCB_OK);
  std::string first = take(t1);
  CHECK(first.find("PASS determinant_expansion") != std::string::npos);
  mcb_report_free(rep);

  REQUIRE(mcb_verify(1, 0, 0, 0, "det_expansion", &rep) == MCB_OK);
  CHECK(mcb_report_passed(rep) == 0);
  mcb_report_free(rep);

  REQUIRE(mcb_verify(2, 3, 25, 7, nullptr, &rep) == MCB_OK);
  CHECK(mcb_report_passed(rep) == 1);
  char* r1 = nullptr;
  REQUIRE(mcb_report_render(rep, 0, &r1) == MCB_OK);
  std::string render_a = take(r1);
  mcb_report_free(rep);

  // determinism: identical bytes for identical configuration
  REQUIRE(mcb_verify(2, 3, 25, 7, nullptr, &rep) == MCB_OK);
  char* r2 = nullptr;
  REQUIRE(mcb_report_render(rep, 0, &r2) == MCB_OK);
  CHECK(take(r2) == render_a);
  mcb_report_free(rep);

  CHECK(mcb_verify(3, 0, 0, 0, nullptr, &rep) == MCB_ERR_INVALID_ARGUMENT);
  CHECK(mcb_verify(2, 0, 0, 0, "det_expansion", &rep) == MCB_ERR_INVALID_ARGUMENT);
}
