#pragma once

#include <string>

#include "json.hpp"
#include "ss.hpp"
#include "verify.hpp"

namespace morincob {

// Text renderings follow the customary table/diagram layouts (columns i
// rightward, rows j upward); JSON renderings carry "schema": "1" and, for
// the stems table, re-parse as a stems data file.

nlohmann::json group_to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const nlohmann::json& j);

std::string declared_stem_display(const DeclaredStem& s);

std::string render_stems_text(const StemTable& t);
nlohmann::json stems_to_json(const StemTable& t);

std::string render_page_text(const SSPage& p);
nlohmann::json page_to_json(const SSPage& p);

std::string render_answer_text(const GradedAnswer& a);
nlohmann::json answer_to_json(const GradedAnswer& a);

std::string render_report_text(const VerifyReport& r);
nlohmann::json report_to_json(const VerifyReport& r);

const char* localization_name(Localization loc);
const char* cell_status_name(CellStatus s);

}  // namespace morincob
