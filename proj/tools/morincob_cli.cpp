// Command-line front end over the C API (morincob.h).
//
// Exit codes: 0 success, 1 verification failure, 2 input or configuration
// error.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "morincob.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitConfigError = 2;

int fail(mcb_status st) {
  std::fprintf(stderr, "error (%s): %s\n", mcb_status_name(st), mcb_last_error());
  return kExitConfigError;
}

mcb_stems* open_stems(const std::string& path, int& exit_code) {
  mcb_stems* t = nullptr;
  mcb_status st =
      path.empty() ? mcb_stems_create_default(&t) : mcb_stems_create_from_file(path.c_str(), &t);
  if (st != MCB_OK) {
    exit_code = fail(st);
    return nullptr;
  }
  return t;
}

int print_rendered(mcb_status st, char* text) {
  if (st != MCB_OK) return fail(st);
  if (text == nullptr) return kExitConfigError;
  std::fputs(text, stdout);
  mcb_string_free(text);
  return kExitOk;
}

mcb_localization parse_loc(const std::string& s) {
  if (s == "odd") return MCB_LOC_ODD;
  if (s == "3") return MCB_LOC_3PRIMARY;
  return MCB_LOC_INTEGRAL;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morincob: exact cobordism groups of fold and cusp maps via the "
               "stable-stems composition ring, with symbolic verification suites"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string stems_file;
  std::string format = "text";
  app.add_option("--stems-file", stems_file,
                 "stems data file (default: the bundled table)")
      ->envname("MORINCOB_STEMS_FILE");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* cmd_stems =
      app.add_subcommand("stems", "print the stems table with generators and "
                                  "3-primary annotations");

  int page_r = 1;
  int jmax = 13;
  std::string loc = "integral";
  CLI::App* cmd_page =
      app.add_subcommand("page", "print one page of the spectral sequence");
  cmd_page->add_option("--r", page_r, "page number")->required()->check(CLI::Range(1, 3));
  cmd_page->add_option("--jmax", jmax, "top row of the grid")->check(CLI::Range(1, 13));
  cmd_page->add_option("--localization", loc, "integral, odd, or 3")
      ->check(CLI::IsMember({"integral", "odd", "3"}));

  std::string which;
  int n = 0;
  CLI::App* cmd_groups =
      app.add_subcommand("groups", "assembled cobordism group answers");
  cmd_groups->add_option("--which", which, "family")
      ->required()
      ->check(CLI::IsMember({"primfold", "primcusp3", "cuspcob"}));
  cmd_groups->add_option("--n", n, "source dimension")->required()->check(CLI::Range(0, 11));

  int appendix = 1;
  int max_r = 4;
  int samples = 100;
  std::uint64_t seed = 0;
  std::string defect;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "run a symbolic verification suite");
  cmd_verify->add_option("--appendix", appendix,
                         "1 = cusp disc/framing identities, 2 = root strata")
      ->required()
      ->check(CLI::IsMember({1, 2}));
  cmd_verify->add_option("--r", max_r, "maximum singularity depth (suite 2)")
      ->check(CLI::Range(1, 8));
  cmd_verify->add_option("--samples", samples, "random samples (suite 2)")
      ->check(CLI::Range(1, 100000));
  cmd_verify->add_option("--seed", seed, "seed for the sampled checks");
  cmd_verify->add_option("--inject-defect", defect,
                         "corrupt a named expected value to exercise failure "
                         "reporting (suite 1: det_expansion)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  const int as_json = format == "json" ? 1 : 0;

  if (cmd_verify->parsed()) {
    mcb_report* rep = nullptr;
    mcb_status st = mcb_verify(appendix, max_r, samples, seed,
                               defect.empty() ? nullptr : defect.c_str(), &rep);
    if (st != MCB_OK) return fail(st);
    char* text = nullptr;
    st = mcb_report_render(rep, as_json, &text);
    if (st != MCB_OK) {
      mcb_report_free(rep);
      return fail(st);
    }
    std::fputs(text, stdout);
    mcb_string_free(text);
    int ok = mcb_report_passed(rep);
    mcb_report_free(rep);
    return ok ? kExitOk : kExitVerifyFailed;
  }

  int exit_code = kExitOk;
  mcb_stems* table = open_stems(stems_file, exit_code);
  if (table == nullptr) return exit_code;

  int rc = kExitOk;
  if (cmd_stems->parsed()) {
    char* text = nullptr;
    mcb_status st = mcb_stems_render(table, as_json, &text);
    rc = print_rendered(st, text);
  } else if (cmd_page->parsed()) {
    mcb_page* page = nullptr;
    mcb_status st = mcb_page_compute(table, page_r, jmax, parse_loc(loc), &page);
    if (st != MCB_OK) {
      rc = fail(st);
    } else {
      char* text = nullptr;
      mcb_status rst = mcb_page_render(page, as_json, &text);
      rc = print_rendered(rst, text);
      mcb_page_free(page);
    }
  } else if (cmd_groups->parsed()) {
    mcb_family family = which == "primfold"    ? MCB_FAMILY_PRIMFOLD
                        : which == "primcusp3" ? MCB_FAMILY_PRIMCUSP3
                                               : MCB_FAMILY_CUSPCOB;
    mcb_answer* answer = nullptr;
    mcb_status st = mcb_groups_compute(table, family, n, &answer);
    if (st != MCB_OK) {
      rc = fail(st);
    } else {
      char* text = nullptr;
      mcb_status rst = mcb_answer_render(answer, as_json, &text);
      rc = print_rendered(rst, text);
      mcb_answer_free(answer);
    }
  }

  mcb_stems_free(table);
  return rc;
}
