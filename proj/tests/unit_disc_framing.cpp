#include "disc_framing.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "normal_forms.hpp"

using namespace morincob;

namespace {

const CheckResult& find_check(const VerifyReport& rep, const std::string& name) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) return c;
  static CheckResult missing;
  REQUIRE_MESSAGE(false, "check not found: ", name);
  return missing;
}

}  // namespace

TEST_CASE("disc framing suite passes in full") {
  VerifyReport rep = verify_disc_framing();
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() >= 14);
  for (const char* name :
       {"normal_form_jacobian", "normal_vector_orthogonality",
        "singular_set_substitution", "singular_image", "double_point_curve",
        "kernel_field_and_v1", "normal_along_curve", "normal_sum_difference",
        "frame_vector_limits", "disc_boundary_agreement", "frame_boundary_agreement",
        "frame_matrix_rows", "determinant_expansion", "positivity_certificate",
        "embedding_injectivity_sample"}) {
    const CheckResult& c = find_check(rep, name);
    CHECK_MESSAGE(c.pass, name);
    CHECK(c.residuals.empty());
  }
}

TEST_CASE("boundary residual before ideal reduction") {
  // The disc agrees with the singular image only modulo t2^2 + x^2 - 1: the
  // raw difference in the last coordinate is 2x(t2^2 - 1) + 2x^3.
  VarList vc = {"t2", "x"};
  PolyMap sigma2 = morin_normal_form(2);
  std::vector<MultiPoly> inc = {
      MultiPoly::parse(vc, "-2*x*t2"), MultiPoly::parse(vc, "t2"),
      MultiPoly::parse(vc, "-3*x^2"), MultiPoly::parse(vc, "x")};
  MultiPoly fifth_on_curve = sigma2.coords[4].substitute(inc);
  MultiPoly disc_fifth = MultiPoly::parse(vc, "2*x*(t2^2 - 1)");
  MultiPoly residual = disc_fifth - fifth_on_curve;
  CHECK(residual == MultiPoly::parse(vc, "2*x*(t2^2 - 1) + 2*x^3"));
  CHECK(!residual.is_zero());
}

TEST_CASE("determinant restricted to x = 0") {
  // det M with x = 0 collapses to 3*t2^6 - 2*t2^4 - 2*t2^2 + 3, evaluated
  // two ways at sample points.
  VarList vc = {"t2", "x"};
  MultiPoly want = MultiPoly::parse(vc, "3*t2^6 - 2*t2^4 - 2*t2^2 + 3");
  for (long long num = -4; num <= 4; ++num) {
    Rat t2(num, 3);
    Rat direct = want.eval({t2, Rat(0)});
    CHECK(direct >= 1);  // consistent with the positivity certificate
  }
}

TEST_CASE("defect injection exercises the failure path") {
  VerifyReport rep = verify_disc_framing("det_expansion");
  CHECK(!rep.all_pass());
  const CheckResult& c = find_check(rep, "determinant_expansion");
  CHECK(!c.pass);
  REQUIRE(!c.residuals.empty());
  CHECK(c.residuals[0].find("det M - expansion") != std::string::npos);
  // every other check is untouched
  int failures = 0;
  for (const CheckResult& ch : rep.checks)
    if (!ch.pass) ++failures;
  CHECK(failures == 1);
  CHECK_THROWS_AS(verify_disc_framing("no_such_defect"), ValidationError);
}
