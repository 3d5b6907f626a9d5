#include "doctest.h"
#include "normal_forms.hpp"
#include "rng.hpp"

using namespace morincob;

namespace {

const VarList XY = {"x", "y"};

MultiPoly random_poly(SplitMix64& rng, const VarList& vars, int max_terms = 5,
                      unsigned max_exp = 3) {
  MultiPoly p(vars);
  int terms = 1 + static_cast<int>(rng.below(max_terms));
  for (int t = 0; t < terms; ++t) {
    Expo e(vars.size());
    for (auto& x : e) x = static_cast<unsigned>(rng.below(max_exp + 1));
    p.add_term(e, rng.rational(9, 4));
  }
  return p;
}

}  // namespace

TEST_CASE("parsing and canonical printing") {
  VarList v = {"x"};
  MultiPoly p = MultiPoly::parse(v, "(x + 1)^2");
  CHECK(p.to_string() == "x^2 + 2*x + 1");
  CHECK(p == MultiPoly::parse(v, "x^2 + 2*x + 1"));
  CHECK(MultiPoly::parse(XY, "x*y - y*x").is_zero());
  CHECK(MultiPoly::parse(XY, "3/2*x - 1/2*x").to_string() == "x");
  CHECK(MultiPoly::parse(XY, "-(x - y)").to_string() == "-x + y");
  CHECK(MultiPoly::parse(XY, "0").is_zero());
  CHECK_THROWS_AS(MultiPoly::parse(XY, "x + z"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse(XY, "x /"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse(XY, "x / y"), std::invalid_argument);
}

TEST_CASE("derivatives") {
  VarList v = {"t1", "t2", "x"};
  MultiPoly z1 = MultiPoly::parse(v, "t1*x + t2*x^2");
  CHECK(z1.derivative(2) == MultiPoly::parse(v, "t1 + 2*t2*x"));
  CHECK(z1.derivative(0) == MultiPoly::parse(v, "x"));
  CHECK(MultiPoly::constant(v, 5).derivative(1).is_zero());
}

TEST_CASE("substitution and evaluation agree") {
  SplitMix64 rng(0x5eedull);
  VarList u = {"u"};
  for (int trial = 0; trial < 25; ++trial) {
    MultiPoly p = random_poly(rng, XY);
    MultiPoly img_x = random_poly(rng, u, 3, 2);
    MultiPoly img_y = random_poly(rng, u, 3, 2);
    MultiPoly comp = p.substitute({img_x, img_y});
    Rat at = rng.rational(5, 3);
    CHECK(comp.eval({at}) == p.eval({img_x.eval({at}), img_y.eval({at})}));
  }
}

TEST_CASE("ring axioms on random polynomials") {
  SplitMix64 rng(0xabcull);
  VarList vars = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly p = random_poly(rng, vars, 4, 2);
    MultiPoly q = random_poly(rng, vars, 4, 2);
    MultiPoly r = random_poly(rng, vars, 4, 2);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  SplitMix64 rng(0x777ull);
  for (int trial = 0; trial < 100; ++trial) {
    MultiPoly p = random_poly(rng, XY);
    MultiPoly q = random_poly(rng, XY);
    std::vector<Rat> pt = {rng.rational(9, 5), rng.rational(9, 5)};
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
  }
}

TEST_CASE("variable mismatch is rejected") {
  MultiPoly p = MultiPoly::parse({"x"}, "x");
  MultiPoly q = MultiPoly::parse({"y"}, "y");
  CHECK_THROWS_AS(p + q, std::invalid_argument);
  CHECK_THROWS_AS(p * q, std::invalid_argument);
}

TEST_CASE("exact division") {
  VarList v = {"x", "y"};
  MultiPoly num = MultiPoly::parse(v, "x^2 - y^2");
  auto q = num.divide_exact(MultiPoly::parse(v, "x - y"));
  REQUIRE(q.has_value());
  CHECK(*q == MultiPoly::parse(v, "x + y"));
  CHECK(!num.divide_exact(MultiPoly::parse(v, "x + 1")).has_value());
  SplitMix64 rng(0x99ull);
  for (int trial = 0; trial < 20; ++trial) {
    MultiPoly a = random_poly(rng, XY);
    MultiPoly b = random_poly(rng, XY);
    if (b.is_zero()) continue;
    auto quo = (a * b).divide_exact(b);
    REQUIRE(quo.has_value());
    CHECK(*quo == a);
  }
}

TEST_CASE("cofactor and fraction-free determinants coincide") {
  SplitMix64 rng(0x31415ull);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + rng.below(3);  // up to 4x4
    PolyMatrix m(XY, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = random_poly(rng, XY, 2, 1);
    CHECK(m.det_cofactor() == m.det_bareiss());
  }
  // singular case
  PolyMatrix s(XY, 2, 2);
  s.at(0, 0) = MultiPoly::parse(XY, "x");
  s.at(0, 1) = MultiPoly::parse(XY, "y");
  s.at(1, 0) = MultiPoly::parse(XY, "2*x");
  s.at(1, 1) = MultiPoly::parse(XY, "2*y");
  CHECK(s.det_cofactor().is_zero());
  CHECK(s.det_bareiss().is_zero());
}

TEST_CASE("normal forms") {
  PolyMap s1 = morin_normal_form(1);
  VarList v1 = {"t1", "x"};
  CHECK(s1.coords[0] == MultiPoly::parse(v1, "t1"));
  CHECK(s1.coords[1] == MultiPoly::parse(v1, "t1*x"));
  CHECK(s1.coords[2] == MultiPoly::parse(v1, "x^2"));

  PolyMatrix j1 = s1.jacobian();
  CHECK(j1.at(0, 0) == MultiPoly::parse(v1, "1"));
  CHECK(j1.at(1, 0) == MultiPoly::parse(v1, "x"));
  CHECK(j1.at(1, 1) == MultiPoly::parse(v1, "t1"));
  CHECK(j1.at(2, 0).is_zero());
  CHECK(j1.at(2, 1) == MultiPoly::parse(v1, "2*x"));

  PolyMap s2 = morin_normal_form(2);
  VarList v2 = {"t1", "t2", "t3", "x"};
  CHECK(s2.coords[3] == MultiPoly::parse(v2, "t1*x + t2*x^2"));
  CHECK(s2.coords[4] == MultiPoly::parse(v2, "t3*x + x^3"));

  PolyMap s3 = morin_normal_form(3);
  VarList v3 = {"t1", "t2", "t3", "t4", "t5", "x"};
  CHECK(s3.coords.size() == 7);
  CHECK(s3.coords[6] == MultiPoly::parse(v3, "t4*x + t5*x^2 + x^4"));
  CHECK_THROWS_AS(morin_normal_form(0), std::invalid_argument);
}

TEST_CASE("jacobian of the identity map") {
  VarList v = {"a", "b", "c"};
  PolyMap ident{v, {MultiPoly::variable(v, 0), MultiPoly::variable(v, 1),
                    MultiPoly::variable(v, 2)}};
  PolyMatrix j = ident.jacobian();
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(j.at(r, c) == MultiPoly::constant(v, r == c ? 1 : 0));
}

TEST_CASE("elementary symmetric functions") {
  PolyMap e2 = elementary_symmetric_map(2);
  VarList v2 = {"x1", "x2"};
  CHECK(e2.coords[0] == MultiPoly::parse(v2, "x1 + x2"));
  CHECK(e2.coords[1] == MultiPoly::parse(v2, "x1*x2"));

  PolyMap e3 = elementary_symmetric_map(3);
  VarList v3 = {"x1", "x2", "x3"};
  CHECK(e3.coords[1] == MultiPoly::parse(v3, "x1*x2 + x1*x3 + x2*x3"));

  // Newton identity cross-check for k = 4: p_m = e1 p_{m-1} - e2 p_{m-2} +
  // ... +- m e_m, against the power sums computed directly.
  const int k = 4;
  PolyMap E = elementary_symmetric_map(k);
  VarList v = E.vars;
  std::vector<MultiPoly> power_sums;  // p_1 .. p_k directly
  for (int m = 1; m <= k; ++m) {
    MultiPoly pm(v);
    for (int i = 0; i < k; ++i) pm = pm + MultiPoly::variable(v, i).pow(m);
    power_sums.push_back(pm);
  }
  std::vector<MultiPoly> newton;  // from the identities
  for (int m = 1; m <= k; ++m) {
    MultiPoly pm(v);
    for (int i = 1; i < m; ++i) {
      MultiPoly term = E.coords[i - 1] * newton[m - i - 1];
      pm = (i % 2 == 1) ? pm + term : pm - term;
    }
    MultiPoly last = E.coords[m - 1].scaled(m);
    pm = (m % 2 == 1) ? pm + last : pm - last;
    newton.push_back(pm);
  }
  for (int m = 0; m < k; ++m) CHECK(newton[m] == power_sums[m]);
}

TEST_CASE("symmetric jacobian matrix and vandermonde determinant") {
  // k = 2 by hand: det [[1,1],[x2,x1]] = x1 - x2
  PolyMatrix j2 = symmetric_jacobian_matrix(2);
  VarList v2 = {"x1", "x2"};
  CHECK(j2.at(0, 0) == MultiPoly::parse(v2, "1"));
  CHECK(j2.at(1, 0) == MultiPoly::parse(v2, "x2"));
  CHECK(j2.at(1, 1) == MultiPoly::parse(v2, "x1"));
  CHECK(j2.det_cofactor() == MultiPoly::parse(v2, "x1 - x2"));

  for (int k = 2; k <= 5; ++k) {
    CHECK(elementary_symmetric_map(k).jacobian() == symmetric_jacobian_matrix(k));
    PolyMatrix j = symmetric_jacobian_matrix(k);
    MultiPoly want = vandermonde_product(k);
    CHECK(j.det_cofactor() == want);
    CHECK(j.det_bareiss() == want);
    CHECK(verify_vandermonde_jacobian(k));
  }
  CHECK(verify_vandermonde_jacobian(6));
  CHECK_THROWS_AS(verify_vandermonde_jacobian(1), std::invalid_argument);
  CHECK_THROWS_AS(verify_vandermonde_jacobian(7), std::invalid_argument);
}
