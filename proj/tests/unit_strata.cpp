#include "doctest.h"
#include <algorithm>
#include "rng.hpp"
#include "strata.hpp"

using namespace morincob;

TEST_CASE("orthant map on fixed gap vectors") {
  // all gaps zero: the triple root at the origin
  OrthantPoint cusp = orthant_map({Rat(0), Rat(0)});
  CHECK(cusp.poly == UniPoly::parse("x^3"));
  CHECK(cusp.point == std::vector<Rat>{Rat(0), Rat(0)});  // (t3, z2)

  // gaps (1,1): roots (-1, 0, 1)
  OrthantPoint generic = orthant_map({Rat(1), Rat(1)});
  CHECK(generic.roots == std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
  CHECK(generic.poly == UniPoly::parse("x^3 - x"));
  CHECK(generic.point == std::vector<Rat>{Rat(-1), Rat(0)});

  CHECK_THROWS_AS(orthant_map({Rat(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(orthant_map({}), std::invalid_argument);

  // the trace coefficient vanishes by construction
  OrthantPoint r4 = orthant_map({Rat(1, 3), Rat(0), Rat(5, 2), Rat(2)});
  CHECK(r4.poly.coeff(4) == 0);
  CHECK(is_real_rooted(r4.poly));
}

TEST_CASE("multiple point check") {
  CheckResult ok = multiple_point_check(2, {Rat(-1), Rat(0), Rat(1)});
  CHECK(ok.pass);

  // direct evaluation: all three preimages share the image (0,0,-1,0,0)
  PolyMap sigma2 = morin_normal_form(2);
  for (Rat x : {Rat(-1), Rat(0), Rat(1)}) {
    std::vector<Rat> img = sigma2.eval({Rat(0), Rat(0), Rat(-1), x});
    CHECK(img == std::vector<Rat>{Rat(0), Rat(0), Rat(-1), Rat(0), Rat(0)});
  }

  // depth 1: the double point of the umbrella
  CheckResult fold = multiple_point_check(1, {Rat(-1), Rat(1)});
  CHECK(fold.pass);

  CHECK_THROWS_AS(multiple_point_check(2, {Rat(1), Rat(1), Rat(-2)}),
                  std::invalid_argument);  // duplicate roots
  CHECK_THROWS_AS(multiple_point_check(2, {Rat(0), Rat(1), Rat(2)}),
                  std::invalid_argument);  // nonzero sum
}

TEST_CASE("stratum rank checks") {
  // two equal coordinates then a free one: rank 2
  CheckResult a = stratum_rank_check(3, {2, 1}, {Rat(0), Rat(0), Rat(1)});
  CHECK(a.pass);
  // all distinct: full rank 3 (Vandermonde value -2 at (0,1,2))
  CheckResult b = stratum_rank_check(3, {1, 1, 1}, {Rat(0), Rat(1), Rat(2)});
  CHECK(b.pass);
  // single block: both columns coincide, rank 1
  CheckResult c = stratum_rank_check(2, {2}, {Rat(5, 7), Rat(5, 7)});
  CHECK(c.pass);

  CHECK_THROWS_AS(stratum_rank_check(3, {2, 1}, {Rat(0), Rat(1), Rat(2)}),
                  std::invalid_argument);  // off the stratum
  CHECK_THROWS_AS(stratum_rank_check(3, {2, 1}, {Rat(1), Rat(1), Rat(0)}),
                  std::invalid_argument);  // blocks not increasing
}

TEST_CASE("full strata suite passes and is deterministic") {
  VerifyReport rep = verify_root_strata(4, 100, 0x5eed5eedull);
  CHECK(rep.all_pass());
  int rank_checks = 0, mp_checks = 0;
  for (const CheckResult& c : rep.checks) {
    if (c.name.rfind("stratum_rank_", 0) == 0) ++rank_checks;
    if (c.name.rfind("multiple_point_", 0) == 0) ++mp_checks;
  }
  CHECK(rank_checks >= 20);
  CHECK(mp_checks == 20);

  VerifyReport again = verify_root_strata(4, 100, 0x5eed5eedull);
  REQUIRE(rep.checks.size() == again.checks.size());
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    CHECK(rep.checks[i].name == again.checks[i].name);
    CHECK(rep.checks[i].pass == again.checks[i].pass);
  }
}

TEST_CASE("isolation recovers the orthant roots") {
  SplitMix64 rng(0x0123ull);
  for (int trial = 0; trial < 25; ++trial) {
    int r = 1 + static_cast<int>(rng.below(4));
    std::vector<Rat> gaps;
    for (int i = 0; i < r; ++i)
      gaps.push_back(rng.below(3) == 0 ? Rat(0) : rng.nonnegative_rational(5, 3));
    OrthantPoint p = orthant_map(gaps);

    std::vector<Rat> distinct = p.roots;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    auto intervals = isolate_real_roots(p.poly);
    REQUIRE(intervals.size() == distinct.size());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      CHECK(distinct[i] > intervals[i].first);
      CHECK(distinct[i] <= intervals[i].second);
      CHECK(p.poly.eval(distinct[i]) == 0);
    }
  }
}

TEST_CASE("face pattern example") {
  // gaps (1, 0, 2): ordered block sizes (1, 2, 1)
  OrthantPoint p = orthant_map({Rat(1), Rat(0), Rat(2)});
  auto dec = p.poly.squarefree_decomposition();
  // one simple pair and one double root
  unsigned simple = 0, doubled = 0;
  for (const auto& [f, m] : dec) {
    if (m == 1) simple += f.degree();
    if (m == 2) doubled += f.degree();
  }
  CHECK(simple == 2);
  CHECK(doubled == 1);
}
