#include <algorithm>
#include <set>

#include "doctest.h"
#include "fga.hpp"
#include "rng.hpp"
#include "support/oracles.hpp"

using namespace morincob;

namespace {

IntMatrix mat(std::size_t r, std::size_t c, std::vector<long long> v) {
  std::vector<Int> entries(v.begin(), v.end());
  return IntMatrix(r, c, std::move(entries));
}

FinAbGroup cyc(long long n) { return FinAbGroup::cyclic(Int(n)); }

GroupHom hom1(long long d_src, long long d_tgt, long long entry) {
  FinAbGroup s = d_src == 0 ? FinAbGroup::free(1) : cyc(d_src);
  FinAbGroup t = d_tgt == 0 ? FinAbGroup::free(1) : cyc(d_tgt);
  return GroupHom(s, t, mat(1, 1, {entry}));
}

FinAbGroup random_finite_group(SplitMix64& rng) {
  FinAbGroup g;
  std::size_t k = rng.below(3);
  Int d = 1;
  for (std::size_t i = 0; i < k; ++i) {
    d *= Int(rng.range(2, 4));
    g.torsion.push_back(d);
    if (g.torsion_order() > 100) {
      g.torsion.pop_back();
      break;
    }
  }
  return g;
}

GroupHom random_hom(SplitMix64& rng, const FinAbGroup& s, const FinAbGroup& t) {
  // Columns built from valid images: generator of order d must land on an
  // element killed by d. Pick the image of generator j as a random multiple
  // of (d'_i / gcd(d'_i, d_j)) in each cyclic factor.
  IntMatrix m(t.gen_count(), s.gen_count());
  for (std::size_t j = 0; j < s.gen_count(); ++j) {
    Int dj = s.gen_order(j);
    for (std::size_t i = 0; i < t.gen_count(); ++i) {
      Int di = t.gen_order(i);
      if (di == 0) {
        m.at(i, j) = 0;  // finite order cannot hit the free part
      } else {
        Int step = dj == 0 ? Int(1) : di / gcd_int(di, dj);
        m.at(i, j) = step * Int(rng.range(0, 5));
      }
    }
  }
  return GroupHom(s, t, m);
}

}  // namespace

TEST_CASE("groups from presentations") {
  CHECK(group_from_presentation(1, mat(1, 1, {24})) == cyc(24));
  CHECK(group_from_presentation(1, IntMatrix(0, 1)) == FinAbGroup::free(1));
  FinAbGroup g = group_from_presentation(2, mat(2, 2, {2, 0, 0, 12}));
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Int>{Int(2), Int(12)});
  // relation rows that only span a rank-1 lattice leave a free factor
  FinAbGroup h = group_from_presentation(2, mat(2, 2, {2, 4, 4, 8}));
  CHECK(h.free_rank == 1);
  CHECK(h.torsion == std::vector<Int>{Int(2)});
}

TEST_CASE("presentation invariance") {
  SplitMix64 rng(0xfeedull);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t gens = 1 + rng.below(3), rels = 1 + rng.below(3);
    IntMatrix r(rels, gens);
    for (std::size_t i = 0; i < rels; ++i)
      for (std::size_t j = 0; j < gens; ++j) r.at(i, j) = Int(rng.range(-6, 6));
    FinAbGroup base = group_from_presentation(gens, r);

    // permute relations
    IntMatrix perm = r;
    if (rels > 1) perm.swap_rows(0, rels - 1);
    CHECK(group_from_presentation(gens, perm) == base);

    // permute generators (columns)
    IntMatrix pcols = r;
    if (gens > 1) pcols.swap_cols(0, gens - 1);
    CHECK(group_from_presentation(gens, pcols) == base);

    // add a relation that is an integer combination of the others
    IntMatrix extra(rels + 1, gens);
    for (std::size_t i = 0; i < rels; ++i)
      for (std::size_t j = 0; j < gens; ++j) extra.at(i, j) = r.at(i, j);
    for (std::size_t j = 0; j < gens; ++j)
      extra.at(rels, j) = Int(2) * r.at(0, j) - Int(3) * r.at(rels - 1, j);
    CHECK(group_from_presentation(gens, extra) == base);
  }
}

TEST_CASE("order factors through primary parts") {
  SplitMix64 rng(0xbeefull);
  for (int trial = 0; trial < 30; ++trial) {
    FinAbGroup g = random_finite_group(rng);
    Int order = g.torsion_order();
    Int product = 1;
    std::set<Int> primes;
    for (const Int& d : g.torsion) {
      Int rest = d;
      for (Int p = 2; p * p <= rest; ++p)
        while (rest % p == 0) {
          primes.insert(p);
          rest /= p;
        }
      if (rest > 1) primes.insert(rest);
    }
    for (const Int& p : primes) product *= p_primary_part(g, p).torsion_order();
    CHECK(product == order);
  }
}

TEST_CASE("kernel, image, cokernel on the named examples") {
  // surjection Z -> Z_2
  GroupHom surj = hom1(0, 2, 1);
  CHECK(hom_kernel(surj) == FinAbGroup::free(1));
  CHECK(hom_cokernel(surj).is_trivial());
  CHECK(hom_image(surj) == cyc(2));

  // zero map Z_24 -> Z_2
  GroupHom z = GroupHom::zero(cyc(24), cyc(2));
  CHECK(hom_kernel(z) == cyc(24));
  CHECK(hom_cokernel(z) == cyc(2));
  CHECK(hom_image(z).is_trivial());

  // multiplication by 2 on Z_4, brute-force checked
  GroupHom m2 = hom1(4, 4, 2);
  CHECK(hom_kernel(m2) == cyc(2));
  CHECK(hom_cokernel(m2) == cyc(2));
  auto bf = testing::brute_force_hom(m2);
  CHECK(bf.kernel_size == 2);
  CHECK(bf.image_size == 2);
}

TEST_CASE("exactness |image| * |kernel| = |source| on random homs") {
  SplitMix64 rng(0xc0ffeeull);
  for (int trial = 0; trial < 40; ++trial) {
    FinAbGroup s = random_finite_group(rng);
    FinAbGroup t = random_finite_group(rng);
    GroupHom h = random_hom(rng, s, t);
    REQUIRE(h.is_well_defined());
    auto bf = testing::brute_force_hom(h);
    CHECK(bf.kernel_size * bf.image_size == s.torsion_order());
    CHECK(hom_kernel(h).torsion_order() == bf.kernel_size);
    CHECK(hom_image(h).torsion_order() == bf.image_size);
    CHECK(hom_cokernel(h).torsion_order() * bf.image_size == t.torsion_order());
  }
}

TEST_CASE("kernel inclusion and cokernel projection are compatible maps") {
  GroupHom h(cyc(24), cyc(4), mat(1, 1, {2}));
  auto k = hom_kernel_with_inclusion(h);
  CHECK(k.inclusion.is_well_defined());
  CHECK(compose(h, k.inclusion).is_zero());
  CHECK(k.group == cyc(12));  // elements x with 2x = 0 mod 4: even x

  auto c = hom_cokernel_with_projection(h);
  CHECK(c.projection.is_well_defined());
  CHECK(compose(c.projection, h).is_zero());
  CHECK(c.group == cyc(2));
}

TEST_CASE("homology of a two-step complex") {
  // Z_8 --x4--> Z_8 --x4--> Z_8: ker = Z_2's worth {0,2,4,6}, im = {0,4}
  GroupHom f = hom1(8, 8, 4);
  CHECK(homology(f, f) == cyc(2));
}

TEST_CASE("primary parts and odd parts") {
  CHECK(p_primary_part(cyc(24), 3) == cyc(3));
  FinAbGroup g56_9 = group_from_presentation(2, mat(2, 2, {56, 0, 0, 9}));
  CHECK(g56_9 == cyc(504));
  CHECK(p_primary_part(g56_9, 3) == cyc(9));
  CHECK(p_primary_part(FinAbGroup::free(1), 3) == FinAbGroup::free(1));
  CHECK(odd_part(cyc(24)) == cyc(3));
  FinAbGroup z2cubed{0, {2, 2, 2}};
  CHECK(odd_part(z2cubed).is_trivial());
  FinAbGroup z_plus_z2{1, {2}};
  CHECK(odd_part(z_plus_z2) == FinAbGroup::free(1));
  CHECK_THROWS_AS(p_primary_part(cyc(24), 4), std::invalid_argument);
  CHECK_THROWS_AS(p_primary_part(cyc(24), 1), std::invalid_argument);
}

TEST_CASE("localization is exact on random homs") {
  SplitMix64 rng(0xdadull);
  for (int trial = 0; trial < 30; ++trial) {
    FinAbGroup s = random_finite_group(rng);
    FinAbGroup t = random_finite_group(rng);
    GroupHom h = random_hom(rng, s, t);
    for (Localization loc : {Localization::odd, Localization::three_primary}) {
      GroupHom hl = localize_hom(h, loc);
      CHECK(hl.is_well_defined());
      CHECK(localize(hom_kernel(h), loc) == hom_kernel(hl));
      CHECK(localize(hom_image(h), loc) == hom_image(hl));
      CHECK(localize(hom_cokernel(h), loc) == hom_cokernel(hl));
    }
  }
}

TEST_CASE("localization projection is a well-defined surjection") {
  FinAbGroup g{1, {6, 24}};
  GroupHom p3 = localization_projection(g, Localization::three_primary);
  CHECK(p3.is_well_defined());
  CHECK(p3.target == FinAbGroup{1, {3, 3}});
  GroupHom podd = localization_projection(g, Localization::odd);
  CHECK(podd.target == FinAbGroup{1, {3, 3}});
  CHECK(hom_cokernel(p3).is_trivial());
}

TEST_CASE("direct sums canonicalize") {
  CHECK(direct_sum(cyc(2), cyc(3)) == cyc(6));
  CHECK(direct_sum(cyc(2), cyc(4)) == FinAbGroup{0, {2, 4}});
  CHECK(direct_sum(FinAbGroup::free(1), cyc(5)) == FinAbGroup{1, {5}});
  CHECK(direct_sum(cyc(6), cyc(4)) == FinAbGroup{0, {2, 12}});
}

TEST_CASE("element orders") {
  FinAbGroup g{0, {2, 12}};
  CHECK(element_order(g, {Int(1), Int(0)}) == 2);
  CHECK(element_order(g, {Int(0), Int(4)}) == 3);
  CHECK(element_order(g, {Int(1), Int(1)}) == 12);
  CHECK(element_order(FinAbGroup::free(1), {Int(3)}) == 0);
}

TEST_CASE("invalid homomorphisms are detected") {
  // Z_2 -> Z_4 sending the generator to an element of order 4
  GroupHom bad(cyc(2), cyc(4), mat(1, 1, {1}));
  CHECK(!bad.is_well_defined());
  GroupHom good(cyc(2), cyc(4), mat(1, 1, {2}));
  CHECK(good.is_well_defined());
}
