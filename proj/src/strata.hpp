#pragma once

#include <cstdint>

#include "normal_forms.hpp"
#include "verify.hpp"

namespace morincob {

// The closure of the (r+1)-tuple-point locus of the depth-r normal form,
// parametrized by the nonnegative orthant: gaps u_j between consecutive
// ordered roots, roots centered to sum zero. The polynomial is the monic
// degree r+1 polynomial with those roots; its x^r coefficient vanishes
// because the roots sum to zero. `point` is (t_{r+1}, ..., t_{2r-1}, z2).
struct OrthantPoint {
  UniPoly poly;
  std::vector<Rat> roots;
  std::vector<Rat> point;
};

OrthantPoint orthant_map(const std::vector<Rat>& gaps);

// Evaluates the normal form at the r+1 preimages of the point encoded by
// `roots` (distinct, summing to zero) and checks they coincide inside the
// plane z1 = t_1 = ... = t_r = 0.
CheckResult multiple_point_check(int r, const std::vector<Rat>& roots);

// Exact rank of the Jacobian of the elementary symmetric map at a sample on
// the stratum with the given ordered block sizes: restricted to the stratum
// tangents it equals the number of blocks, and columns inside a block
// coincide.
CheckResult stratum_rank_check(int k, const std::vector<int>& blocks,
                               const std::vector<Rat>& sample);

// The full machine-check suite: normal forms, symmetric Jacobian identity
// (symbolically up to k = max_r + 1, capped at 6), orthant map properties on
// random nonnegative rational gap vectors, multiple point checks, and
// deterministic stratum rank sweeps.
VerifyReport verify_root_strata(int max_r, int samples, std::uint64_t seed);

}  // namespace morincob
