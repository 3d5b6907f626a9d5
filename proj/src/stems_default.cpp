#include "stems.hpp"

namespace morincob {

// Bundled stems data. Declared decompositions follow the customary
// presentation of each group; the degree-11 stem is declared as Z_56 x Z_9
// (canonically Z_504).
//
// Conventions recorded here rather than derived: alpha1 = 8 * nu (the order-3
// subgroup of Z_24 is {0, 8, 16}; 8 vs 16 is a declared sign choice, and all
// derived kernels and cokernels are invariant under it). Likewise
// alpha2 = 80 * sigma, beta1 = 2 * (degree-10 generator), alpha3 = the
// declared Z_9 generator.
//
// The product list stores exactly: all unit products, eta o eta,
// eta o eta^2, and the alpha1 products landing in degrees <= 11. The alpha1
// products other than alpha1 o iota are zero: an alpha1 multiple has order
// dividing 3, which forces zero whenever the target has no 3-torsion, and
// alpha1 o sigma = alpha1 o alpha2 = 0 because the composite is trivial on
// the 3-primary part. Everything else is deliberately absent ("unknown"),
// never zero-filled.
const char* StemTable::bundled_json_text() {
  return R"json({
  "max_degree": 11,
  "groups": [
    {"n": 0,  "rank": 1, "torsion": [],        "generators": ["iota"]},
    {"n": 1,  "rank": 0, "torsion": [2],       "generators": ["eta"]},
    {"n": 2,  "rank": 0, "torsion": [2],       "generators": ["eta2"]},
    {"n": 3,  "rank": 0, "torsion": [24],      "generators": ["nu"]},
    {"n": 4,  "rank": 0, "torsion": [],        "generators": []},
    {"n": 5,  "rank": 0, "torsion": [],        "generators": []},
    {"n": 6,  "rank": 0, "torsion": [2],       "generators": ["nu2"]},
    {"n": 7,  "rank": 0, "torsion": [240],     "generators": ["sigma"]},
    {"n": 8,  "rank": 0, "torsion": [2, 2],    "generators": ["epsilon", "eta_sigma"]},
    {"n": 9,  "rank": 0, "torsion": [2, 2, 2], "generators": ["nu3", "eta_epsilon", "mu"]},
    {"n": 10, "rank": 0, "torsion": [6],       "generators": ["etamu_beta1"]},
    {"n": 11, "rank": 0, "torsion": [56, 9],   "generators": ["zeta56", "alpha3"]}
  ],
  "three_primary": [
    {"n": 3,  "name": "alpha1", "element": [8]},
    {"n": 7,  "name": "alpha2", "element": [80]},
    {"n": 10, "name": "beta1",  "element": [2]},
    {"n": 11, "name": "alpha3", "element": [0, 1]}
  ],
  "products": [
    {"lhs": "iota", "rhs": "iota",        "result": {"n": 0,  "coords": [1]}},
    {"lhs": "iota", "rhs": "eta",         "result": {"n": 1,  "coords": [1]}},
    {"lhs": "iota", "rhs": "eta2",        "result": {"n": 2,  "coords": [1]}},
    {"lhs": "iota", "rhs": "nu",          "result": {"n": 3,  "coords": [1]}},
    {"lhs": "iota", "rhs": "nu2",         "result": {"n": 6,  "coords": [1]}},
    {"lhs": "iota", "rhs": "sigma",       "result": {"n": 7,  "coords": [1]}},
    {"lhs": "iota", "rhs": "epsilon",     "result": {"n": 8,  "coords": [1, 0]}},
    {"lhs": "iota", "rhs": "eta_sigma",   "result": {"n": 8,  "coords": [0, 1]}},
    {"lhs": "iota", "rhs": "nu3",         "result": {"n": 9,  "coords": [1, 0, 0]}},
    {"lhs": "iota", "rhs": "eta_epsilon", "result": {"n": 9,  "coords": [0, 1, 0]}},
    {"lhs": "iota", "rhs": "mu",          "result": {"n": 9,  "coords": [0, 0, 1]}},
    {"lhs": "iota", "rhs": "etamu_beta1", "result": {"n": 10, "coords": [1]}},
    {"lhs": "iota", "rhs": "zeta56",      "result": {"n": 11, "coords": [1, 0]}},
    {"lhs": "iota", "rhs": "alpha3",      "result": {"n": 11, "coords": [0, 1]}},

    {"lhs": "eta", "rhs": "eta",  "result": {"n": 2, "coords": [1]}},
    {"lhs": "eta", "rhs": "eta2", "result": {"n": 3, "coords": [12]}},

    {"lhs": "alpha1", "rhs": "iota",      "result": {"n": 3,  "coords": [8]}},
    {"lhs": "alpha1", "rhs": "eta",       "result": {"n": 4,  "coords": []}},
    {"lhs": "alpha1", "rhs": "eta2",      "result": {"n": 5,  "coords": []}},
    {"lhs": "alpha1", "rhs": "nu",        "result": {"n": 6,  "coords": [0]}},
    {"lhs": "alpha1", "rhs": "alpha1",    "result": {"n": 6,  "coords": [0]}},
    {"lhs": "alpha1", "rhs": "nu2",       "result": {"n": 9,  "coords": [0, 0, 0]}},
    {"lhs": "alpha1", "rhs": "sigma",     "result": {"n": 10, "coords": [0]}},
    {"lhs": "alpha1", "rhs": "alpha2",    "result": {"n": 10, "coords": [0]}},
    {"lhs": "alpha1", "rhs": "epsilon",   "result": {"n": 11, "coords": [0, 0]}},
    {"lhs": "alpha1", "rhs": "eta_sigma", "result": {"n": 11, "coords": [0, 0]}}
  ]
})json";
}

}  // namespace morincob
