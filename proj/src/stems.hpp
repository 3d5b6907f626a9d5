#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fga.hpp"

namespace morincob {

// Element of a stem, written in the cyclic decomposition the data file
// declares for that degree (free coordinates first). Coordinates are kept in
// canonical residue ranges.
struct StemElement {
  int degree = 0;
  std::vector<Int> coords;

  bool operator==(const StemElement& o) const = default;
};

// One stem as declared by the data file. The declared factor list follows
// the customary presentation (e.g. Z_56 x Z_9 in degree 11) and need not be
// an invariant-factor chain; `canonical` is the canonicalization, and the
// two matrices convert coordinates between the declared generators and the
// canonical ones.
struct DeclaredStem {
  int degree = 0;
  std::size_t free_rank = 0;
  std::vector<Int> factors;
  std::vector<std::string> generator_names;
  FinAbGroup canonical;
  IntMatrix to_canonical;
  IntMatrix from_canonical;

  std::size_t gen_count() const { return free_rank + factors.size(); }
  Int gen_order(std::size_t i) const {
    return i < free_rank ? Int(0) : factors[i - free_rank];
  }
};

struct ThreePrimaryGen {
  int degree = 0;
  std::string name;
  std::vector<Int> coords;
};

struct ProductEntry {
  std::string lhs, rhs;
  StemElement result;
};

// The graded composition ring data up to degree 11: groups, named
// generators, three-primary annotations and a partial product table.
// Immutable after load; products absent from the table are reported as
// unknown, never guessed.
class StemTable {
 public:
  static constexpr int max_degree = 11;

  static StemTable load_json_text(const std::string& text);
  static StemTable load_file(const std::string& path);
  static const StemTable& bundled();
  static const char* bundled_json_text();

  const DeclaredStem& declared(int n) const;
  const std::vector<ThreePrimaryGen>& three_primary() const { return three_primary_; }
  const std::vector<ProductEntry>& products() const { return products_; }

  // Canonical group of the n-th stem. Negative stems are zero; degrees
  // beyond the table throw OutOfTableError.
  FinAbGroup group(int n) const;
  bool in_table(int n) const { return n <= max_degree; }

  // Named elements: every declared generator plus every three-primary
  // annotation, in declared coordinates.
  StemElement named_element(const std::string& name) const;
  bool has_name(const std::string& name) const { return named_.count(name) > 0; }
  int name_degree(const std::string& name) const;

  StemElement zero_element(int degree) const;
  StemElement unit() const { return named_element("iota"); }

  // Stored product (or its skew-commuted mirror); no fabrication.
  std::optional<StemElement> lookup_product(const std::string& lhs,
                                            const std::string& rhs) const;

  // Bilinear extension of the product table. Throws UnknownProductError when
  // a needed entry is absent and OutOfTableError past degree 11.
  StemElement compose(const StemElement& a, const StemElement& b) const;

  // x -> (named element) o x as a homomorphism pi^s(n) -> pi^s(n + deg) on
  // canonical generators. Trivial source or target short-circuits to the
  // zero homomorphism; otherwise every needed product must be stored.
  GroupHom left_mult_hom(const std::string& name, int n) const;
  GroupHom left_mult_hom(const StemElement& g, int n) const;

  std::vector<Int> to_canonical_coords(const StemElement& e) const;
  Int order_of(const StemElement& e) const;

  bool operator==(const StemTable& o) const;

 private:
  StemTable() = default;
  void validate();

  std::vector<DeclaredStem> stems_;  // index = degree 0..11
  std::vector<ThreePrimaryGen> three_primary_;
  std::vector<ProductEntry> products_;
  std::map<std::pair<std::string, std::string>, StemElement> product_map_;
  std::map<std::string, StemElement> named_;
};

}  // namespace morincob
