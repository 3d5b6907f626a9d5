#include "strata.hpp"

#include <algorithm>
#include <stdexcept>

#include "rng.hpp"

namespace morincob {

namespace {

CheckResult start(const std::string& name, const std::string& note) {
  CheckResult r;
  r.name = name;
  r.note = note;
  r.pass = true;
  return r;
}

// Exact rank over Q by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[row]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<int> gap_block_pattern(const std::vector<Rat>& gaps) {
  std::vector<int> blocks{1};
  for (const Rat& g : gaps) {
    if (g == 0)
      ++blocks.back();
    else
      blocks.push_back(1);
  }
  return blocks;
}

// Ordered multiplicity pattern of the real roots, read off the polynomial
// alone: isolate the distinct roots, then attribute each to the squarefree
// factor of its multiplicity.
std::vector<int> root_multiplicity_pattern(const UniPoly& p) {
  auto pieces = p.squarefree_decomposition();
  auto intervals = isolate_real_roots(p);
  std::vector<int> pattern;
  for (const auto& [lo, hi] : intervals) {
    int mult = 0;
    for (const auto& [factor, m] : pieces)
      if (count_real_roots_in(factor, lo, hi) == 1) {
        mult = static_cast<int>(m);
        break;
      }
    pattern.push_back(mult);
  }
  return pattern;
}

std::string pattern_str(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i)
    s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

// Ordered block-size compositions of k.
void compositions(int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int first = 1; first <= k; ++first) {
    cur.push_back(first);
    compositions(k - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

OrthantPoint orthant_map(const std::vector<Rat>& gaps) {
  const int r = static_cast<int>(gaps.size());
  if (r < 1) throw std::invalid_argument("orthant_map: need at least one gap");
  for (const Rat& g : gaps)
    if (g < 0) throw std::invalid_argument("orthant_map: gaps must be nonnegative");

  OrthantPoint out;
  std::vector<Rat> partial{Rat(0)};
  for (const Rat& g : gaps) partial.push_back(partial.back() + g);
  Rat shift = 0;
  for (const Rat& s : partial) shift += s;
  shift /= Rat(Int(r + 1));
  for (const Rat& s : partial) out.roots.push_back(s - shift);

  out.poly = UniPoly::from_roots(out.roots);
  if (out.poly.coeff(r) != 0)
    throw std::logic_error("orthant_map: trace coefficient failed to vanish");

  // Monic polynomial x^{r+1} + t_{2r-1} x^{r-1} + ... + t_{r+1} x - z2.
  for (int k = 1; k <= r - 1; ++k) out.point.push_back(out.poly.coeff(k));
  out.point.push_back(-out.poly.coeff(0));
  return out;
}

CheckResult multiple_point_check(int r, const std::vector<Rat>& roots) {
  if (r < 1) throw std::invalid_argument("multiple_point_check: r must be >= 1");
  if (static_cast<int>(roots.size()) != r + 1)
    throw std::invalid_argument("multiple_point_check: need r+1 roots");
  Rat sum = 0;
  for (const Rat& x : roots) sum += x;
  if (sum != 0) throw std::invalid_argument("multiple_point_check: roots must sum to zero");
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw std::invalid_argument("multiple_point_check: roots must be distinct");

  auto r0 = start("multiple_point_r" + std::to_string(r),
                  "the r+1 preimages over the encoded point share one image in the "
                  "plane z1 = t_1 = ... = t_r = 0");
  UniPoly p = UniPoly::from_roots(roots);
  PolyMap sigma = morin_normal_form(r);

  std::vector<Rat> base(2 * r, Rat(0));  // t_1..t_{2r-1}, x
  for (int k = 1; k <= r - 1; ++k) base[r + k - 1] = p.coeff(k);

  std::vector<Rat> first_image;
  for (int j = 0; j <= r; ++j) {
    std::vector<Rat> pt = base;
    pt[2 * r - 1] = roots[j];
    std::vector<Rat> img = sigma.eval(pt);
    if (j == 0) {
      first_image = img;
      for (int i = 0; i < r; ++i)
        if (img[i] != 0) {
          r0.pass = false;
          r0.residuals.push_back("t_" + std::to_string(i + 1) +
                                 " coordinate nonzero: " + rat_str(img[i]));
        }
      if (img[2 * r - 1] != 0) {
        r0.pass = false;
        r0.residuals.push_back("z1 coordinate nonzero: " + rat_str(img[2 * r - 1]));
      }
    } else if (img != first_image) {
      r0.pass = false;
      r0.residuals.push_back("preimage " + std::to_string(j) +
                             " maps to a different point");
    }
  }
  return r0;
}

CheckResult stratum_rank_check(int k, const std::vector<int>& blocks,
                               const std::vector<Rat>& sample) {
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("stratum_rank_check: bad block size");
    total += b;
  }
  if (total != k || static_cast<int>(sample.size()) != k)
    throw std::invalid_argument("stratum_rank_check: blocks must partition the sample");
  {
    std::size_t pos = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int i = 1; i < blocks[b]; ++i)
        if (sample[pos + i] != sample[pos])
          throw std::invalid_argument("stratum_rank_check: sample is off the stratum");
      if (b + 1 < blocks.size() && !(sample[pos] < sample[pos + blocks[b]]))
        throw std::invalid_argument("stratum_rank_check: sample is off the stratum");
      pos += blocks[b];
    }
  }

  const int s = static_cast<int>(blocks.size());
  auto res = start("stratum_rank_k" + std::to_string(k) + "_" + pattern_str(blocks),
                   "Jacobian rank on the stratum equals the block count");

  PolyMatrix jac = elementary_symmetric_map(k).jacobian();
  std::vector<std::vector<Rat>> J(k, std::vector<Rat>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) J[i][j] = jac.at(i, j).eval(sample);

  // Columns coincide inside each block, which bounds the full rank by s.
  std::size_t pos = 0;
  for (int b : blocks) {
    for (int i = 1; i < b; ++i)
      for (int row = 0; row < k; ++row)
        if (J[row][pos + i] != J[row][pos]) {
          res.pass = false;
          res.residuals.push_back("columns differ inside a block at row " +
                                  std::to_string(row));
        }
    pos += b;
  }

  // Restriction to the stratum tangents: one summed column per block.
  std::vector<std::vector<Rat>> JT(k, std::vector<Rat>(s, Rat(0)));
  pos = 0;
  for (int b = 0; b < s; ++b) {
    for (int i = 0; i < blocks[b]; ++i)
      for (int row = 0; row < k; ++row) JT[row][b] += J[row][pos + i];
    pos += blocks[b];
  }

  int rank_restricted = rational_rank(JT);
  int rank_full = rational_rank(J);
  if (rank_restricted != s) {
    res.pass = false;
    res.residuals.push_back("restricted rank " + std::to_string(rank_restricted) +
                            ", expected " + std::to_string(s));
  }
  if (rank_full != s) {
    res.pass = false;
    res.residuals.push_back("full rank " + std::to_string(rank_full) + ", expected " +
                            std::to_string(s));
  }
  return res;
}

VerifyReport verify_root_strata(int max_r, int samples, std::uint64_t seed) {
  if (max_r < 1 || max_r > 8)
    throw std::invalid_argument("verify_root_strata: max_r must be in [1, 8]");
  if (samples < 1) throw std::invalid_argument("verify_root_strata: samples must be >= 1");

  VerifyReport rep;
  rep.suite = "appendix2";
  SplitMix64 rng(seed);

  {
    auto r = start("whitney_normal_form", "depth 1 is the umbrella (t, tx, x^2)");
    PolyMap s1 = morin_normal_form(1);
    VarList v = {"t1", "x"};
    const std::vector<std::string> want = {"t1", "t1*x", "x^2"};
    for (std::size_t i = 0; i < 3; ++i)
      if (!(s1.coords[i] == MultiPoly::parse(v, want[i]))) {
        r.pass = false;
        r.residuals.push_back("coordinate " + std::to_string(i) + ": " +
                              s1.coords[i].to_string());
      }
    rep.checks.push_back(std::move(r));
  }

  const int kmax = std::min(max_r + 1, 6);  // symbolic determinant cost cap
  for (int k = 2; k <= kmax; ++k) {
    auto r = start("symmetric_jacobian_formula_k" + std::to_string(k),
                   "the Jacobian of the elementary symmetric map matches the "
                   "omit-one-variable matrix");
    PolyMatrix lhs = elementary_symmetric_map(k).jacobian();
    PolyMatrix rhs = symmetric_jacobian_matrix(k);
    if (!(lhs == rhs)) {
      r.pass = false;
      r.residuals.push_back("matrices differ for k=" + std::to_string(k));
    }
    rep.checks.push_back(std::move(r));

    auto rd = start("vandermonde_determinant_k" + std::to_string(k),
                    "det J equals the product of the root differences, by cofactor "
                    "expansion and by fraction-free elimination");
    MultiPoly want = vandermonde_product(k);
    MultiPoly byCofactor = rhs.det_cofactor();
    MultiPoly byBareiss = rhs.det_bareiss();
    if (!(byCofactor == want)) {
      rd.pass = false;
      rd.residuals.push_back("cofactor route: " + (byCofactor - want).to_string());
    }
    if (!(byBareiss == want)) {
      rd.pass = false;
      rd.residuals.push_back("fraction-free route: " + (byBareiss - want).to_string());
    }
    if (rd.pass != verify_vandermonde_jacobian(k)) {
      rd.pass = false;
      rd.residuals.push_back("combined check disagrees with the per-route results");
    }
    rep.checks.push_back(std::move(rd));
  }

  // Past the symbolic cap the identity is checked by exact evaluation at
  // random rational points instead of full expansion.
  for (int k = kmax + 1; k <= max_r + 1; ++k) {
    auto r = start("vandermonde_evaluated_k" + std::to_string(k),
                   "det J equals the product of root differences at random "
                   "rational points (expansion past k=6 is too large)");
    PolyMatrix jac = elementary_symmetric_map(k).jacobian();
    MultiPoly prod = vandermonde_product(k);
    for (int s = 0; s < 8; ++s) {
      std::vector<Rat> pt;
      for (int i = 0; i < k; ++i) pt.push_back(rng.rational(9, 4));
      std::vector<std::vector<Rat>> m(k, std::vector<Rat>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m[i][j] = jac.at(i, j).eval(pt);
      // fraction-free elimination on the evaluated matrix
      Rat det = 1;
      int sign = 1;
      for (int col = 0; col < k; ++col) {
        int piv = col;
        while (piv < k && m[piv][col] == 0) ++piv;
        if (piv == k) {
          det = 0;
          break;
        }
        if (piv != col) {
          std::swap(m[piv], m[col]);
          sign = -sign;
        }
        det *= m[col][col];
        for (int i = col + 1; i < k; ++i) {
          Rat f = m[i][col] / m[col][col];
          for (int j = col; j < k; ++j) m[i][j] -= f * m[col][j];
        }
      }
      if (sign < 0) det = -det;
      if (det != prod.eval(pt)) {
        r.pass = false;
        r.residuals.push_back("mismatch at sample " + std::to_string(s));
      }
    }
    rep.checks.push_back(std::move(r));
  }

  {
    auto r = start("orthant_map_properties",
                   "on random nonnegative gap vectors the encoded polynomial has zero "
                   "trace coefficient, is real-rooted, and its ordered root "
                   "multiplicities equal the face pattern of the gaps");
    int n_checked = 0;
    for (int s = 0; s < samples; ++s) {
      int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_r)));
      std::vector<Rat> gaps;
      for (int i = 0; i < d; ++i) {
        // Half the entries sit on a face of the orthant.
        gaps.push_back(rng.below(2) == 0 ? Rat(0) : rng.nonnegative_rational(6, 4) + Rat(1, 7));
      }
      OrthantPoint pt = orthant_map(gaps);
      ++n_checked;
      if (pt.poly.coeff(d) != 0) {
        r.pass = false;
        r.residuals.push_back("nonzero trace coefficient for sample " + std::to_string(s));
      }
      if (!is_real_rooted(pt.poly)) {
        r.pass = false;
        r.residuals.push_back("not real-rooted for sample " + std::to_string(s));
      }
      auto face = gap_block_pattern(gaps);
      auto mults = root_multiplicity_pattern(pt.poly);
      if (face != mults) {
        r.pass = false;
        r.residuals.push_back("pattern mismatch: face " + pattern_str(face) + " vs roots " +
                              pattern_str(mults));
      }
    }
    r.note += " (" + std::to_string(n_checked) + " samples)";
    rep.checks.push_back(std::move(r));
  }

  {
    int done = 0;
    for (int s = 0; done < 20 && s < 2000; ++s) {
      int r = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_r)));
      std::vector<Rat> roots;
      for (int i = 0; i < r; ++i) roots.push_back(rng.rational(8, 3));
      Rat sum = 0;
      for (const Rat& x : roots) sum += x;
      roots.push_back(-sum);
      std::sort(roots.begin(), roots.end());
      bool distinct = true;
      for (std::size_t i = 0; i + 1 < roots.size(); ++i)
        if (roots[i] == roots[i + 1]) distinct = false;
      if (!distinct) continue;
      rep.checks.push_back(multiple_point_check(r, roots));
      ++done;
    }
  }

  {
    int count = 0;
    for (int k = 2; k <= std::min(kmax, 5); ++k) {
      std::vector<std::vector<int>> parts;
      std::vector<int> cur;
      compositions(k, cur, parts);
      for (const auto& blocks : parts) {
        std::vector<Rat> sample;
        Rat v = Rat(-1) + Rat(Int(count % 3), Int(7));  // vary the base point a little
        for (int b : blocks) {
          for (int i = 0; i < b; ++i) sample.push_back(v);
          v += Rat(1) + Rat(Int(count % 2), Int(5));
        }
        rep.checks.push_back(stratum_rank_check(k, blocks, sample));
        ++count;
      }
    }
  }

  return rep;
}

}  // namespace morincob
