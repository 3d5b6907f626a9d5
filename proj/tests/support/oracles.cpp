#include "oracles.hpp"

#include <set>

namespace morincob::testing {

namespace {

void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out, std::size_t start = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, out, i + 1);
    cur.pop_back();
  }
}

}  // namespace

Int cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a.at(0, 0);
  Int acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.at(i, 0) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0, mr = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < n; ++c) minor.at(mr, c - 1) = a.at(r, c);
      ++mr;
    }
    Int term = a.at(i, 0) * cofactor_det(minor);
    acc += (i % 2 == 0) ? term : -term;
  }
  return acc;
}

std::vector<Int> determinantal_invariant_factors(const IntMatrix& a) {
  const std::size_t n = std::min(a.rows(), a.cols());
  std::vector<Int> dk{1};  // d_0 = 1
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<std::size_t>> rsel, csel;
    std::vector<std::size_t> cur;
    combinations(a.rows(), k, cur, rsel);
    combinations(a.cols(), k, cur, csel);
    Int g = 0;
    for (const auto& rs : rsel)
      for (const auto& cs : csel) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor.at(i, j) = a.at(rs[i], cs[j]);
        g = gcd_int(g, cofactor_det(minor));
      }
    dk.push_back(abs_int(g));
    if (dk.back() == 0) break;  // all further minors vanish as well
  }
  std::vector<Int> factors;
  for (std::size_t k = 1; k < dk.size(); ++k) {
    if (dk[k] == 0) break;
    factors.push_back(dk[k] / dk[k - 1]);
  }
  return factors;
}

std::vector<std::vector<Int>> enumerate_elements(const FinAbGroup& g) {
  if (!g.is_finite())
    throw std::invalid_argument("enumerate_elements: infinite group");
  std::vector<std::vector<Int>> out{std::vector<Int>(g.torsion.size(), 0)};
  for (std::size_t i = 0; i < g.torsion.size(); ++i) {
    std::vector<std::vector<Int>> next;
    for (const auto& base : out)
      for (Int v = 0; v < g.torsion[i]; ++v) {
        auto e = base;
        e[i] = v;
        next.push_back(std::move(e));
      }
    out = std::move(next);
  }
  return out;
}

BruteForceHom brute_force_hom(const GroupHom& h) {
  BruteForceHom out{0, 0};
  std::set<std::vector<Int>> image;
  for (const auto& x : enumerate_elements(h.source)) {
    std::vector<Int> y = h.apply(x);
    bool zero = true;
    for (const Int& c : y) zero = zero && c == 0;
    if (zero) ++out.kernel_size;
    image.insert(std::move(y));
  }
  out.image_size = Int(image.size());
  return out;
}

namespace {

int sign_of(const Rat& x) { return x == 0 ? 0 : (x > 0 ? 1 : -1); }

int coeff_variations(const std::vector<Rat>& c) {
  int var = 0, last = 0;
  for (const Rat& x : c) {
    int s = sign_of(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++var;
    last = s;
  }
  return var;
}

// Descartes bound for the number of roots of q in the open interval (a, b):
// map (a,b) to (0,1), then (0,1) to (0,inf).
int descartes_bound(const UniPoly& q, const Rat& a, const Rat& b) {
  const int n = q.degree();
  // p(x) = q(a + (b - a) x)
  UniPoly p = UniPoly::constant(q.coeff(n));
  UniPoly lin({a, b - a});
  for (int i = n - 1; i >= 0; --i) p = p * lin + UniPoly::constant(q.coeff(i));
  // P(x) = (1 + x)^n p(1/(1 + x)); coefficient c_i contributes c_i (1+x)^{n-i}.
  std::vector<Rat> acc(n + 1, Rat(0));
  std::vector<Rat> binom{Rat(1)};  // rows of Pascal's triangle
  for (int i = n; i >= 0; --i) {
    // binom currently holds row (n - i)
    const Rat& ci = p.coeff(i);
    if (ci != 0)
      for (std::size_t k = 0; k < binom.size(); ++k) acc[k] += ci * binom[k];
    std::vector<Rat> next(binom.size() + 1, Rat(0));
    for (std::size_t k = 0; k < binom.size(); ++k) {
      next[k] += binom[k];
      next[k + 1] += binom[k];
    }
    binom = std::move(next);
  }
  return coeff_variations(acc);
}

int count_in_open(const UniPoly& q, const Rat& a, const Rat& b) {
  int bound = descartes_bound(q, a, b);
  if (bound == 0) return 0;
  if (bound == 1) return 1;
  Rat mid = (a + b) / 2;
  int at_mid = q.eval(mid) == 0 ? 1 : 0;
  return count_in_open(q, a, mid) + at_mid + count_in_open(q, mid, b);
}

}  // namespace

int descartes_root_count(const UniPoly& p) {
  UniPoly q = p.squarefree_part();
  if (q.degree() <= 0) return 0;
  Rat bound = q.cauchy_root_bound() + 1;
  return count_in_open(q, -bound, bound);
}

}  // namespace morincob::testing
