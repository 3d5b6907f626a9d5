#include "unipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace morincob {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

UniPoly UniPoly::monomial(const Rat& c, std::size_t deg) {
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rat>& roots) {
  UniPoly p = constant(1);
  for (const Rat& r : roots) p = p * UniPoly({-r, Rat(1)});
  return p;
}

const Rat& UniPoly::coeff(std::size_t i) const {
  static const Rat zero(0);
  return i < c_.size() ? c_[i] : zero;
}

const Rat& UniPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("UniPoly::leading: zero polynomial");
  return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
  std::vector<Rat> v = c_;
  for (Rat& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rat& c) const {
  std::vector<Rat> v = c_;
  for (Rat& x : v) x *= c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(Int(i));
  return UniPoly(std::move(v));
}

Rat UniPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

int UniPoly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw std::invalid_argument("UniPoly::divmod: division by zero");
  UniPoly rem = *this;
  std::vector<Rat> q(rem.degree() >= d.degree() ? rem.degree() - d.degree() + 1 : 0,
                     Rat(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    std::size_t shift = rem.degree() - d.degree();
    Rat f = rem.leading() / d.leading();
    q[shift] = f;
    rem = rem - UniPoly::monomial(f, shift) * d;
  }
  return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return scaled(Rat(1) / leading());
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly UniPoly::squarefree_part() const {
  if (is_zero()) throw std::invalid_argument("squarefree_part: zero polynomial");
  if (degree() == 0) return constant(1);
  UniPoly g = gcd(*this, derivative());
  return divmod(g).first.monic();
}

std::vector<std::pair<UniPoly, unsigned>> UniPoly::squarefree_decomposition() const {
  // Yun's algorithm over Q.
  if (is_zero())
    throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<UniPoly, unsigned>> out;
  UniPoly p = monic();
  if (p.degree() == 0) return out;
  UniPoly dp = p.derivative();
  UniPoly g = gcd(p, dp);
  UniPoly w = p.divmod(g).first;
  UniPoly y = dp.divmod(g).first;
  UniPoly z = y - w.derivative();
  unsigned i = 1;
  while (w.degree() > 0) {
    UniPoly gi = gcd(w, z);
    if (gi.degree() > 0) out.emplace_back(gi, i);
    w = w.divmod(gi).first;
    y = z.divmod(gi).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

Rat UniPoly::cauchy_root_bound() const {
  if (is_zero()) throw std::invalid_argument("cauchy_root_bound: zero polynomial");
  Rat m = 0;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i) {
    Rat a = c_[i] / leading();
    if (a < 0) a = -a;
    if (a > m) m = a;
  }
  return m + 1;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    Rat a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  UniPoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  for (;;) {
    UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int chain_variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const UniPoly& q : chain) signs.push_back(q.sign_at(x));
  return sign_changes(signs);
}

int chain_variations_at_inf(const std::vector<UniPoly>& chain, int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const UniPoly& q : chain) {
    if (q.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = q.leading() > 0 ? 1 : -1;
    if (dir < 0 && q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return sign_changes(signs);
}

}  // namespace

int count_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots: zero polynomial");
  if (p.degree() == 0) return 0;
  auto chain = sturm_chain(p);
  return chain_variations_at_inf(chain, -1) - chain_variations_at_inf(chain, +1);
}

int count_real_roots_in(const UniPoly& p, const Rat& lo, const Rat& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_real_roots_in: zero polynomial");
  if (p.degree() == 0) return 0;
  if (!(lo < hi)) return 0;
  auto chain = sturm_chain(p);
  return chain_variations_at(chain, lo) - chain_variations_at(chain, hi);
}

bool is_real_rooted(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  if (p.degree() == 0) return true;  // no roots at all
  // p has the same root set as its squarefree part; for a squarefree
  // polynomial "all roots real" is exactly "Sturm count equals the degree".
  UniPoly q = p.squarefree_part();
  return count_real_roots(q) == q.degree();
}

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  UniPoly q = p.squarefree_part();
  std::vector<std::pair<Rat, Rat>> out;
  if (q.degree() == 0) return out;
  Rat bound = q.cauchy_root_bound();
  struct Seg {
    Rat lo, hi;
    int count;
  };
  std::vector<Seg> stack{{-bound, bound, count_real_roots_in(q, -bound, bound)}};
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (s.count == 0) continue;
    if (s.count == 1) {
      out.emplace_back(s.lo, s.hi);
      continue;
    }
    Rat mid = (s.lo + s.hi) / 2;
    int left = count_real_roots_in(q, s.lo, mid);
    stack.push_back({mid, s.hi, s.count - left});
    stack.push_back({s.lo, mid, left});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

UniPoly UniPoly::parse(const std::string& text, const std::string& var) {
  // Reuse the multivariate parser via a single-variable wrapper is overkill;
  // accept the same syntax with one variable by scanning terms directly.
  // Implemented in terms of a tiny shadow of the multivariate grammar.
  struct P {
    const std::string& s;
    const std::string& var;
    std::size_t pos = 0;
    void skip() {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
      skip();
      if (pos < s.size() && s[pos] == c) {
        ++pos;
        return true;
      }
      return false;
    }
    [[noreturn]] void fail(const std::string& m) {
      throw std::invalid_argument("UniPoly::parse: " + m);
    }
    UniPoly expr() {
      UniPoly acc = term();
      for (;;) {
        if (eat('+'))
          acc = acc + term();
        else if (eat('-'))
          acc = acc - term();
        else
          return acc;
      }
    }
    UniPoly term() {
      UniPoly acc = factor();
      for (;;) {
        if (eat('*')) {
          acc = acc * factor();
        } else if (eat('/')) {
          UniPoly d = factor();
          if (d.degree() != 0) fail("division only by constants");
          acc = acc.scaled(Rat(1) / d.coeff(0));
        } else {
          return acc;
        }
      }
    }
    UniPoly factor() {
      UniPoly b = atom();
      if (eat('^')) {
        skip();
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (st == pos) fail("expected exponent");
        unsigned e = static_cast<unsigned>(std::stoul(s.substr(st, pos - st)));
        UniPoly r = UniPoly::constant(1);
        for (unsigned i = 0; i < e; ++i) r = r * b;
        return r;
      }
      return b;
    }
    UniPoly atom() {
      skip();
      if (eat('-')) return -factor();
      if (eat('(')) {
        UniPoly e = expr();
        if (!eat(')')) fail("expected ')'");
        return e;
      }
      skip();
      if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        std::size_t st = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return UniPoly::constant(Rat(Int(s.substr(st, pos - st))));
      }
      if (s.compare(pos, var.size(), var) == 0) {
        pos += var.size();
        return UniPoly::monomial(1, 1);
      }
      fail("unexpected input");
    }
  };
  P p{text, var};
  UniPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

}  // namespace morincob
