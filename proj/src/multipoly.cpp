#include "multipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace morincob {

void MultiPoly::check_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_)
    throw std::invalid_argument("MultiPoly: variable mismatch between operands");
}

void MultiPoly::add_term(const Expo& e, const Rat& c) {
  if (e.size() != vars_.size())
    throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::constant(VarList vars, const Rat& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Expo(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarList vars, std::size_t index) {
  MultiPoly p(std::move(vars));
  if (index >= p.vars_.size())
    throw std::invalid_argument("MultiPoly::variable: index out of range");
  Expo e(p.vars_.size(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  unsigned d = 0;
  for (unsigned e : terms_.begin()->first) d += e;
  return static_cast<int>(d);
}

Rat MultiPoly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat MultiPoly::constant_term() const { return coeff(Expo(vars_.size(), 0)); }

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_same_vars(o);
  MultiPoly r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(ea);
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::scaled(const Rat& c) const {
  MultiPoly r(vars_);
  if (c == 0) return r;
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(vars_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size())
    throw std::invalid_argument("MultiPoly::derivative: variable out of range");
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Expo d(e);
    d[var] -= 1;
    r.add_term(d, c * e[var]);
  }
  return r;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != vars_.size())
    throw std::invalid_argument("MultiPoly::substitute: one image per variable required");
  VarList target = images.empty() ? VarList{} : images[0].vars();
  for (const MultiPoly& im : images)
    if (im.vars() != target)
      throw std::invalid_argument("MultiPoly::substitute: images over different variables");

  // Power cache per variable keeps repeated exponents cheap.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MultiPoly r(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] > 0) term = term * power(v, e[v]);
    r = r + term;
  }
  return r;
}

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
  if (point.size() != vars_.size())
    throw std::invalid_argument("MultiPoly::eval: point dimension mismatch");
  Rat out = 0;
  for (const auto& [e, c] : terms_) {
    Rat t = c;
    for (std::size_t v = 0; v < e.size(); ++v)
      for (unsigned k = 0; k < e[v]; ++k) t *= point[v];
    out += t;
  }
  return out;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& q) const {
  check_same_vars(q);
  if (q.is_zero()) return std::nullopt;
  MultiPoly rem = *this;
  MultiPoly quot(vars_);
  const auto& qlead = *q.terms_.begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.begin();
    Expo diff(rlead.first.size());
    for (std::size_t i = 0; i < diff.size(); ++i) {
      if (rlead.first[i] < qlead.first[i]) return std::nullopt;
      diff[i] = rlead.first[i] - qlead.first[i];
    }
    Rat c = rlead.second / qlead.second;
    MultiPoly mono(vars_);
    mono.add_term(diff, c);
    quot = quot + mono;
    rem = rem - mono * q;
    // The leading term strictly drops in graded lex order each round, so
    // this terminates; a nonzero tail that cannot absorb the divisor's
    // leading monomial exits through the divisibility check above.
  }
  return quot;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;

    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      os << a;
    } else if (a == 1) {
      os << mono;
    } else {
      os << a << "*" << mono;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser {
  const VarList& vars;
  const std::string& s;
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
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::invalid_argument("MultiPoly::parse: " + msg + " at position " +
                                std::to_string(pos) + " in '" + s + "'");
  }

  MultiPoly expr() {
    MultiPoly acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        MultiPoly d = factor();
        if (d.total_degree() != 0) fail("division is only by constants");
        acc = acc.scaled(Rat(1) / d.constant_term());
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (eat('^')) {
      std::string digits = integer_token();
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string integer_token() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected an integer");
    return s.substr(start, pos - start);
  }

  MultiPoly atom() {
    skip();
    if (eat('-')) return -factor();
    if (eat('(')) {
      MultiPoly inner = expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)))
      return MultiPoly::constant(vars, Rat(Int(integer_token())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return MultiPoly::variable(vars, i);
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const VarList& vars, const std::string& text) {
  Parser p{vars, text};
  MultiPoly out = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

// ---------------------------------------------------------------------------
// PolyMatrix / PolyMap

PolyMatrix::PolyMatrix(VarList vars, std::size_t rows, std::size_t cols)
    : vars_(std::move(vars)), rows_(rows), cols_(cols) {
  entries_.assign(rows_ * cols_, MultiPoly(vars_));
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || vars_ != o.vars_) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (!(entries_[i] == o.entries_[i])) return false;
  return true;
}

MultiPoly PolyMatrix::det_cofactor() const {
  if (rows_ != cols_) throw std::invalid_argument("det: non-square matrix");
  if (rows_ == 0) return MultiPoly::constant(vars_, 1);
  if (rows_ == 1) return at(0, 0);
  MultiPoly acc(vars_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (at(i, 0).is_zero()) continue;
    PolyMatrix minor(vars_, rows_ - 1, cols_ - 1);
    for (std::size_t r = 0, mr = 0; r < rows_; ++r) {
      if (r == i) continue;
      for (std::size_t c = 1; c < cols_; ++c) minor.at(mr, c - 1) = at(r, c);
      ++mr;
    }
    MultiPoly term = at(i, 0) * minor.det_cofactor();
    acc = (i % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

MultiPoly PolyMatrix::det_bareiss() const {
  if (rows_ != cols_) throw std::invalid_argument("det: non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return MultiPoly::constant(vars_, 1);
  PolyMatrix m = *this;
  MultiPoly prev = MultiPoly::constant(vars_, 1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m.at(piv, k).is_zero()) ++piv;
      if (piv == n) return MultiPoly(vars_);
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        auto q = num.divide_exact(prev);
        if (!q)
          throw std::logic_error("det_bareiss: exact division failed");
        m.at(i, j) = *q;
      }
    prev = m.at(k, k);
  }
  MultiPoly d = m.at(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

PolyMatrix PolyMap::jacobian() const {
  PolyMatrix j(vars, coords.size(), vars.size());
  for (std::size_t a = 0; a < coords.size(); ++a)
    for (std::size_t b = 0; b < vars.size(); ++b) j.at(a, b) = coords[a].derivative(b);
  return j;
}

std::vector<Rat> PolyMap::eval(const std::vector<Rat>& point) const {
  std::vector<Rat> out;
  out.reserve(coords.size());
  for (const MultiPoly& c : coords) out.push_back(c.eval(point));
  return out;
}

std::vector<MultiPoly> PolyMap::compose(const PolyMap& inner) const {
  if (inner.coords.size() != vars.size())
    throw std::invalid_argument("PolyMap::compose: arity mismatch");
  std::vector<MultiPoly> out;
  out.reserve(coords.size());
  for (const MultiPoly& c : coords) out.push_back(c.substitute(inner.coords));
  return out;
}

}  // namespace morincob
