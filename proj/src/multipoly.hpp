#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ints.hpp"

namespace morincob {

using VarList = std::vector<std::string>;
using Expo = std::vector<unsigned>;

// Graded lexicographic, largest term first, so map iteration starts at the
// leading term. Canonical order fixes printing and equality of rendered
// forms.
struct GrlexDesc {
  bool operator()(const Expo& a, const Expo& b) const {
    unsigned da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients over a
// fixed ordered variable list. Binary operations require identical variable
// lists; no zero coefficients are stored.
class MultiPoly {
 public:
  using TermMap = std::map<Expo, Rat, GrlexDesc>;

  MultiPoly() = default;
  explicit MultiPoly(VarList vars) : vars_(std::move(vars)) {}

  static MultiPoly constant(VarList vars, const Rat& c);
  static MultiPoly variable(VarList vars, std::size_t index);
  // Arithmetic expression parser: + - * / ^ ( ), integer literals, names
  // from `vars`. Division is by (constant) values only.
  static MultiPoly parse(const VarList& vars, const std::string& text);

  const VarList& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  Rat coeff(const Expo& e) const;
  Rat constant_term() const;

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rat& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  MultiPoly derivative(std::size_t var) const;

  // Simultaneous substitution; images share one target variable list, one
  // image per variable of *this.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  Rat eval(const std::vector<Rat>& point) const;

  // Exact quotient, or nullopt when q does not divide *this.
  std::optional<MultiPoly> divide_exact(const MultiPoly& q) const;

  std::string to_string() const;

  void add_term(const Expo& e, const Rat& c);

 private:
  void check_same_vars(const MultiPoly& o) const;
  VarList vars_;
  TermMap terms_;
};

// Rectangular matrix of polynomials over one variable list.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0) {}
  PolyMatrix(VarList vars, std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const VarList& vars() const { return vars_; }
  MultiPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const MultiPoly& at(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  bool operator==(const PolyMatrix& o) const;

  MultiPoly det_cofactor() const;
  MultiPoly det_bareiss() const;

 private:
  VarList vars_;
  std::size_t rows_, cols_;
  std::vector<MultiPoly> entries_;
};

// Polynomial map R^vars -> R^coords.
struct PolyMap {
  VarList vars;
  std::vector<MultiPoly> coords;

  PolyMatrix jacobian() const;
  std::vector<Rat> eval(const std::vector<Rat>& point) const;
  // Coordinate-wise substitution by the coordinates of `inner`.
  std::vector<MultiPoly> compose(const PolyMap& inner) const;
};

}  // namespace morincob
