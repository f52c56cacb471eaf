#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/rational.hpp"

namespace symcan {

// Exponent vector alpha in N^n. Ordering is graded lexicographic: lower total
// degree first, then lexicographic on the exponents.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> exponents);
  static MultiIndex zero(std::size_t n) { return MultiIndex(std::vector<unsigned>(n, 0)); }
  static MultiIndex unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return e_[i]; }
  const std::vector<unsigned>& exponents() const { return e_; }

  MultiIndex operator+(const MultiIndex& rhs) const;

  std::strong_ordering operator<=>(const MultiIndex& rhs) const;
  bool operator==(const MultiIndex& rhs) const { return e_ == rhs.e_; }

  std::string str() const;

 private:
  std::vector<unsigned> e_;
  unsigned degree_ = 0;
};

// All multi-indices of length n and total degree d, in ascending grlex order.
std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned d);

// Sparse multivariate polynomial over Q in n variables. Zero coefficients are
// never stored.
class Polynomial {
 public:
  using Terms = std::map<MultiIndex, Rational>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}
  static Polynomial constant(std::size_t n, const Rational& c);
  static Polynomial variable(std::size_t n, std::size_t i);
  static Polynomial monomial(const MultiIndex& alpha, const Rational& c);

  std::size_t nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(unsigned d) const;

  Rational coefficient(const MultiIndex& alpha) const;
  void add_term(const MultiIndex& alpha, const Rational& c);

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial scaled(const Rational& s) const;
  Polynomial pow(unsigned e) const;

  Rational evaluate(const std::vector<Rational>& x) const;
  double evaluate_real(const std::vector<double>& x) const;

  // p(x) with x_i := c_i + x_i for every i (exact Taylor shift).
  Polynomial shifted(const std::vector<Rational>& c) const;
  // Fix variable `var` to `value`; the result keeps n variables (var absent).
  Polynomial with_fixed(std::size_t var, const Rational& value) const;

  bool operator==(const Polynomial& rhs) const { return n_ == rhs.n_ && terms_ == rhs.terms_; }

  std::string str() const;

 private:
  std::size_t n_;
  Terms terms_;
};

}  // namespace symcan
