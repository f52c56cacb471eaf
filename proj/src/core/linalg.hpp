#pragma once

#include <optional>
#include <vector>

#include "core/qmatrix.hpp"

namespace symcan {

struct RowEchelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

// Gauss-Jordan elimination over Q; pivots are the first nonzero entry of each
// row and are normalized to 1.
RowEchelon rref(QMatrix m);

std::size_t rank(const QMatrix& m);

// A linear subspace of Q^ambient held in canonical form: the basis columns are
// the transpose of the reduced row echelon form of any generating set, so two
// subspaces are equal iff their bases are structurally equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(ambient, 0) {}

  // Span of the columns of `generators` (ambient x k, dependent columns allowed).
  static Subspace span(const QMatrix& generators);
  static Subspace span(std::size_t ambient, const std::vector<QVector>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const QMatrix& basis() const { return basis_; }
  QVector basis_vector(std::size_t j) const { return basis_.col(j); }

  bool contains(const QVector& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const = default;

 private:
  std::size_t ambient_;
  QMatrix basis_;
};

Subspace kernel_basis(const QMatrix& m);
Subspace image(const QMatrix& m);
Subspace intersection(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace orthogonal_complement(const Subspace& s);

// Some x with m x = b, or nullopt when rank [m | b] > rank m.
std::optional<QVector> solve_exact(const QMatrix& m, const QVector& b);

// Left inverse K (cols x rows) with K m = Id for an injective m:
// K = (m^T m)^{-1} m^T. nullopt when m is not injective.
std::optional<QMatrix> left_inverse(const QMatrix& m);

std::optional<QMatrix> inverse(const QMatrix& m);

Rational determinant(const QMatrix& m);

}  // namespace symcan
