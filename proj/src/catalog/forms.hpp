#pragma once

#include <vector>

#include "core/qmatrix.hpp"

namespace symcan {

// Basis of the l-th exterior power of R^n: increasing l-subsets of {0..n-1} in
// lexicographic order.
class FormIndexing {
 public:
  FormIndexing(std::size_t n, std::size_t degree);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t i) const { return subsets_[i]; }
  // Position of an increasing subset.
  std::size_t index_of(const std::vector<std::size_t>& subset) const;

 private:
  std::size_t n_;
  std::size_t degree_;
  std::vector<std::vector<std::size_t>> subsets_;
};

// Matrix of v -> e_i ^ v from degree l to degree l+1 forms.
QMatrix wedge_basis_matrix(std::size_t n, std::size_t degree, std::size_t i);
// xi ^ v for a vector xi and a degree-l form v.
QVector wedge(const QVector& xi, const QVector& form, std::size_t degree);

// Hodge star from degree l to degree n-l, with e_S ^ *e_S = e_1 ^ ... ^ e_n.
QMatrix hodge_star_matrix(std::size_t n, std::size_t degree);
QVector hodge_star(const QVector& form, std::size_t n, std::size_t degree);

// Matrix of v -> *(e_i ^ *v) from degree l to degree l-1.
QMatrix codifferential_basis_matrix(std::size_t n, std::size_t degree, std::size_t i);

std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace symcan
