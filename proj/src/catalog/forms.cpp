#include "catalog/forms.hpp"

#include <algorithm>

#include "core/error.hpp"

namespace symcan {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void subsets_rec(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Sign of the permutation that sorts the concatenation (a, b) of two disjoint
// increasing sequences.
int shuffle_sign(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t inversions = 0;
  for (auto x : a)
    for (auto y : b)
      if (x > y) ++inversions;
  return inversions % 2 ? -1 : 1;
}

}  // namespace

FormIndexing::FormIndexing(std::size_t n, std::size_t degree) : n_(n), degree_(degree) {
  if (degree > n) fail(ErrorCode::Domain, "form degree exceeds dimension");
  std::vector<std::size_t> cur;
  subsets_rec(n, degree, 0, cur, subsets_);
}

std::size_t FormIndexing::index_of(const std::vector<std::size_t>& subset) const {
  auto it = std::lower_bound(subsets_.begin(), subsets_.end(), subset);
  if (it == subsets_.end() || *it != subset) fail(ErrorCode::Domain, "not an increasing subset of the right size");
  return static_cast<std::size_t>(it - subsets_.begin());
}

QMatrix wedge_basis_matrix(std::size_t n, std::size_t degree, std::size_t i) {
  if (degree >= n) fail(ErrorCode::Domain, "wedge target degree exceeds dimension");
  FormIndexing from(n, degree), to(n, degree + 1);
  QMatrix m(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto& s = from.subset(c);
    if (std::binary_search(s.begin(), s.end(), i)) continue;
    std::vector<std::size_t> t = s;
    t.insert(std::upper_bound(t.begin(), t.end(), i), i);
    m(to.index_of(t), c) = shuffle_sign({i}, s);
  }
  return m;
}

QVector wedge(const QVector& xi, const QVector& form, std::size_t degree) {
  const std::size_t n = xi.size();
  if (form.size() != binomial(n, degree)) fail(ErrorCode::Domain, "form has wrong length for its degree");
  QVector out(binomial(n, degree + 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(xi[i]) == 0) continue;
    QVector part = wedge_basis_matrix(n, degree, i) * form;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += xi[i] * part[j];
  }
  return out;
}

QMatrix hodge_star_matrix(std::size_t n, std::size_t degree) {
  FormIndexing from(n, degree), to(n, n - degree);
  QMatrix m(to.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    const auto& s = from.subset(c);
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
      if (!std::binary_search(s.begin(), s.end(), i)) comp.push_back(i);
    m(to.index_of(comp), c) = shuffle_sign(s, comp);
  }
  return m;
}

QVector hodge_star(const QVector& form, std::size_t n, std::size_t degree) {
  return hodge_star_matrix(n, degree) * form;
}

QMatrix codifferential_basis_matrix(std::size_t n, std::size_t degree, std::size_t i) {
  if (degree == 0) fail(ErrorCode::Domain, "codifferential of a 0-form");
  return hodge_star_matrix(n, n - degree + 1) * wedge_basis_matrix(n, n - degree, i) *
         hodge_star_matrix(n, degree);
}

}  // namespace symcan
