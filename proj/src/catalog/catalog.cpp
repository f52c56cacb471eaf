#include "catalog/catalog.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>

#include "catalog/forms.hpp"
#include "core/error.hpp"
#include "core/linalg.hpp"

namespace symcan {

namespace {

using Policy = SymbolOperator::ZeroPolicy;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::Validation, what);
}

SymbolOperator first_order(std::size_t n, std::size_t dim_v, std::size_t dim_e, const std::vector<QMatrix>& parts,
                           Policy zero = Policy::Reject) {
  SymbolOperator::Terms t;
  for (std::size_t i = 0; i < n; ++i) t.emplace(MultiIndex::unit(n, i), parts[i]);
  return SymbolOperator(n, dim_v, dim_e, 1, std::move(t), zero);
}

PolyMatrix linear_polymatrix(std::size_t n, const std::vector<QMatrix>& parts) {
  PolyMatrix p(parts[0].rows(), parts[0].cols(), n);
  for (std::size_t i = 0; i < n; ++i) p = p + PolyMatrix::constant(parts[i], n).scaled(Polynomial::variable(n, i));
  return p;
}

std::size_t multiset_index(const std::vector<std::vector<std::size_t>>& all, const std::vector<std::size_t>& m) {
  auto it = std::lower_bound(all.begin(), all.end(), m);
  return static_cast<std::size_t>(it - all.begin());
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<std::vector<std::size_t>> multisets(std::size_t n, std::size_t size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(size, 0);
  if (n == 0) return size == 0 ? std::vector<std::vector<std::size_t>>{{}} : out;
  for (;;) {
    out.push_back(cur);
    // next non-decreasing sequence
    std::size_t p = size;
    while (p > 0 && cur[p - 1] == n - 1) --p;
    if (p == 0) break;
    ++cur[p - 1];
    for (std::size_t q = p; q < size; ++q) cur[q] = cur[p - 1];
  }
  return out;
}

QVector moment_curve(std::size_t dim, const Rational& t) {
  QVector v(dim);
  Rational p = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = p;
    p *= t;
  }
  return v;
}

bool all_subsets_independent(const std::vector<QVector>& vs, std::size_t size) {
  if (vs.size() < size) return rank(QMatrix::from_columns(vs.empty() ? 0 : vs[0].size(), vs)) == vs.size();
  std::vector<bool> pick(vs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
  const std::size_t ambient = vs[0].size();
  do {
    std::vector<QVector> sub;
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (pick[i]) sub.push_back(vs[i]);
    if (rank(QMatrix::from_columns(ambient, sub)) < size) return false;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return true;
}

SymbolOperator gradient(std::size_t n) {
  require(n >= 1, "gradient requires n >= 1");
  std::vector<QMatrix> parts;
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix m(n, 1);
    m(i, 0) = 1;
    parts.push_back(m);
  }
  return first_order(n, 1, n, parts);
}

SymbolOperator divergence(std::size_t n) {
  require(n >= 1, "divergence requires n >= 1");
  std::vector<QMatrix> parts;
  for (std::size_t i = 0; i < n; ++i) {
    QMatrix m(1, n);
    m(0, i) = 1;
    parts.push_back(m);
  }
  return first_order(n, n, 1, parts);
}

SymbolOperator laplacian(std::size_t n) {
  require(n >= 1, "laplacian requires n >= 1");
  SymbolOperator::Terms t;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<unsigned> e(n, 0);
    e[i] = 2;
    t.emplace(MultiIndex(e), QMatrix{{1}});
  }
  return SymbolOperator(n, 1, 1, 2, std::move(t));
}

SymbolOperator higher_order_div(std::size_t n, unsigned k) {
  require(n >= 1 && k >= 1, "higher_order_div requires n >= 1 and k >= 1");
  auto alphas = multi_indices_of_degree(n, k);
  SymbolOperator::Terms t;
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    QMatrix m(1, alphas.size());
    m(0, j) = 1;
    t.emplace(alphas[j], m);
  }
  return SymbolOperator(n, alphas.size(), 1, k, std::move(t));
}

SymbolOperator exterior_d(std::size_t n, std::size_t degree) {
  require(n >= 1 && degree + 1 <= n, "exterior_d requires 0 <= l <= n-1");
  std::vector<QMatrix> parts;
  for (std::size_t i = 0; i < n; ++i) parts.push_back(wedge_basis_matrix(n, degree, i));
  return first_order(n, binomial(n, degree), binomial(n, degree + 1), parts);
}

SymbolOperator hodge_pair(std::size_t n, std::size_t degree) {
  require(degree >= 1 && degree + 1 <= n, "hodge_pair requires 1 <= l <= n-1");
  std::vector<QMatrix> parts;
  for (std::size_t i = 0; i < n; ++i)
    parts.push_back(wedge_basis_matrix(n, degree, i).vstack(codifferential_basis_matrix(n, degree, i)));
  return first_order(n, binomial(n, degree), binomial(n, degree + 1) + binomial(n, degree - 1), parts);
}

SymbolOperator sym_gradient_sk(std::size_t n, unsigned k) {
  require(n >= 1 && k >= 1, "sym_gradient_Sk requires n >= 1 and k >= 1");
  auto from = multisets(n, k);
  auto to = multisets(n, k + 1);
  const Rational w(1, k + 1);
  std::vector<QMatrix> parts(n, QMatrix(to.size(), from.size()));
  for (std::size_t r = 0; r < to.size(); ++r) {
    const auto& j = to[r];
    for (std::size_t p = 0; p <= k; ++p) {
      std::vector<std::size_t> rest = j;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      parts[j[p]](r, multiset_index(from, rest)) += w;
    }
  }
  return first_order(n, from.size(), to.size(), parts);
}

SymbolOperator saint_venant_k(std::size_t n, unsigned k) {
  require(n >= 1 && k >= 1, "saint_venant_k requires n >= 1 and k >= 1");
  auto sym = multisets(n, k);
  std::size_t rows = 1;
  for (unsigned i = 0; i < 2 * k; ++i) rows *= n;
  SymbolOperator::Terms t;
  std::vector<std::size_t> idx(2 * k, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    // idx = (a_1..a_k, b_1..b_k), last index fastest
    std::size_t rem = r;
    for (std::size_t p = 2 * k; p-- > 0;) {
      idx[p] = rem % n;
      rem /= n;
    }
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<std::size_t> c(k);
      std::vector<unsigned> d(n, 0);
      for (unsigned i = 0; i < k; ++i) {
        const bool flip = mask & (1u << i);
        c[i] = flip ? idx[k + i] : idx[i];
        ++d[flip ? idx[i] : idx[k + i]];
      }
      std::sort(c.begin(), c.end());
      MultiIndex alpha(d);
      auto it = t.try_emplace(alpha, rows, sym.size()).first;
      it->second(r, multiset_index(sym, c)) += (std::popcount(mask) % 2) ? -1 : 1;
    }
  }
  return SymbolOperator(n, sym.size(), rows, k, std::move(t), Policy::Allow);
}

SymbolOperator curl_div(std::size_t n) {
  require(n >= 2, "curl_div requires n >= 2");
  FormIndexing two(n, 2);
  PolyMatrix p(two.size(), n * n, n);
  for (std::size_t r = 0; r < two.size(); ++r) {
    const std::size_t i = two.subset(r)[0], j = two.subset(r)[1];
    for (std::size_t q = 0; q < n; ++q) {
      p(r, j * n + q) += Polynomial::variable(n, i) * Polynomial::variable(n, q);
      p(r, i * n + q) -= Polynomial::variable(n, j) * Polynomial::variable(n, q);
    }
  }
  return SymbolOperator::from_polymatrix(p, 2);
}

SymbolOperator quaternion() {
  // A(xi)v = (-xi''.v, xi_1 v + xi'' x v), xi'' = (xi_2, xi_3, xi_4)
  std::vector<QMatrix> parts(4, QMatrix(4, 3));
  for (std::size_t c = 0; c < 3; ++c) parts[0](1 + c, c) = 1;
  for (std::size_t a = 0; a < 3; ++a) {
    QMatrix& m = parts[1 + a];
    m(0, a) = -1;
    // (e_a x v)_r = sum_c eps(a, c, r) v_c
    const std::size_t b = (a + 1) % 3, c = (a + 2) % 3;
    m(1 + c, b) = 1;
    m(1 + b, c) = -1;
  }
  return first_order(4, 3, 4, parts);
}

SymbolOperator split_laplacian(std::size_t n, std::size_t degree) {
  require(degree >= 1 && degree + 1 <= n, "split_laplacian requires 1 <= l <= n-1");
  auto d_of = [n](std::size_t l) {
    std::vector<QMatrix> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(wedge_basis_matrix(n, l, i));
    return linear_polymatrix(n, parts);
  };
  // formal adjoint of d: symbol -iota_xi = -(xi ^ .)^T
  auto delta_of = [n](std::size_t l) {
    std::vector<QMatrix> parts;
    for (std::size_t i = 0; i < n; ++i) parts.push_back(wedge_basis_matrix(n, l - 1, i).transpose().scaled(-1));
    return linear_polymatrix(n, parts);
  };
  PolyMatrix top = d_of(degree - 1) * delta_of(degree);
  PolyMatrix bottom = delta_of(degree + 1) * d_of(degree);
  PolyMatrix p(2 * top.rows(), top.cols(), n);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) {
      p(i, j) = top(i, j);
      p(top.rows() + i, j) = bottom(i, j);
    }
  return SymbolOperator::from_polymatrix(p, 2);
}

SymbolOperator hyperbolic_example() {
  return first_order(2, 2, 2, {QMatrix{{1, 0}, {0, -1}}, QMatrix{{0, -1}, {1, 0}}});
}

SymbolOperator strange_r4() {
  SymbolOperator::Terms t;
  t.emplace(MultiIndex({1, 1, 0, 0}), QMatrix{{1}, {0}});
  t.emplace(MultiIndex({0, 0, 1, 1}), QMatrix{{0}, {1}});
  return SymbolOperator(4, 1, 2, 2, std::move(t));
}

SymbolOperator defigueiredo(std::size_t n, std::size_t m, const std::vector<QVector>& etas,
                            const std::vector<QVector>& ws) {
  require(n >= 1 && m >= 1, "defigueiredo requires n >= 1 and m >= 1");
  const std::size_t count = n + m - 1;
  require(etas.size() == count && ws.size() == count, "defigueiredo needs n+m-1 vectors in each family");
  for (const auto& e : etas) require(e.size() == n, "eta vectors must have length n");
  for (const auto& w : ws) require(w.size() == m, "w vectors must have length m");
  require(all_subsets_independent(etas, n), "eta family is not n-wise linearly independent");
  require(all_subsets_independent(ws, m), "w family is not m-wise linearly independent");
  std::vector<QMatrix> parts(n, QMatrix(count, m));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < m; ++c) parts[j](i, c) = etas[i][j] * ws[i][c];
  return first_order(n, m, count, parts);
}

SymbolOperator defigueiredo(std::size_t n, std::size_t m) {
  std::vector<QVector> etas, ws;
  for (std::size_t i = 1; i <= n + m - 1; ++i) {
    etas.push_back(moment_curve(n, static_cast<long>(i)));
    ws.push_back(moment_curve(m, static_cast<long>(i)));
  }
  return defigueiredo(n, m, etas, ws);
}

SymbolOperator quadratic_collection(std::size_t n, std::size_t m, const std::vector<QVector>& etas,
                                    const std::vector<QVector>& ws) {
  require(n >= 2 && m >= 1, "quadratic_collection requires n >= 2 and m >= 1");
  require(etas.size() == m + 1 && ws.size() == m + 1, "quadratic_collection needs m+1 vectors in each family");
  for (const auto& e : etas) require(e.size() == n, "eta vectors must have length n");
  for (const auto& w : ws) require(w.size() == m, "w vectors must have length m");
  // Zero set of a_i is the line through eta_i, so pairwise trivial
  // intersection means pairwise non-parallel etas.
  require(all_subsets_independent(etas, 2), "eta directions must be pairwise non-parallel");
  require(all_subsets_independent(ws, m), "w family is not m-wise linearly independent");
  PolyMatrix p(m + 1, m, n);
  Polynomial norm2(n);
  for (std::size_t j = 0; j < n; ++j) norm2 += Polynomial::variable(n, j).pow(2);
  for (std::size_t i = 0; i <= m; ++i) {
    Polynomial lin(n);
    for (std::size_t j = 0; j < n; ++j) lin += Polynomial::variable(n, j).scaled(etas[i][j]);
    Polynomial a = norm2.scaled(dot(etas[i], etas[i])) - lin * lin;
    for (std::size_t c = 0; c < m; ++c) p(i, c) = a.scaled(ws[i][c]);
  }
  return SymbolOperator::from_polymatrix(p, 2);
}

SymbolOperator quadratic_collection(std::size_t n, std::size_t m) {
  std::vector<QVector> etas, ws;
  for (std::size_t i = 0; i <= m; ++i) {
    if (m + 1 <= n) {
      QVector e(n);
      e[i] = 1;
      etas.push_back(e);
    } else {
      etas.push_back(moment_curve(n, static_cast<long>(i + 1)));
    }
    ws.push_back(moment_curve(m, static_cast<long>(i + 1)));
  }
  return quadratic_collection(n, m, etas, ws);
}

namespace {

constexpr long kMaxN = 8;

std::vector<CatalogEntry> make_entries() {
  const ParamSpec n1{"n", 2, 1, kMaxN}, n2{"n", 2, 2, kMaxN}, n3{"n", 3, 2, kMaxN};
  return {
      {"gradient", Role::Operator, {n1}, "Du for scalar u"},
      {"divergence", Role::Constraint, {n1}, "div f"},
      {"laplacian", Role::Operator, {n1}, "scalar Laplacian"},
      {"higher_order_div", Role::Constraint, {n1, {"k", 2, 1, 6}}, "sum over |alpha|=k of d^alpha f_alpha"},
      {"exterior_d", Role::Constraint, {n3, {"l", 1, 0, kMaxN - 1}}, "exterior derivative on l-forms"},
      {"hodge_pair", Role::Operator, {n3, {"l", 1, 1, kMaxN - 1}}, "(d, d*) on l-forms"},
      {"sym_gradient", Role::Operator, {n1}, "symmetric gradient of a vector field"},
      {"sym_gradient_Sk", Role::Operator, {n1, {"k", 2, 1, 4}}, "symmetric derivative of symmetric k-forms"},
      {"saint_venant", Role::Constraint, {n1}, "Saint-Venant compatibility on symmetric 2-forms"},
      {"saint_venant_k", Role::Constraint, {n1, {"k", 3, 1, 4}}, "Saint-Venant compatibility on symmetric k-forms"},
      {"curl_div", Role::Constraint, {n2}, "xi ^ e(xi) on matrix fields"},
      {"quaternion", Role::Operator, {}, "xi v on R^4, v imaginary quaternion"},
      {"defigueiredo", Role::Operator, {n1, {"m", 2, 1, kMaxN}}, "n+m-1 directional derivatives"},
      {"split_laplacian", Role::Operator, {n3, {"l", 1, 1, kMaxN - 1}}, "(dd* u, d*d u) on l-forms"},
      {"quadratic_collection", Role::Operator, {n2, {"m", 1, 1, kMaxN}}, "m+1 degenerate quadratic forms"},
      {"hyperbolic", Role::Operator, {}, "[[xi1, -xi2], [xi2, -xi1]]"},
      {"strange_r4", Role::Operator, {}, "(d1 d2, d3 d4) on R^4"},
  };
}

CatalogParams resolve(const CatalogEntry& e, const CatalogParams& given) {
  CatalogParams out;
  for (const auto& [k, v] : given) {
    auto it = std::find_if(e.params.begin(), e.params.end(), [&](const ParamSpec& p) { return p.name == k; });
    require(it != e.params.end(), "unknown parameter '" + k + "' for catalog entry " + e.name);
  }
  for (const auto& p : e.params) {
    auto it = given.find(p.name);
    const long v = it == given.end() ? p.default_value : it->second;
    require(v >= p.min_value && v <= p.max_value, "parameter " + p.name + "=" + std::to_string(v) +
                                                      " out of range [" + std::to_string(p.min_value) + ", " +
                                                      std::to_string(p.max_value) + "] for " + e.name);
    out[p.name] = v;
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_entries();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  fail(ErrorCode::Validation, "unknown catalog entry '" + name + "'");
}

CatalogItem catalog_get(const std::string& name, const CatalogParams& params) {
  const CatalogEntry& e = catalog_entry(name);
  CatalogItem item{name, resolve(e, params), e.role, {}, std::nullopt};
  auto p = [&](const char* k) { return static_cast<std::size_t>(item.params.at(k)); };
  auto pu = [&](const char* k) { return static_cast<unsigned>(item.params.at(k)); };
  if (name == "gradient") item.op = gradient(p("n"));
  else if (name == "divergence") item.op = divergence(p("n"));
  else if (name == "laplacian") item.op = laplacian(p("n"));
  else if (name == "higher_order_div") item.op = higher_order_div(p("n"), pu("k"));
  else if (name == "exterior_d") item.op = exterior_d(p("n"), p("l"));
  else if (name == "hodge_pair") {
    item.op = hodge_pair(p("n"), p("l"));
    // T(f, g) = g: projection onto the (l-1)-form block
    const std::size_t top = binomial(p("n"), p("l") + 1), low = binomial(p("n"), p("l") - 1);
    QMatrix t(low, top + low);
    for (std::size_t i = 0; i < low; ++i) t(i, top + i) = 1;
    item.constraint = t;
  } else if (name == "sym_gradient") item.op = sym_gradient_sk(p("n"), 1);
  else if (name == "sym_gradient_Sk") item.op = sym_gradient_sk(p("n"), pu("k"));
  else if (name == "saint_venant") item.op = saint_venant_k(p("n"), 2);
  else if (name == "saint_venant_k") item.op = saint_venant_k(p("n"), pu("k"));
  else if (name == "curl_div") item.op = curl_div(p("n"));
  else if (name == "quaternion") item.op = quaternion();
  else if (name == "defigueiredo") item.op = defigueiredo(p("n"), p("m"));
  else if (name == "split_laplacian") item.op = split_laplacian(p("n"), p("l"));
  else if (name == "quadratic_collection") item.op = quadratic_collection(p("n"), p("m"));
  else if (name == "hyperbolic") item.op = hyperbolic_example();
  else if (name == "strange_r4") item.op = strange_r4();
  else fail(ErrorCode::Internal, "catalog entry without constructor: " + name);
  return item;
}

CatalogItem catalog_from_query(const std::string& query) {
  const auto q = query.find('?');
  const std::string name = query.substr(0, q);
  CatalogParams params;
  if (q != std::string::npos) {
    std::string rest = query.substr(q + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto amp = rest.find('&', pos);
      const std::string kv = rest.substr(pos, amp == std::string::npos ? std::string::npos : amp - pos);
      if (!kv.empty()) {
        const auto eq = kv.find('=');
        require(eq != std::string::npos && eq > 0, "malformed catalog parameter '" + kv + "'");
        const std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
        long v = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc() || ptr != val.data() + val.size())
          fail(ErrorCode::Parse, "catalog parameter '" + key + "' is not an integer: '" + val + "'");
        require(!params.count(key), "duplicate catalog parameter '" + key + "'");
        params[key] = v;
      }
      if (amp == std::string::npos) break;
      pos = amp + 1;
    }
  }
  return catalog_get(name, params);
}

std::string catalog_query(const std::string& name, const CatalogParams& params) {
  std::string s = name;
  char sep = '?';
  for (const auto& [k, v] : params) {
    s += sep + k + "=" + std::to_string(v);
    sep = '&';
  }
  return s;
}

const std::vector<GroundTruth>& ground_truth() {
  static const std::vector<GroundTruth> table = [] {
    std::vector<GroundTruth> t;
    auto op = [&](std::string name, CatalogParams p, bool ell, std::optional<bool> can, std::string why) {
      t.push_back({std::move(name), std::move(p), ell, can, std::nullopt, std::nullopt, std::move(why)});
    };
    auto con = [&](std::string name, CatalogParams p, bool coc, std::string why) {
      t.push_back({std::move(name), std::move(p), std::nullopt, std::nullopt, coc, std::nullopt, std::move(why)});
    };
    for (long n = 1; n <= 3; ++n) op("gradient", {{"n", n}}, true, n >= 2, "elliptic; canceling iff n >= 2");
    for (long n = 2; n <= 3; ++n) con("divergence", {{"n", n}}, true, "cocanceling for n >= 2");
    for (auto [n, k] : {std::pair{2L, 2L}, {3L, 2L}, {2L, 3L}})
      con("higher_order_div", {{"n", n}, {"k", k}}, true, "cocanceling");
    for (auto [n, l] : {std::pair{3L, 0L}, {3L, 1L}, {3L, 2L}, {4L, 2L}})
      con("exterior_d", {{"n", n}, {"l", l}}, true, "cocanceling for l <= n-1");
    for (auto [n, l] : {std::pair{3L, 1L}, {3L, 2L}, {4L, 1L}, {4L, 2L}, {4L, 3L}})
      op("hodge_pair", {{"n", n}, {"l", l}}, true, l >= 2 && l <= n - 2, "elliptic; canceling iff 2 <= l <= n-2");
    for (long n = 1; n <= 3; ++n) op("sym_gradient", {{"n", n}}, true, n >= 2, "elliptic; canceling iff n >= 2");
    for (long n = 1; n <= 3; ++n)
      op("sym_gradient_Sk", {{"n", n}, {"k", 2}}, true, n >= 2, "elliptic; canceling iff n >= 2");
    for (long n = 1; n <= 3; ++n) con("saint_venant", {{"n", n}}, n >= 2, "cocanceling iff n >= 2");
    for (long n = 1; n <= 2; ++n) con("saint_venant_k", {{"n", n}, {"k", 3}}, n >= 2, "cocanceling iff n >= 2");
    for (long n = 2; n <= 3; ++n)
      t.push_back({"curl_div", {{"n", n}}, std::nullopt, std::nullopt, false, "identity",
                   "joint kernel is the line through the identity"});
    op("quaternion", {}, true, true, "elliptic and canceling");
    for (long n = 1; n <= 3; ++n)
      op("defigueiredo", {{"n", n}, {"m", 2}}, true, n >= 2, "elliptic; canceling iff n >= 2");
    for (auto [n, l] : {std::pair{2L, 1L}, {3L, 1L}, {3L, 2L}})
      op("split_laplacian", {{"n", n}, {"l", l}}, true, true, "elliptic and canceling");
    for (auto [n, m] : {std::pair{2L, 1L}, {3L, 2L}, {2L, 2L}})
      op("quadratic_collection", {{"n", n}, {"m", m}}, true, true, "elliptic and canceling");
    op("hyperbolic", {}, false, true, "not elliptic; canceling");
    op("strange_r4", {}, false, std::nullopt, "not elliptic");
    for (long n = 1; n <= 3; ++n) op("laplacian", {{"n", n}}, true, false, "elliptic; never canceling");
    return t;
  }();
  return table;
}

}  // namespace symcan
