#include "core/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "core/error.hpp"

namespace symcan {

MultiIndex::MultiIndex(std::vector<unsigned> exponents)
    : e_(std::move(exponents)), degree_(std::accumulate(e_.begin(), e_.end(), 0u)) {}

MultiIndex MultiIndex::unit(std::size_t n, std::size_t i) {
  std::vector<unsigned> e(n, 0);
  e.at(i) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& rhs) const {
  if (size() != rhs.size()) fail(ErrorCode::Shape, "multi-index length mismatch");
  std::vector<unsigned> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.e_[i];
  return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& rhs) const {
  if (auto c = degree_ <=> rhs.degree_; c != 0) return c;
  return e_ <=> rhs.e_;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

namespace {

void enumerate_degree(std::size_t n, unsigned d, std::size_t pos, std::vector<unsigned>& cur,
                      std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = d;
    out.emplace_back(cur);
    return;
  }
  for (unsigned v = 0; v <= d; ++v) {
    cur[pos] = v;
    enumerate_degree(n, d - v, pos + 1, cur, out);
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices_of_degree(std::size_t n, unsigned d) {
  std::vector<MultiIndex> out;
  if (n == 0) return out;
  std::vector<unsigned> cur(n, 0);
  enumerate_degree(n, d, 0, cur, out);
  // enumeration is already lexicographic ascending within one degree
  return out;
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  Polynomial p(n);
  p.add_term(MultiIndex::zero(n), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t i) {
  Polynomial p(n);
  p.add_term(MultiIndex::unit(n, i), 1);
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, const Rational& c) {
  Polynomial p(alpha.size());
  p.add_term(alpha, c);
  return p;
}

int Polynomial::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

bool Polynomial::is_homogeneous(unsigned d) const {
  for (const auto& [alpha, c] : terms_)
    if (alpha.degree() != d) return false;
  return true;
}

Rational Polynomial::coefficient(const MultiIndex& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const MultiIndex& alpha, const Rational& c) {
  if (alpha.size() != n_) fail(ErrorCode::Shape, "monomial has wrong number of variables");
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.n_ != n_) fail(ErrorCode::Shape, "polynomial variable count mismatch");
  for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.n_ != n_) fail(ErrorCode::Shape, "polynomial variable count mismatch");
  for (const auto& [alpha, c] : rhs.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  Polynomial out = *this;
  out += rhs;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  Polynomial out = *this;
  out -= rhs;
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (rhs.n_ != n_) fail(ErrorCode::Shape, "polynomial variable count mismatch");
  Polynomial out(n_);
  if (is_zero() || rhs.is_zero()) return out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : rhs.terms_) out.add_term(a + b, ca * cb);
  return out;
}

Polynomial Polynomial::scaled(const Rational& s) const {
  Polynomial out(n_);
  if (sgn(s) == 0) return out;
  out.terms_ = terms_;
  for (auto& [alpha, c] : out.terms_) c *= s;
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(n_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const {
  if (x.size() != n_) fail(ErrorCode::Shape, "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [alpha, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (alpha[i]) t *= symcan::pow(x[i], alpha[i]);
    sum += t;
  }
  return sum;
}

double Polynomial::evaluate_real(const std::vector<double>& x) const {
  if (x.size() != n_) fail(ErrorCode::Shape, "evaluation point has wrong dimension");
  double sum = 0;
  for (const auto& [alpha, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < n_; ++i)
      for (unsigned k = 0; k < alpha[i]; ++k) t *= x[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::shifted(const std::vector<Rational>& c) const {
  if (c.size() != n_) fail(ErrorCode::Shape, "shift vector has wrong dimension");
  Polynomial cur = *this;
  for (std::size_t var = 0; var < n_; ++var) {
    if (sgn(c[var]) == 0) continue;
    unsigned maxe = 0;
    for (const auto& [alpha, coeff] : cur.terms_) maxe = std::max(maxe, alpha[var]);
    std::vector<Rational> cpow(maxe + 1);
    cpow[0] = 1;
    for (unsigned k = 1; k <= maxe; ++k) cpow[k] = cpow[k - 1] * c[var];
    Polynomial next(n_);
    for (const auto& [alpha, coeff] : cur.terms_) {
      const unsigned e = alpha[var];
      std::vector<unsigned> ex = alpha.exponents();
      Integer binom = 1;
      for (unsigned j = 0; j <= e; ++j) {
        // binom = C(e, j)
        ex[var] = j;
        next.add_term(MultiIndex(ex), coeff * Rational(binom) * cpow[e - j]);
        binom = binom * (e - j) / (j + 1);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Polynomial Polynomial::with_fixed(std::size_t var, const Rational& value) const {
  if (var >= n_) fail(ErrorCode::Shape, "variable index out of range");
  Polynomial out(n_);
  for (const auto& [alpha, coeff] : terms_) {
    std::vector<unsigned> ex = alpha.exponents();
    const unsigned e = ex[var];
    ex[var] = 0;
    out.add_term(MultiIndex(std::move(ex)), coeff * symcan::pow(value, e));
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [alpha, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (std::size_t i = 0; i < n_; ++i) {
      if (alpha[i] == 0) continue;
      os << "*x" << (i + 1);
      if (alpha[i] > 1) os << "^" << alpha[i];
    }
  }
  return os.str();
}

}  // namespace symcan
