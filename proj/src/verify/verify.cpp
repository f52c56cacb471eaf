#include "verify/verify.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/linalg.hpp"
#include "core/polymatrix.hpp"
#include "io/operator_json.hpp"

namespace symcan {

namespace {

using json = nlohmann::json;

bool is_zero_vector(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector times(const QMatrix& m, const QVector& v) {
  QVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

std::vector<QVector> vectors(const json& j) {
  std::vector<QVector> out;
  for (const auto& v : j) out.push_back(qvector_from_json(v));
  return out;
}

Subspace span_of(std::size_t ambient, const json& basis) { return Subspace::span(ambient, vectors(basis)); }

// A adj(A^T A) A^T w - det(A^T A) w, expanded from scratch.
bool witness_identity_vanishes(const SymbolOperator& a, const QVector& w) {
  const PolyMatrix p = a.to_polymatrix();
  const PolyMatrix g = p.transpose() * p;
  const PolyMatrix lhs = p * (poly_adjugate(g) * p.transpose().apply(w));
  const Polynomial d = poly_det(g);
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    Polynomial r = lhs(i, 0);
    if (sgn(w[i]) != 0) r -= d.scaled(w[i]);
    if (!r.is_zero()) return false;
  }
  return true;
}

// Plain lower bound on centre + [-r, r]: c_0 - sum |c_beta| r^beta, with
// even monomials of positive coefficient dropped.
Rational plain_bound(const Polynomial& centred, const QVector& r) {
  const std::size_t n = r.size();
  Rational lower = 0;
  for (const auto& [beta, c] : centred.terms()) {
    Rational rb = 1;
    bool even = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (beta[i] == 0) continue;
      rb *= pow(r[i], beta[i]);
      even = even && beta[i] % 2 == 0;
    }
    if (beta.degree() == 0)
      lower += c;
    else if (even)
      lower += sgn(c) < 0 ? Rational(c * rb) : Rational(0);
    else
      lower -= abs_value(c) * rb;
  }
  return lower;
}

bool positive_on(const Polynomial& det, QVector lo, QVector hi, int depth) {
  const std::size_t n = lo.size();
  QVector c(n), r(n);
  for (std::size_t i = 0; i < n; ++i) {
    c[i] = (lo[i] + hi[i]) / 2;
    r[i] = (hi[i] - lo[i]) / 2;
  }
  if (sgn(plain_bound(det.shifted(c), r)) > 0) return true;
  if (depth == 0) return false;
  std::size_t split = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (r[i] > r[split]) split = i;
  if (sgn(r[split]) == 0) return false;
  QVector mid_hi = hi, mid_lo = lo;
  mid_hi[split] = c[split];
  mid_lo[split] = c[split];
  return positive_on(det, lo, mid_hi, depth - 1) && positive_on(det, mid_lo, hi, depth - 1);
}

struct FaceBox {
  QVector lo, hi;
};

bool interiors_overlap(const FaceBox& a, const FaceBox& b, std::size_t skip) {
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    if (i == skip) continue;
    if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return false;
  }
  return true;
}

class Verifier {
 public:
  explicit Verifier(const json& report) : report_(report) {}

  VerifyTranscript run() {
    try {
      const auto zero = report_.value("mode", "") == "constraint" ? SymbolOperator::ZeroPolicy::Allow
                                                                   : SymbolOperator::ZeroPolicy::Reject;
      a_ = parse_operator_json(report_.at("operator").dump(), "<report>", zero).op;
      if (report_["operator"].contains("T"))
        t_ = qmatrix_from_json(report_["operator"]["T"], report_["operator"]["T"].size(), a_.dim_e());
    } catch (const std::exception& e) {
      add("operator", false, e.what());
      return std::move(out_);
    }
    const std::string want = report_.at("input").at("digest");
    add("operator digest", digest(operator_to_json(a_, t_)) == want, want);
    const json& certs = report_.at("certificates");
    bool consistent = report_.at("verdicts").size() == certs.size();
    for (const auto& [name, verdict] : report_["verdicts"].items())
      consistent = consistent && certs.contains(name) && certs[name].value("status", json()) == verdict;
    add("verdicts match their certificates", consistent);
    if (certs.contains("ellipticity")) ellipticity(certs["ellipticity"]);
    if (certs.contains("canceling")) canceling("canceling", certs["canceling"], std::nullopt);
    if (certs.contains("partial_canceling")) {
      if (!t_) add("partial_canceling", false, "report has a partial verdict but no T");
      else canceling("partial_canceling", certs["partial_canceling"], kernel_basis(*t_));
    }
    if (certs.contains("bb_spanning")) spanning(certs["bb_spanning"]);
    if (certs.contains("cocanceling")) cocanceling(certs["cocanceling"]);
    return std::move(out_);
  }

 private:
  void add(std::string name, bool ok, std::string detail = {}, bool certificate = true) {
    out_.checks.push_back({std::move(name), ok, certificate, std::move(detail)});
  }

  void ellipticity(const json& c) {
    const std::string status = c.at("status");
    if (status == "NOT_ELLIPTIC") {
      const QVector xi = qvector_from_json(c.at("direction")), v = qvector_from_json(c.at("kernel_vector"));
      const bool ok = !is_zero_vector(xi) && !is_zero_vector(v) && is_zero_vector(times(a_.evaluate(xi), v));
      add("ellipticity: kernel witness A(xi) v = 0", ok);
      return;
    }
    if (status == "UNDECIDED") {
      add("ellipticity: undecided (no certificate)", true, "", false);
      return;
    }
    elliptic_ = cover(c.at("cover"));
  }

  bool cover(const json& boxes) {
    const std::size_t n = a_.n();
    std::map<std::pair<std::size_t, int>, std::vector<FaceBox>> faces;
    bool shape_ok = true;
    for (const auto& b : boxes) {
      const std::size_t axis = b.at("axis");
      const int sign = b.at("sign");
      FaceBox fb{qvector_from_json(b.at("lo")), qvector_from_json(b.at("hi"))};
      shape_ok = shape_ok && axis < n && (sign == 1 || sign == -1) && fb.lo.size() == n && fb.hi.size() == n;
      if (!shape_ok) break;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == axis) shape_ok = shape_ok && fb.lo[i] == sign && fb.hi[i] == sign;
        else shape_ok = shape_ok && fb.lo[i] >= -1 && fb.lo[i] < fb.hi[i] && fb.hi[i] <= 1;
      }
      faces[{axis, sign}].push_back(std::move(fb));
    }
    add("ellipticity: boxes lie on the cube boundary", shape_ok);
    if (!shape_ok) return false;

    // disjoint interiors plus full measure on every face means the closed boxes cover it
    bool union_ok = faces.size() == 2 * n;
    const Rational face_measure = pow(Rational(2), static_cast<unsigned>(n - 1));
    for (auto& [key, list] : faces) {
      Rational measure = 0;
      for (const auto& fb : list) {
        Rational v = 1;
        for (std::size_t i = 0; i < n; ++i)
          if (i != key.first) v *= fb.hi[i] - fb.lo[i];
        measure += v;
      }
      union_ok = union_ok && measure == face_measure;
      const std::size_t sweep = key.first == 0 && n > 1 ? 1 : 0;
      std::sort(list.begin(), list.end(), [&](const FaceBox& x, const FaceBox& y) { return x.lo[sweep] < y.lo[sweep]; });
      for (std::size_t i = 0; i < list.size() && union_ok; ++i)
        for (std::size_t j = i + 1; j < list.size() && list[j].lo[sweep] < list[i].hi[sweep]; ++j)
          if (interiors_overlap(list[i], list[j], key.first)) union_ok = false;
    }
    add("ellipticity: cover unions to the full cube boundary", union_ok);

    const PolyMatrix p = a_.to_polymatrix();
    const Polynomial det = poly_det(p.transpose() * p);
    bool positive = true;
    std::size_t failed = 0;
    for (const auto& [key, list] : faces)
      for (const auto& fb : list)
        if (!positive_on(det, fb.lo, fb.hi, 6)) {
          positive = false;
          ++failed;
        }
    add("ellipticity: det(A^T A) > 0 on every box", positive,
        positive ? "" : std::to_string(failed) + " boxes not confirmed");
    return shape_ok && union_ok && positive;
  }

  Subspace sampled_intersection(const json& c, const std::optional<Subspace>& target) {
    Subspace w = target.value_or(Subspace::full(a_.dim_e()));
    for (const auto& xi : vectors(c.at("samples"))) w = intersection(w, image(a_.evaluate(xi)));
    return w;
  }

  void canceling(const std::string& name, const json& c, const std::optional<Subspace>& target) {
    const std::string status = c.at("status");
    const Subspace w = sampled_intersection(c, target);
    const Subspace reported = span_of(a_.dim_e(), c.at("intersection"));
    if (status == "CANCELING" || status == "HOLDS") {
      add(name + ": sampled intersection = {0}", w.is_zero() && reported.is_zero());
    } else if (status == "NOT_CANCELING" || status == "FAILS") {
      const QVector e = qvector_from_json(c.at("witness"));
      const bool ok = elliptic_ && !is_zero_vector(e) && w.contains(e) && witness_identity_vanishes(a_, e);
      add(name + ": witness adjugate identity expands to zero", ok,
          elliptic_ ? "" : "ellipticity certificate missing or invalid");
    } else {
      add(name + ": sampled verdict reproduces (no certificate)", w == reported, "", false);
    }
  }

  void spanning(const json& c) {
    const std::string status = c.at("status");
    Subspace s(a_.dim_e());
    for (const auto& xi : vectors(c.at("samples"))) s = sum(s, orthogonal_complement(image(a_.evaluate(xi))));
    if (status == "SPANS") {
      add("bb_spanning: complements span E", s.is_full());
    } else if (status == "DOES_NOT_SPAN") {
      const QVector e = qvector_from_json(c.at("witness"));
      bool perp = true;
      for (std::size_t j = 0; j < s.dim(); ++j) perp = perp && sgn(dot(s.basis_vector(j), e)) == 0;
      const bool ok = elliptic_ && !is_zero_vector(e) && perp && witness_identity_vanishes(a_, e);
      add("bb_spanning: witness adjugate identity expands to zero", ok);
    } else {
      add("bb_spanning: sampled verdict reproduces (no certificate)", s == span_of(a_.dim_e(), c.at("span")), "", false);
    }
  }

  void cocanceling(const json& c) {
    QMatrix stacked(0, a_.dim_v());
    for (const auto& [alpha, m] : a_.terms()) stacked = stacked.vstack(m);
    const Subspace k = kernel_basis(stacked);
    const Subspace reported = span_of(a_.dim_v(), c.at("joint_kernel"));
    add("cocanceling: joint kernel reproduces", k == reported);
    if (c.at("status") == "COCANCELING") {
      bool ok = k.is_zero() && c.contains("left_inverses");
      if (ok) {
        QMatrix total(a_.dim_v(), a_.dim_v());
        for (const auto& entry : c["left_inverses"]) {
          std::vector<unsigned> e;
          for (const auto& x : entry.at("alpha")) e.push_back(x.get<unsigned>());
          auto it = a_.terms().find(MultiIndex(e));
          if (it == a_.terms().end()) {
            ok = false;
            break;
          }
          total = total + qmatrix_from_json(entry.at("K"), a_.dim_v(), it->second.rows()) * it->second;
        }
        ok = ok && total == QMatrix::identity(a_.dim_v());
      }
      add("cocanceling: sum K_alpha L_alpha = Id", ok);
    } else {
      bool ok = !k.is_zero();
      for (std::size_t j = 0; j < reported.dim() && ok; ++j)
        for (const auto& [alpha, m] : a_.terms()) ok = ok && is_zero_vector(times(m, reported.basis_vector(j)));
      add("cocanceling: joint kernel vectors annihilate every L_alpha", ok);
    }
  }

  const json& report_;
  SymbolOperator a_;
  std::optional<QMatrix> t_;
  bool elliptic_ = false;
  VerifyTranscript out_;
};

}  // namespace

bool VerifyTranscript::all_ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.ok; });
}

nlohmann::ordered_json VerifyTranscript::to_json() const {
  nlohmann::ordered_json j;
  j["all_ok"] = all_ok();
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json e = {{"check", c.name}, {"ok", c.ok}, {"certificate", c.certificate}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  return j;
}

VerifyTranscript verify_report(const nlohmann::json& report) {
  try {
    return Verifier(report).run();
  } catch (const std::exception& e) {
    VerifyTranscript t;
    t.checks.push_back({"report structure", false, true, e.what()});
    return t;
  }
}

}  // namespace symcan
