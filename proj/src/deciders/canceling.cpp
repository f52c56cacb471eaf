#include <random>

#include "core/error.hpp"
#include "deciders/deciders.hpp"

namespace symcan {

std::vector<QVector> sample_directions(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<QVector> out;
  while (out.size() < count) {
    QVector v(n);
    bool nonzero = false;
    for (auto& x : v) {
      x = static_cast<long>(rng() % 21) - 10;
      nonzero = nonzero || sgn(x) != 0;
    }
    if (nonzero) out.push_back(std::move(v));
  }
  return out;
}

WitnessIdentity::WitnessIdentity(const SymbolOperator& a) : a_(a.to_polymatrix()) {
  PolyMatrix g = a_.transpose() * a_;
  projector_ = poly_adjugate(g);
  det_ = poly_det(g);
}

PolyMatrix WitnessIdentity::residual(const QVector& e) const {
  PolyMatrix ate = a_.transpose().apply(e);
  PolyMatrix out = a_ * (projector_ * ate);
  for (std::size_t i = 0; i < out.rows(); ++i)
    if (sgn(e[i]) != 0) out(i, 0) -= det_.scaled(e[i]);
  return out;
}

namespace {

// Odometer over [-m, m]^n with per-coordinate order 0, 1, -1, 2, -2, ...
// visiting only points of max-norm exactly m, for m = 1, 2, ..., max_radius.
template <typename Visit>
bool scan_grid(std::size_t n, long max_radius, bool half_space, Visit&& visit) {
  for (long m = 1; m <= max_radius; ++m) {
    const long width = 2 * m + 1;
    std::vector<long> digit(n, 0);
    auto value = [](long d) { return d % 2 ? (d + 1) / 2 : -(d / 2); };
    for (;;) {
      long maxabs = 0, first = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const long v = value(digit[i]);
        maxabs = std::max(maxabs, v < 0 ? -v : v);
        if (first == 0) first = v;
      }
      if (maxabs == m && (!half_space || first > 0)) {
        QVector pt(n);
        for (std::size_t i = 0; i < n; ++i) pt[i] = value(digit[i]);
        if (visit(pt)) return true;
      }
      std::size_t p = n;
      while (p > 0 && digit[p - 1] == width - 1) digit[--p] = 0;
      if (p == 0) break;
      ++digit[p - 1];
    }
  }
  return false;
}

long default_radius(std::size_t n) {
  long r = 1;
  for (long next = 2;; ++next) {
    double count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= static_cast<double>(2 * next + 1);
    if ((count - 1) / 2 > 2000) break;
    r = next;
  }
  return r;
}

// Shared refinement loop: X = (intersection of sampled images) ∩ K.
class Refiner {
 public:
  Refiner(const SymbolOperator& a, Subspace target, bool elliptic, const CancelingOptions& opts)
      : a_(a), target_(std::move(target)), elliptic_(elliptic), opts_(opts), w_(Subspace::full(a.dim_e())) {
    verdict_.intersection = target_;
  }

  CancelingVerdict run() {
    for (const auto& xi : sample_directions(a_.n(), a_.dim_e() + 4, opts_.seed)) add(xi);
    if (verdict_.intersection.is_zero()) return finish(CancelStatus::Canceling);
    if (elliptic_) return run_elliptic();
    const long r = opts_.grid_radius > 0 ? opts_.grid_radius : default_radius(a_.n());
    scan_grid(a_.n(), r, true, [&](const QVector& xi) {
      if (!image(a_.evaluate(xi)).contains(verdict_.intersection)) {
        add(xi);
        ++verdict_.refinements;
      }
      return verdict_.intersection.is_zero();
    });
    return finish(verdict_.intersection.is_zero() ? CancelStatus::Canceling : CancelStatus::NotCancelingSampled);
  }

 private:
  void add(const QVector& xi) {
    w_ = intersection(w_, image(a_.evaluate(xi)));
    verdict_.samples.push_back(xi);
    verdict_.intersection = intersection(w_, target_);
    verdict_.dim_history.push_back(verdict_.intersection.dim());
  }

  CancelingVerdict run_elliptic() {
    WitnessIdentity id(a_);
    for (;;) {
      if (verdict_.intersection.is_zero()) return finish(CancelStatus::Canceling);
      bool refined = false;
      for (std::size_t j = 0; j < verdict_.intersection.dim() && !refined; ++j) {
        PolyMatrix r = id.residual(verdict_.intersection.basis_vector(j));
        if (r.is_zero()) continue;
        add(nonvanishing_point(r));
        ++verdict_.refinements;
        refined = true;
      }
      if (!refined) {
        verdict_.witness = verdict_.intersection.basis_vector(0);
        return finish(CancelStatus::NotCanceling);
      }
    }
  }

  CancelingVerdict finish(CancelStatus s) {
    verdict_.status = s;
    return std::move(verdict_);
  }

  const SymbolOperator& a_;
  Subspace target_;
  bool elliptic_;
  CancelingOptions opts_;
  Subspace w_;
  CancelingVerdict verdict_;
};

}  // namespace

QVector nonvanishing_point(const PolyMatrix& p) {
  if (p.is_zero()) fail(ErrorCode::Internal, "nonvanishing_point of the zero matrix");
  int degree = 0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) degree = std::max(degree, p(i, j).degree());
  // A nonzero polynomial of degree d cannot vanish on all of S^n when |S| > d.
  const long radius = std::max<long>(3, (degree + 1) / 2 + 1);
  QVector found;
  scan_grid(p.nvars(), radius, false, [&](const QVector& xi) {
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        if (sgn(p(i, j).evaluate(xi)) != 0) {
          found = xi;
          return true;
        }
    return false;
  });
  if (found.empty()) fail(ErrorCode::Internal, "no nonvanishing grid point found");
  return found;
}

CancelingVerdict check_canceling(const SymbolOperator& a, bool elliptic, const CancelingOptions& opts) {
  return Refiner(a, Subspace::full(a.dim_e()), elliptic, opts).run();
}

CancelingVerdict check_canceling(const SymbolOperator& a, const CancelingOptions& opts) {
  const bool elliptic = check_ellipticity(a).status == EllipticStatus::Elliptic;
  return check_canceling(a, elliptic, opts);
}

PartialVerdict check_partial_canceling(const SymbolOperator& a, const QMatrix& t, bool elliptic,
                                       const CancelingOptions& opts) {
  if (t.cols() != a.dim_e()) fail(ErrorCode::Shape, "T must have dimE columns");
  PartialVerdict out;
  out.detail = Refiner(a, kernel_basis(t), elliptic, opts).run();
  switch (out.detail.status) {
    case CancelStatus::Canceling: out.status = PartialStatus::Holds; break;
    case CancelStatus::NotCanceling: out.status = PartialStatus::Fails; break;
    case CancelStatus::NotCancelingSampled: out.status = PartialStatus::FailsSampled; break;
  }
  return out;
}

SpanningVerdict check_bb_spanning(const SymbolOperator& a, bool elliptic, const CancelingOptions& opts) {
  SpanningVerdict out;
  out.span = Subspace(a.dim_e());
  auto add = [&](const QVector& xi) {
    out.samples.push_back(xi);
    out.span = sum(out.span, orthogonal_complement(image(a.evaluate(xi))));
  };
  for (const auto& xi : sample_directions(a.n(), a.dim_e() + 4, opts.seed)) add(xi);
  if (out.span.is_full()) {
    out.status = SpanStatus::Spans;
    return out;
  }
  if (elliptic) {
    WitnessIdentity id(a);
    for (;;) {
      if (out.span.is_full()) {
        out.status = SpanStatus::Spans;
        return out;
      }
      Subspace perp = orthogonal_complement(out.span);
      bool refined = false;
      for (std::size_t j = 0; j < perp.dim() && !refined; ++j) {
        PolyMatrix r = id.residual(perp.basis_vector(j));
        if (r.is_zero()) continue;
        add(nonvanishing_point(r));
        refined = true;
      }
      if (!refined) {
        out.status = SpanStatus::DoesNotSpan;
        out.witness = perp.basis_vector(0);
        return out;
      }
    }
  }
  const long r = opts.grid_radius > 0 ? opts.grid_radius : default_radius(a.n());
  scan_grid(a.n(), r, true, [&](const QVector& xi) {
    Subspace c = orthogonal_complement(image(a.evaluate(xi)));
    if (!out.span.contains(c)) add(xi);
    return out.span.is_full();
  });
  out.status = out.span.is_full() ? SpanStatus::Spans : SpanStatus::DoesNotSpanSampled;
  return out;
}

std::string to_string(CancelStatus s) {
  switch (s) {
    case CancelStatus::Canceling: return "CANCELING";
    case CancelStatus::NotCanceling: return "NOT_CANCELING";
    case CancelStatus::NotCancelingSampled: return "NOT_CANCELING_SAMPLED";
  }
  return "NOT_CANCELING_SAMPLED";
}

std::string to_string(PartialStatus s) {
  switch (s) {
    case PartialStatus::Holds: return "HOLDS";
    case PartialStatus::Fails: return "FAILS";
    case PartialStatus::FailsSampled: return "FAILS_SAMPLED";
  }
  return "FAILS_SAMPLED";
}

std::string to_string(SpanStatus s) {
  switch (s) {
    case SpanStatus::Spans: return "SPANS";
    case SpanStatus::DoesNotSpan: return "DOES_NOT_SPAN";
    case SpanStatus::DoesNotSpanSampled: return "DOES_NOT_SPAN_SAMPLED";
  }
  return "DOES_NOT_SPAN_SAMPLED";
}

}  // namespace symcan
