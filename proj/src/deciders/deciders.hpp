#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/linalg.hpp"
#include "core/symbol.hpp"

namespace symcan {

// Axis-aligned box on the boundary of [-1,1]^n: coordinate `axis` is pinned to
// `sign`, so lo[axis] == hi[axis] == sign.
struct Box {
  std::size_t axis = 0;
  int sign = 1;
  QVector lo, hi;
  unsigned depth = 0;
};

struct CertifiedBox {
  Box box;
  Rational lower_bound;  // > 0, valid for det(G) on the box
};

enum class EllipticStatus { Elliptic, NotElliptic, Undecided };

struct EllipticityVerdict {
  EllipticStatus status = EllipticStatus::Undecided;
  std::vector<CertifiedBox> cover;  // Elliptic
  QVector direction;                // NotElliptic: A(direction) kernel_vector = 0
  QVector kernel_vector;
  std::optional<Box> failing_box;   // Undecided
  unsigned depth_reached = 0;
  std::size_t boxes_examined = 0;
};

struct EllipticityOptions {
  unsigned max_depth = 24;
  std::size_t box_budget = 200000;
};

EllipticityVerdict check_ellipticity(const SymbolOperator& a, const EllipticityOptions& opts = {});

// Lower bound of p on the box centre + [-r, r], by an exact Taylor shift to
// the centre: even monomials contribute min(0, c) r^beta, others -|c| r^beta.
Rational centered_lower_bound(const Polynomial& p, const QVector& lo, const QVector& hi);

// Simplest rational (smallest denominator, then numerator) in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

enum class CancelStatus { Canceling, NotCanceling, NotCancelingSampled };

struct CancelingVerdict {
  CancelStatus status = CancelStatus::NotCancelingSampled;
  std::vector<QVector> samples;
  // Intersection of the sampled images (intersected with ker T for the
  // partial variant). Exact when status is certified.
  Subspace intersection;
  std::optional<QVector> witness;
  std::vector<std::size_t> dim_history;  // dim after each added sample
  std::size_t refinements = 0;           // samples added from residual or grid search
};

struct CancelingOptions {
  std::uint64_t seed = 1;
  // Radius of the integer scan used when the operator is not known to be
  // elliptic; 0 picks the largest radius with at most ~2000 points.
  long grid_radius = 0;
};

// Deterministic directions: integer coordinates in [-10, 10], zero vector
// rejected, drawn from mt19937_64 with a fixed reduction.
std::vector<QVector> sample_directions(std::size_t n, std::size_t count, std::uint64_t seed);

// `elliptic` must be true only when ellipticity has been certified; it enables
// the exact witness identity for negative verdicts.
CancelingVerdict check_canceling(const SymbolOperator& a, bool elliptic, const CancelingOptions& opts = {});
CancelingVerdict check_canceling(const SymbolOperator& a, const CancelingOptions& opts = {});

enum class PartialStatus { Holds, Fails, FailsSampled };

struct PartialVerdict {
  PartialStatus status = PartialStatus::FailsSampled;
  CancelingVerdict detail;  // detail.intersection is W ∩ ker T
};

PartialVerdict check_partial_canceling(const SymbolOperator& a, const QMatrix& t, bool elliptic,
                                       const CancelingOptions& opts = {});

enum class SpanStatus { Spans, DoesNotSpan, DoesNotSpanSampled };

struct SpanningVerdict {
  SpanStatus status = SpanStatus::DoesNotSpanSampled;
  std::vector<QVector> samples;
  Subspace span;                     // span of the sampled image complements
  std::optional<QVector> witness;    // in every image, when certified
};

SpanningVerdict check_bb_spanning(const SymbolOperator& a, bool elliptic, const CancelingOptions& opts = {});

struct CocancelingVerdict {
  bool cocanceling = false;
  Subspace joint_kernel;
  std::optional<std::map<MultiIndex, QMatrix>> left_inverses;
};

CocancelingVerdict check_cocanceling(const SymbolOperator& l);
// K_alpha with sum K_alpha L_alpha = Id, or nullopt when L is not cocanceling.
std::optional<std::map<MultiIndex, QMatrix>> left_inverses(const SymbolOperator& l);

// A adj(G) A^T e - det(G) e as a dimE x 1 polynomial column.
class WitnessIdentity {
 public:
  explicit WitnessIdentity(const SymbolOperator& a);
  PolyMatrix residual(const QVector& e) const;
  const Polynomial& det() const { return det_; }

 private:
  PolyMatrix a_;
  PolyMatrix projector_;  // adj(G)
  Polynomial det_;
};

// Point of the integer grid [-r, r]^n, growing r from 3, where some entry of
// the nonzero column `p` does not vanish.
QVector nonvanishing_point(const PolyMatrix& p);

std::string to_string(EllipticStatus s);
std::string to_string(CancelStatus s);
std::string to_string(PartialStatus s);
std::string to_string(SpanStatus s);

}  // namespace symcan
