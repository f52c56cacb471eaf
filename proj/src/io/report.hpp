#pragma once

#include <optional>

#include "compat/compat.hpp"
#include "deciders/deciders.hpp"
#include "io/operator_json.hpp"

namespace symcan {

inline constexpr const char* kVersion = "0.1.0";

struct AnalyzeOptions {
  std::uint64_t seed = 1;
  unsigned max_depth = 24;
  std::size_t box_budget = 200000;
  std::optional<Role> as;  // defaults to the role of the input
  bool timings = true;
};

struct Outcome {
  ojson report;
  bool certified = false;  // every verdict certified (no UNDECIDED or sampled ones)
};

Outcome analyze(const OperatorFile& f, const AnalyzeOptions& opts = {});

struct CompatOutcome {
  ojson report;
  bool identity_holds = false;
  bool kernels_match = false;
};

CompatOutcome compat(const OperatorFile& f, const CompatOptions& opts = {});

ojson ellipticity_to_json(const EllipticityVerdict& v);
ojson canceling_to_json(const CancelingVerdict& v);
ojson spanning_to_json(const SpanningVerdict& v);
ojson cocanceling_to_json(const CocancelingVerdict& v);

// Report without its timing fields, for byte comparisons.
ojson without_timings(ojson report);

}  // namespace symcan
