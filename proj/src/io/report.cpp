#include "io/report.hpp"

#include <chrono>

#include "core/error.hpp"

namespace symcan {

namespace {

class Stopwatch {
 public:
  double lap_ms() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

ojson box_to_json(const Box& b) {
  return {{"axis", b.axis}, {"sign", b.sign}, {"lo", to_json(b.lo)}, {"hi", to_json(b.hi)}, {"depth", b.depth}};
}

ojson samples_to_json(const std::vector<QVector>& xs) {
  ojson a = ojson::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

ojson header(const OperatorFile& f, const ojson& op) {
  ojson j;
  j["tool"] = {{"name", "symcan"}, {"version", kVersion}};
  j["input"] = {{"source", f.source}, {"digest", digest(op)}};
  return j;
}

}  // namespace

ojson ellipticity_to_json(const EllipticityVerdict& v) {
  ojson j;
  j["status"] = to_string(v.status);
  j["boxes_examined"] = v.boxes_examined;
  j["depth_reached"] = v.depth_reached;
  switch (v.status) {
    case EllipticStatus::Elliptic: {
      ojson cover = ojson::array();
      for (const auto& cb : v.cover) {
        ojson b = box_to_json(cb.box);
        b["lower_bound"] = to_json(cb.lower_bound);
        cover.push_back(std::move(b));
      }
      j["cover"] = std::move(cover);
      break;
    }
    case EllipticStatus::NotElliptic:
      j["direction"] = to_json(v.direction);
      j["kernel_vector"] = to_json(v.kernel_vector);
      break;
    case EllipticStatus::Undecided:
      if (v.failing_box) j["failing_box"] = box_to_json(*v.failing_box);
      break;
  }
  return j;
}

ojson canceling_to_json(const CancelingVerdict& v) {
  ojson j;
  j["status"] = to_string(v.status);
  j["samples"] = samples_to_json(v.samples);
  j["intersection"] = to_json(v.intersection);
  j["dim_history"] = v.dim_history;
  j["refinements"] = v.refinements;
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

ojson spanning_to_json(const SpanningVerdict& v) {
  ojson j;
  j["status"] = to_string(v.status);
  j["samples"] = samples_to_json(v.samples);
  j["span"] = to_json(v.span);
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

ojson cocanceling_to_json(const CocancelingVerdict& v) {
  ojson j;
  j["status"] = v.cocanceling ? "COCANCELING" : "NOT_COCANCELING";
  j["joint_kernel"] = to_json(v.joint_kernel);
  if (v.left_inverses) {
    ojson k = ojson::array();
    for (const auto& [alpha, m] : *v.left_inverses) k.push_back({{"alpha", to_json(alpha)}, {"K", to_json(m)}});
    j["left_inverses"] = std::move(k);
  }
  return j;
}

Outcome analyze(const OperatorFile& f, const AnalyzeOptions& opts) {
  const SymbolOperator& a = f.op;
  const ojson op = operator_to_json(a, f.t);
  const Role role = opts.as.value_or(f.role);
  Outcome out;
  ojson& r = out.report;
  r = header(f, op);
  r["seed"] = opts.seed;
  r["mode"] = role == Role::Operator ? "operator" : "constraint";
  r["options"] = {{"max_depth", opts.max_depth}, {"box_budget", opts.box_budget}};
  r["operator"] = op;
  ojson verdicts, certs, summary, timings;
  Stopwatch sw;
  bool certified = true;
  const CancelingOptions copts{opts.seed, 0};

  if (role == Role::Constraint) {
    const CocancelingVerdict v = check_cocanceling(a);
    timings["cocanceling"] = sw.lap_ms();
    verdicts["cocanceling"] = v.cocanceling ? "COCANCELING" : "NOT_COCANCELING";
    certs["cocanceling"] = cocanceling_to_json(v);
    summary["cocanceling"] = v.cocanceling;
    summary["joint_kernel_dim"] = v.joint_kernel.dim();
  } else {
    const EllipticityVerdict ev = check_ellipticity(a, {opts.max_depth, opts.box_budget});
    timings["ellipticity"] = sw.lap_ms();
    const bool elliptic = ev.status == EllipticStatus::Elliptic;
    certified = certified && ev.status != EllipticStatus::Undecided;
    verdicts["ellipticity"] = to_string(ev.status);
    certs["ellipticity"] = ellipticity_to_json(ev);
    if (ev.status != EllipticStatus::Undecided) summary["elliptic"] = elliptic;

    const CancelingVerdict cv = check_canceling(a, elliptic, copts);
    timings["canceling"] = sw.lap_ms();
    certified = certified && cv.status != CancelStatus::NotCancelingSampled;
    verdicts["canceling"] = to_string(cv.status);
    certs["canceling"] = canceling_to_json(cv);
    if (cv.status != CancelStatus::NotCancelingSampled) summary["canceling"] = cv.status == CancelStatus::Canceling;
    if (cv.witness) summary["witness"] = to_json(*cv.witness);

    const SpanningVerdict sv = check_bb_spanning(a, elliptic, copts);
    timings["bb_spanning"] = sw.lap_ms();
    certified = certified && sv.status != SpanStatus::DoesNotSpanSampled;
    verdicts["bb_spanning"] = to_string(sv.status);
    certs["bb_spanning"] = spanning_to_json(sv);

    if (f.t) {
      const PartialVerdict pv = check_partial_canceling(a, *f.t, elliptic, copts);
      timings["partial_canceling"] = sw.lap_ms();
      certified = certified && pv.status != PartialStatus::FailsSampled;
      verdicts["partial_canceling"] = to_string(pv.status);
      certs["partial_canceling"] = canceling_to_json(pv.detail);
      certs["partial_canceling"]["status"] = to_string(pv.status);
    }

    try {
      const AnnihilatorResult ar = build_annihilator(a);
      r["annihilator_digest"] = digest(operator_to_json(ar.l));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Budget) throw;
      r["annihilator_digest"] = nullptr;
    }
    timings["annihilator"] = sw.lap_ms();
  }
  r["verdicts"] = std::move(verdicts);
  r["summary"] = std::move(summary);
  r["certified"] = certified;
  r["certificates"] = std::move(certs);
  if (opts.timings) r["timings_ms"] = std::move(timings);
  out.certified = certified;
  return out;
}

CompatOutcome compat(const OperatorFile& f, const CompatOptions& opts) {
  const ojson op = operator_to_json(f.op, std::nullopt);
  CompatOutcome out;
  ojson& r = out.report;
  r = header(f, op);
  r["seed"] = opts.seed;
  const AnnihilatorResult ar = build_annihilator(f.op, opts);
  const AnnihilatorReport check = verify_annihilator(f.op, ar.l, opts);
  const ojson l = operator_to_json(ar.l);
  r["annihilator"] = l;
  r["annihilator_zero"] = ar.l.is_zero();
  r["annihilator_digest"] = digest(l);
  r["identity_holds"] = check.identity_holds;
  ojson samples = ojson::array();
  for (const auto& s : check.samples)
    samples.push_back({{"xi", to_json(s.xi)},
                       {"kernel_equals_image", s.kernel_equals_image},
                       {"image_dim", s.image_dim},
                       {"injective", s.injective}});
  r["sampled_kernel_checks"] = std::move(samples);
  r["kernels_match"] = check.kernels_match();
  out.identity_holds = check.identity_holds;
  out.kernels_match = check.kernels_match();
  return out;
}

ojson without_timings(ojson report) {
  report.erase("timings_ms");
  return report;
}

}  // namespace symcan
