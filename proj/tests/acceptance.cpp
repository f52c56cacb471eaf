// Acceptance report: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "catalog/catalog.hpp"
#include "compat/compat.hpp"
#include "deciders/deciders.hpp"
#include "gen.hpp"
#include "io/operator_json.hpp"
#include "io/report.hpp"
#include "json.hpp"
#include "numlab/norms.hpp"
#include "numlab/presets.hpp"
#include "verify/verify.hpp"

using namespace symcan;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Line {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) detail << "; ";
      else detail.str("");
      ok = false;
      detail << what;
    }
  }
};

int failures = 0;

void report(const char* name, const std::function<void(Line&)>& body) {
  Line line;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(line);
  } catch (const std::exception& e) {
    line.require(false, std::string("exception: ") + e.what());
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s  %-40s %s (%.1f s)\n", line.ok ? "PASS" : "FAIL", name, line.detail.str().c_str(), s);
  std::fflush(stdout);
  failures += line.ok ? 0 : 1;
}

nlohmann::json oracle() {
  std::ifstream in(SYMCAN_FIXTURE_DIR "/numlab_oracle.json");
  return nlohmann::json::parse(in);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Expected classifications, written out from the stated propositions.
struct Expect {
  std::string query;
  std::optional<bool> elliptic, canceling, cocanceling;
  bool identity_kernel = false;
};

std::vector<Expect> expectations() {
  std::vector<Expect> t;
  auto op = [&](std::string q, bool e, std::optional<bool> c) { t.push_back({std::move(q), e, c, {}, false}); };
  auto con = [&](std::string q, bool c) { t.push_back({std::move(q), {}, {}, c, false}); };
  for (int n = 1; n <= 3; ++n) op("gradient?n=" + std::to_string(n), true, n >= 2);
  for (int n = 2; n <= 3; ++n) con("divergence?n=" + std::to_string(n), true);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {2, 3}})
    con("higher_order_div?n=" + std::to_string(n) + "&k=" + std::to_string(k), true);
  for (auto [n, l] : {std::pair{3, 0}, {3, 1}, {3, 2}, {4, 2}})
    con("exterior_d?n=" + std::to_string(n) + "&l=" + std::to_string(l), true);
  for (auto [n, l] : {std::pair{3, 1}, {3, 2}, {4, 1}, {4, 2}, {4, 3}})
    op("hodge_pair?n=" + std::to_string(n) + "&l=" + std::to_string(l), true, 2 <= l && l <= n - 2);
  for (int n = 1; n <= 3; ++n) op("sym_gradient?n=" + std::to_string(n), true, n >= 2);
  for (int n = 1; n <= 3; ++n) op("sym_gradient_Sk?n=" + std::to_string(n) + "&k=2", true, n >= 2);
  for (int n = 1; n <= 3; ++n) con("saint_venant?n=" + std::to_string(n), n >= 2);
  for (int n = 1; n <= 2; ++n) con("saint_venant_k?n=" + std::to_string(n) + "&k=3", n >= 2);
  for (int n = 2; n <= 3; ++n) t.push_back({"curl_div?n=" + std::to_string(n), {}, {}, false, true});
  op("quaternion", true, true);
  for (int n = 1; n <= 3; ++n) op("defigueiredo?n=" + std::to_string(n) + "&m=2", true, n >= 2);
  for (auto [n, l] : {std::pair{2, 1}, {3, 1}, {3, 2}})
    op("split_laplacian?n=" + std::to_string(n) + "&l=" + std::to_string(l), true, true);
  for (auto [n, m] : {std::pair{2, 1}, {3, 2}, {2, 2}})
    op("quadratic_collection?n=" + std::to_string(n) + "&m=" + std::to_string(m), true, true);
  op("hyperbolic", false, true);
  op("strange_r4", false, std::nullopt);
  for (int n = 1; n <= 3; ++n) op("laplacian?n=" + std::to_string(n), true, false);
  return t;
}

std::vector<SymbolOperator> property_operators() {
  return {gradient(1),        gradient(2),      gradient(3),           laplacian(2),
          hodge_pair(3, 1),   hodge_pair(3, 2), sym_gradient_sk(2, 1), quaternion(),
          defigueiredo(2, 2), split_laplacian(2, 1), quadratic_collection(2, 1),
          hyperbolic_example(), strange_r4()};
}

bool certified_status(CancelStatus s) { return s != CancelStatus::NotCancelingSampled; }

void catalog_regression(Line& line) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t verdicts = 0;
  std::set<std::string> names;
  for (const auto& x : expectations()) {
    const CatalogItem item = catalog_from_query(x.query);
    names.insert(item.name);
    if (x.cocanceling) {
      const CocancelingVerdict v = check_cocanceling(item.op);
      line.require(v.cocanceling == *x.cocanceling, x.query + " cocanceling");
      ++verdicts;
      if (x.identity_kernel) {
        const std::size_t n = item.op.n();
        QVector id(n * n);
        for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
        line.require(v.joint_kernel == Subspace::span(n * n, {id}), x.query + " joint kernel != span{Id}");
        ++verdicts;
      }
    }
    if (x.elliptic) {
      const EllipticityVerdict e = check_ellipticity(item.op);
      line.require(e.status == (*x.elliptic ? EllipticStatus::Elliptic : EllipticStatus::NotElliptic),
                   x.query + " ellipticity " + to_string(e.status));
      ++verdicts;
      if (x.canceling) {
        const CancelingVerdict c = check_canceling(item.op, e.status == EllipticStatus::Elliptic);
        line.require(certified_status(c.status) && (c.status == CancelStatus::Canceling) == *x.canceling,
                     x.query + " canceling " + to_string(c.status));
        ++verdicts;
      }
    }
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  line.require(s < 60, "runtime over 60 s");
  line.detail << (line.ok ? "" : "; ") << names.size() << " catalog entries, " << expectations().size() << " instances, " << verdicts
              << " verdicts";
}

void certificate_soundness(Line& line) {
  std::size_t reports = 0, checks = 0;
  AnalyzeOptions opts;
  opts.timings = false;
  for (const auto& x : expectations()) {
    const OperatorFile f = load_operator("catalog:" + x.query);
    const Outcome out = analyze(f, opts);
    const VerifyTranscript t = verify_report(out.report);
    for (const auto& c : t.checks) {
      line.require(c.ok, x.query + ": " + c.name);
      line.require(c.certificate, x.query + ": uncertified " + c.name);
    }
    checks += t.checks.size();
    ++reports;
  }
  line.detail << (line.ok ? "" : "; ") << reports << " reports, " << checks << " exact checks";
}

void equivalences(Line& line) {
  std::size_t bb = 0, li = 0, ann = 0;
  for (const auto& x : expectations()) {
    const CatalogItem item = catalog_from_query(x.query);
    const SymbolOperator& a = item.op;
    if (item.role == Role::Constraint) {
      const CocancelingVerdict v = check_cocanceling(a);
      const auto k = left_inverses(a);
      line.require(v.cocanceling == k.has_value(), x.query + " left inverse existence");
      if (k) {
        QMatrix total(a.dim_v(), a.dim_v());
        for (const auto& [alpha, m] : a.terms()) total = total + k->at(alpha) * m;
        line.require(total == QMatrix::identity(a.dim_v()), x.query + " sum K L != Id");
      }
      ++li;
      continue;
    }
    const bool elliptic = check_ellipticity(a).status == EllipticStatus::Elliptic;
    const CancelingVerdict c = check_canceling(a, elliptic);
    const SpanningVerdict s = check_bb_spanning(a, elliptic);
    if (certified_status(c.status) && s.status != SpanStatus::DoesNotSpanSampled) {
      line.require((c.status == CancelStatus::Canceling) == (s.status == SpanStatus::Spans), x.query + " bb");
      ++bb;
    }
    if (elliptic) {
      const AnnihilatorResult r = build_annihilator(a);
      line.require(check_cocanceling(r.l).cocanceling == (c.status == CancelStatus::Canceling),
                   x.query + " annihilator cocancellation");
      ++ann;
    }
  }
  line.detail << bb << " spanning pairs, " << li << " constraints, " << ann << " annihilators";
}

void invariance(Line& line) {
  gen::Source g(20240);
  const auto base = property_operators();
  std::size_t compared = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    const SymbolOperator& a = base[static_cast<std::size_t>(t) % base.size()];
    const SymbolOperator b = a.composed(g.invertible(a.dim_e()), g.invertible(a.dim_v()));
    const SymbolOperator s = a.scaled(g.nonzero_rational());
    const EllipticityVerdict ea = check_ellipticity(a), eb = check_ellipticity(b), es = check_ellipticity(s);
    if (eb.status != EllipticStatus::Undecided) line.require(ea.status == eb.status, "basis change: ellipticity");
    line.require(ea.status == es.status, "scaling: ellipticity");
    const bool elliptic = ea.status == EllipticStatus::Elliptic;
    const CancelingVerdict ca = check_canceling(a, elliptic, {1, 2});
    for (const SymbolOperator* other : {&b, &s}) {
      const CancelingVerdict co = check_canceling(*other, elliptic, {static_cast<std::uint64_t>(t + 2), 2});
      if (certified_status(ca.status) && certified_status(co.status)) {
        line.require(ca.status == co.status, "canceling verdict changed");
        ++compared;
      }
    }
  }
  line.detail << gen::kTrials << " basis/scaling trials (" << compared << " certified pairs)";

  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t dv = static_cast<std::size_t>(g.integer(1, 2));
    SymbolOperator a = gen::random_operator(g, n, dv, static_cast<std::size_t>(g.integer(dv, 3)),
                                            static_cast<unsigned>(g.integer(1, 2)));
    if (t % 2 == 0) a = base[static_cast<std::size_t>(t / 2) % base.size()];
    const bool elliptic = check_ellipticity(a).status == EllipticStatus::Elliptic;
    const CancelingVerdict c = check_canceling(a, elliptic, {static_cast<std::uint64_t>(t + 1), 2});
    for (std::size_t i = 1; i < c.dim_history.size(); ++i)
      line.require(c.dim_history[i] <= c.dim_history[i - 1], "intersection dimension grew");
    line.require(c.samples.size() == c.dim_history.size(), "history out of step with samples");
    line.require(c.dim_history.back() == c.intersection.dim(), "final dimension mismatch");
  }
  line.detail << ", " << gen::kTrials << " shrink trials";

  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t amb = static_cast<std::size_t>(g.integer(1, 6));
    const QMatrix gens = g.low_rank(amb, static_cast<std::size_t>(g.integer(1, 6)),
                                    static_cast<std::size_t>(g.integer(1, static_cast<long>(amb))));
    const Subspace s = Subspace::span(gens);
    const Subspace again = Subspace::span(s.basis());
    line.require(again == s && again.basis() == s.basis(), "canonical basis not idempotent");
    const Subspace mixed = Subspace::span(s.dim() ? s.basis() * g.invertible(s.dim()) : s.basis());
    line.require(mixed.basis() == s.basis(), "canonical basis depends on generators");
  }
  line.detail << ", " << gen::kTrials << " canonicalization trials";
}

void numlab_sanity(Line& line) {
  gen::Source src(777);
  double parseval = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    const GridSpec g{static_cast<std::size_t>(src.integer(1, 3)), 16, src.real(0.5, 6)};
    GridField f(g, 1);
    for (auto& v : f.values) v = src.real(-1, 1);
    Fft fft(g);
    const Spectrum s = fft.forward(f);
    double phys = 0, spec = 0;
    for (double v : f.values) phys += v * v;
    for (const auto& z : s[0]) spec += std::norm(z);
    parseval = std::max(parseval, rel(spec / static_cast<double>(g.size()), phys));
  }
  line.require(parseval < 1e-10, "Parseval");

  const std::vector<SymbolOperator> ops = {gradient(3), laplacian(3), hodge_pair(3, 1), sym_gradient_sk(3, 2),
                                           divergence(3)};
  const GridSpec g{3, 8, 2.0};
  double modes = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    const SymbolOperator& a = ops[static_cast<std::size_t>(t) % ops.size()];
    std::size_t idx[3];
    for (auto& j : idx) j = static_cast<std::size_t>(src.integer(0, 7));
    const std::size_t flat = (idx[0] * 8 + idx[1]) * 8 + idx[2];
    QVector xi(3);
    for (std::size_t i = 0; i < 3; ++i) xi[i] = Rational(g.wrapped(idx[i]), 2);
    Spectrum s(a.dim_v(), std::vector<std::complex<double>>(g.size()));
    std::vector<double> v(a.dim_v());
    for (std::size_t c = 0; c < a.dim_v(); ++c) s[c][flat] = v[c] = src.real(-1, 1);
    const Spectrum out = apply_symbol(a, s, g);
    const QMatrix exact = a.evaluate(xi);
    const auto factor = std::pow(std::complex<double>(0, 2 * kPi), static_cast<int>(a.order()));
    double err = 0, scale = 1;
    for (std::size_t r = 0; r < a.dim_e(); ++r) {
      std::complex<double> want = 0;
      for (std::size_t c = 0; c < a.dim_v(); ++c) want += exact(r, c).get_d() * v[c];
      want *= factor;
      err = std::max(err, std::abs(out[r][flat] - want));
      scale = std::max(scale, std::abs(want));
    }
    modes = std::max(modes, err / scale);
  }
  line.require(modes < 1e-9, "pure modes");

  double lorentz = 0;
  for (int t = 0; t < gen::kTrials; ++t) {
    const GridSpec lg{static_cast<std::size_t>(src.integer(1, 2)), 16, src.real(0.5, 4)};
    GridField u(lg, static_cast<std::size_t>(src.integer(1, 3)));
    for (auto& v : u.values) v = src.real(-1, 1);
    const double p = src.real(1, 4);
    lorentz = std::max(lorentz, rel(lorentz_norm(u, p, p), lp_norm(u, p)));
  }
  line.require(lorentz < 1e-12, "Lorentz");

  double worst = 0;
  std::size_t runs = 0;
  for (const auto& [table, n] : {std::pair{presets::laplacian_blowup(false), std::size_t{2}},
                                  {presets::hodge_blowup(false), std::size_t{3}}}) {
    for (double au : table.column("au_l1")) {
      worst = std::max(worst, au / (2 * cutoff_l1_norm(n)));
      ++runs;
    }
  }
  line.require(worst <= 1 + kBlowupBoundSlack, "L1 bound");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "Parseval %.1e, modes %.1e, L^{p,p}/L^p %.1e, max ||A(D)u||_1 / 2||psi||_1 = %.3f over %zu runs",
                parseval, modes, lorentz, worst, runs);
  if (line.ok) line.detail << buf;
}

void blowup(Line& line, const nlohmann::json& o) {
  const ExperimentTable lap = presets::laplacian_blowup();
  const auto r = lap.column("ratio");
  for (std::size_t i = 1; i < r.size(); ++i) line.require(r[i] > r[i - 1], "R not increasing");
  const double growth = r.back() / r.front(), pinned = o["pinned"]["blowup_growth_min"];
  line.require(growth > pinned, "growth below the pinned factor");
  line.require(lap.converged, "Laplacian run unconverged");

  const auto c = presets::gradient_control().column("ratio");
  double mean = 0, lo = c[0], hi = c[0];
  for (double v : c) {
    mean += v / static_cast<double>(c.size());
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double dev = 0;
  for (double v : c) dev = std::max(dev, std::abs(v - mean) / mean);
  line.require(dev < o["pinned"]["control_band"].get<double>(), "control outside its band");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "R = %.4f %.4f %.4f %.4f, R(32)/R(4) = %.3f > %.2f; control max deviation from mean %.1f%% < 20%%, "
                "max/min %.3f",
                r[0], r[1], r[2], r[3], growth, pinned, 100 * dev, hi / lo);
  if (line.ok) line.detail << buf;
}

void inequalities(Line& line, const nlohmann::json& o) {
  const double tol = o["pinned"]["stability_tolerance"];
  double worst = 0;
  for (const auto& t : {presets::gns_resolution(), presets::korn(), presets::solonnikov(), presets::strange()}) {
    for (double v : t.column("ratio")) line.require(std::isfinite(v) && v > 0, t.name + " ratio not finite");
    for (double v : t.column("rel_change")) {
      line.require(v < tol, t.name + " unstable under refinement");
      worst = std::max(worst, v);
    }
    for (double v : t.column("tail")) line.require(v < kTailTolerance, t.name + " tail");
  }
  const ExperimentTable gns = presets::gns_disc();
  const auto rg = gns.column("ratio");
  const double limit = 1 / (2 * std::sqrt(kPi)), gap = rel(rg.back(), limit);
  line.require(gap < o["pinned"]["gns_tolerance"].get<double>(), "GNS disc too far from 1/(2 sqrt pi)");
  const auto rn = presets::newton().column("ratio");
  for (std::size_t i = 1; i < rn.size(); ++i) line.require(rn[i] > rn[i - 1], "Newton ratio not increasing");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "max change under doubling %.2f%%; disc %.5f vs %.5f (%.1f%%); Newton %.4f %.4f %.4f", 100 * worst,
                rg.back(), limit, 100 * gap, rn[0], rn[1], rn[2]);
  if (line.ok) line.detail << buf;
}

void necessity(Line& line, const nlohmann::json& o) {
  const double tol = o["pinned"]["scale_tolerance"];
  const ExperimentTable g = presets::necessity_gaussian();
  const auto scale = g.column("dphi_scale"), expected = g.column("expected_scale"), ratio = g.column("ratio");
  double worst = 0, growth_err = 0;
  for (std::size_t i = 0; i < scale.size(); ++i) {
    worst = std::max(worst, rel(scale[i], expected[i]));
    growth_err = std::max(growth_err, rel(ratio[i] * expected[i], ratio[0]));
  }
  for (std::size_t i = 1; i < ratio.size(); ++i) line.require(ratio[i] > ratio[i - 1], "ratio does not grow");
  line.require(worst < tol, "denominator scaling off");
  line.require(growth_err < tol, "ratio growth off");
  const auto z = presets::necessity_mean_zero().column("ratio");
  for (std::size_t i = 1; i < z.size(); ++i) line.require(z[i] <= z[0], "mean-zero ratio not bounded");
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "scaling error %.1e, growth error %.1e (< %.0f%%); ratio %.3f -> %.3f; mean-zero %.2e -> %.2e",
                worst, growth_err, 100 * tol, ratio.front(), ratio.back(), z.front(), z.back());
  if (line.ok) line.detail << buf;
}

}  // namespace

int main() {
  const nlohmann::json o = oracle();
  report("catalog regression", catalog_regression);
  report("certificate soundness", certificate_soundness);
  report("equivalence properties", equivalences);
  report("invariance properties", invariance);
  report("numerical lab sanity", numlab_sanity);
  report("blow-up divergence vs boundedness", [&](Line& l) { blowup(l, o); });
  report("inequality ratio stability", [&](Line& l) { inequalities(l, o); });
  report("necessity experiments", [&](Line& l) { necessity(l, o); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
