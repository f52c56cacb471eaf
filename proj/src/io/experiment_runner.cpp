#include "io/experiment_runner.hpp"
#include <set>

#include "core/error.hpp"
#include "deciders/deciders.hpp"
#include "io/report.hpp"
#include "numlab/presets.hpp"

namespace symcan {

namespace {

GridSpec default_blowup_grid(std::size_t n) {
  switch (n) {
    case 1: return {1, 4096, 8.0};
    case 2: return presets::blowup_grid();
    case 3: return {3, 64, 4.0};
    default: return {4, 16, 4.0};
  }
}

std::vector<double> default_blowup_lambdas(const GridSpec& g) {
  if (g.n == 2) return presets::blowup_lambdas();
  const double top = g.nyquist() / 2;
  return {top * 0.625, top * 0.75, top * 0.875, top};
}

GridSpec with_override(GridSpec g, const ExperimentRequest& req) {
  if (req.grid) {
    g.points = req.grid->first;
    g.side = req.grid->second;
  }
  g.validate();
  return g;
}

ojson grid_json(const GridSpec& g) { return {{"n", g.n}, {"N", g.points}, {"T", g.side}}; }

ojson operator_ref(const OperatorFile& f) {
  return {{"source", f.source}, {"digest", digest(operator_to_json(f.op, f.t))}};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentRequest& req) {
  ExperimentResult out;
  ojson& m = out.manifest;
  m["tool"] = {{"name", "symcan"}, {"version", kVersion}};
  m["kind"] = req.kind;
  m["seed"] = req.seed;
  ojson params;

  if (req.kind == "blowup") {
    if (!req.op) fail(ErrorCode::Validation, "blowup needs an operator");
    const OperatorFile f = load_operator(*req.op);
    const SymbolOperator& a = f.op;
    if (a.n() > 4) fail(ErrorCode::Domain, "numerical experiments support n <= 4");
    QVector e;
    if (req.e) {
      e = *req.e;
    } else {
      if (check_ellipticity(a).status != EllipticStatus::Elliptic)
        fail(ErrorCode::Domain, "blow-up needs a certified elliptic operator");
      const CancelingVerdict v = check_canceling(a, true, {req.seed, 0});
      if (v.intersection.is_zero()) fail(ErrorCode::Domain, "operator is canceling: the intersection of images is {0}");
      e = v.intersection.basis_vector(0);
    }
    const unsigned ell = req.ell.value_or(a.order() == 1 ? 0u : 1u);
    const GridSpec g = with_override(default_blowup_grid(a.n()), req);
    const std::vector<double> lambdas = req.lambdas.empty() ? default_blowup_lambdas(g) : req.lambdas;
    m["operator"] = operator_ref(f);
    if (req.control) {
      const OperatorFile b = load_operator(*req.control);
      out.table = family_ratio_experiment(a, e, b.op, ell, lambdas, g, req.refine);
      out.table.name = "blowup_control";
      params["control"] = operator_ref(b);
    } else {
      out.table = blowup_ratio_experiment(a, e, ell, lambdas, g, req.refine);
    }
    m["grid"] = grid_json(g);
    m["profile"] = {{"psi_hat", "radial, 1 on |xi|<=1/2, 0 on |xi|>=2, exp(-1/t) transition"},
                    {"psi_l1", cutoff_l1_norm(a.n())}};
    params["e"] = to_json(e);
    params["ell"] = ell;
    params["lambda"] = lambdas;
    params["refine"] = req.refine;
  } else if (req.kind == "inequality") {
    static const std::map<std::string, ExperimentTable (*)()> table = {
        {"gns_disc", presets::gns_disc}, {"korn", presets::korn}, {"solonnikov", presets::solonnikov},
        {"strange", presets::strange},   {"newton", presets::newton}};
    auto it = table.find(req.preset);
    if (it == table.end())
      fail(ErrorCode::Validation, "unknown inequality preset '" + req.preset + "' (gns_disc, korn, solonnikov, strange, newton)");
    if (req.grid) fail(ErrorCode::Validation, "inequality presets fix their own grids");
    out.table = it->second();
    params["preset"] = req.preset;
  } else if (req.kind == "necessity" || req.kind == "duality") {
    const GridSpec g = with_override(presets::necessity_grid(), req);
    const std::vector<double> lambdas = req.lambdas.empty() ? presets::necessity_lambdas() : req.lambdas;
    m["grid"] = grid_json(g);
    if (req.kind == "necessity") {
      GridField f;
      if (req.field.empty() || req.field == "gaussian") f = fields::gaussian(g, 0.3, {}, true);
      else if (req.field == "mean-zero") f = fields::gaussian_derivative(g, 0.3, {0.5, 0.0});
      else fail(ErrorCode::Validation, "necessity field must be gaussian or mean-zero");
      out.table = necessity_experiment(f, lambdas);
    } else {
      const OperatorFile l = load_operator(req.op.value_or("catalog:divergence?n=2"));
      if (l.op.n() != 2 || l.op.dim_v() != 2) fail(ErrorCode::Shape, "duality fields are planar vector fields");
      GridField f;
      if (req.field.empty() || req.field == "curl-potential") f = fields::curl_potential(g, 0.3, {0.5, 0.0});
      else if (req.field == "generic") f = fields::vector_gaussian(g, 2, 0.3);
      else fail(ErrorCode::Validation, "duality field must be curl-potential or generic");
      out.table = necessity_experiment(f, lambdas, &l.op);
      out.table.name = "duality";
      m["operator"] = operator_ref(l);
    }
    m["profile"] = {{"phi", "psi(|x|^lambda), psi = 1 on [0,1], 0 on [2,inf), exp(-1/t) transition"}};
    params["field"] = req.field.empty() ? (req.kind == "necessity" ? "gaussian" : "curl-potential") : req.field;
    params["lambda"] = lambdas;
  } else {
    fail(ErrorCode::Validation, "unknown experiment kind '" + req.kind + "' (blowup, inequality, necessity, duality)");
  }
  m["parameters"] = std::move(params);
  m["columns"] = out.table.columns;
  m["converged"] = out.table.converged;
  m["notes"] = out.table.notes;
  m["table_digest"] = digest(ojson(out.table.csv()));
  return out;
}

ExperimentRequest request_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail(ErrorCode::Validation, "experiment parameters must be an object");
  static const std::set<std::string> known = {"kind", "op", "control", "e", "ell", "lambda", "grid", "field", "preset", "refine", "seed"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) fail(ErrorCode::Validation, "unknown experiment parameter '" + k + "'");
  ExperimentRequest r;
  try {
    r.kind = j.at("kind").get<std::string>();
    if (j.contains("op")) r.op = j["op"].get<std::string>();
    if (j.contains("control")) r.control = j["control"].get<std::string>();
    if (j.contains("e")) r.e = qvector_from_json(j["e"]);
    if (j.contains("ell")) r.ell = j["ell"].get<unsigned>();
    if (j.contains("lambda")) r.lambdas = j["lambda"].get<std::vector<double>>();
    if (j.contains("grid")) r.grid = {j["grid"].at(0).get<std::size_t>(), j["grid"].at(1).get<double>()};
    if (j.contains("field")) r.field = j["field"].get<std::string>();
    if (j.contains("preset")) r.preset = j["preset"].get<std::string>();
    if (j.contains("refine")) r.refine = j["refine"].get<bool>();
    if (j.contains("seed")) r.seed = j["seed"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Validation, std::string("bad experiment parameters: ") + e.what());
  }
  return r;
}

}  // namespace symcan
