#include "symcan/symcan.h"

#include <cstring>
#include <string>

#include "catalog/catalog.hpp"
#include "core/error.hpp"
#include "io/experiment_runner.hpp"
#include "io/report.hpp"
#include "verify/verify.hpp"

struct symcan_operator {
  symcan::OperatorFile file;
};

namespace {

thread_local std::string last_error;

symcan_status status_of(symcan::ErrorCode c) {
  switch (c) {
    case symcan::ErrorCode::Parse: return SYMCAN_ERR_PARSE;
    case symcan::ErrorCode::Validation: return SYMCAN_ERR_VALIDATION;
    case symcan::ErrorCode::Shape: return SYMCAN_ERR_SHAPE;
    case symcan::ErrorCode::Domain: return SYMCAN_ERR_DOMAIN;
    case symcan::ErrorCode::Budget: return SYMCAN_ERR_BUDGET;
    case symcan::ErrorCode::Internal: return SYMCAN_ERR_INTERNAL;
  }
  return SYMCAN_ERR_INTERNAL;
}

template <typename F>
symcan_status guarded(F&& f) {
  try {
    last_error.clear();
    f();
    return SYMCAN_OK;
  } catch (const symcan::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = e.what();
    return SYMCAN_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return SYMCAN_ERR_BUDGET;
  } catch (const std::exception& e) {
    last_error = e.what();
    return SYMCAN_ERR_INTERNAL;
  }
}

symcan_status argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return SYMCAN_ERR_ARGUMENT;
}

char* copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* symcan_version(void) { return symcan::kVersion; }

const char* symcan_status_name(symcan_status s) {
  switch (s) {
    case SYMCAN_OK: return "ok";
    case SYMCAN_ERR_PARSE: return "parse error";
    case SYMCAN_ERR_VALIDATION: return "validation error";
    case SYMCAN_ERR_SHAPE: return "shape error";
    case SYMCAN_ERR_DOMAIN: return "domain error";
    case SYMCAN_ERR_BUDGET: return "budget exceeded";
    case SYMCAN_ERR_INTERNAL: return "internal error";
    case SYMCAN_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown status";
}

const char* symcan_last_error(void) { return last_error.c_str(); }

void symcan_free(char* text) { std::free(text); }

symcan_status symcan_operator_load(const char* spec, symcan_operator** out) {
  if (!spec || !out) return argument("spec/out");
  return guarded([&] { *out = new symcan_operator{symcan::load_operator(spec)}; });
}

symcan_status symcan_operator_parse(const char* json_text, const char* source_name, symcan_operator** out) {
  if (!json_text || !out) return argument("json_text/out");
  return guarded([&] {
    *out = new symcan_operator{symcan::parse_operator_json(json_text, source_name ? source_name : "<input>")};
  });
}

void symcan_operator_free(symcan_operator* op) { delete op; }

symcan_status symcan_operator_shape(const symcan_operator* op, size_t* n, size_t* dim_v, size_t* dim_e,
                                    unsigned* order) {
  if (!op) return argument("op");
  if (n) *n = op->file.op.n();
  if (dim_v) *dim_v = op->file.op.dim_v();
  if (dim_e) *dim_e = op->file.op.dim_e();
  if (order) *order = op->file.op.order();
  return SYMCAN_OK;
}

symcan_status symcan_operator_json(const symcan_operator* op, char** out) {
  if (!op || !out) return argument("op/out");
  return guarded([&] { *out = copy(symcan::operator_to_json(op->file.op, op->file.t).dump(2)); });
}

void symcan_analyze_options_init(symcan_analyze_options* opts) {
  if (!opts) return;
  const symcan::AnalyzeOptions d;
  opts->seed = d.seed;
  opts->max_depth = d.max_depth;
  opts->box_budget = d.box_budget;
  opts->role = SYMCAN_ROLE_DEFAULT;
  opts->include_timings = 1;
}

symcan_status symcan_analyze(const symcan_operator* op, const symcan_analyze_options* opts, char** report,
                             int* certified) {
  if (!op || !report) return argument("op/report");
  symcan::AnalyzeOptions o;
  if (opts) {
    if (opts->max_depth == 0 || opts->box_budget == 0) {
      last_error = "max_depth and box_budget must be positive";
      return SYMCAN_ERR_ARGUMENT;
    }
    o.seed = opts->seed;
    o.max_depth = opts->max_depth;
    o.box_budget = opts->box_budget;
    o.timings = opts->include_timings != 0;
    if (opts->role == SYMCAN_ROLE_OPERATOR) o.as = symcan::Role::Operator;
    if (opts->role == SYMCAN_ROLE_CONSTRAINT) o.as = symcan::Role::Constraint;
  }
  return guarded([&] {
    symcan::Outcome r = symcan::analyze(op->file, o);
    *report = copy(r.report.dump(2));
    if (certified) *certified = r.certified ? 1 : 0;
  });
}

symcan_status symcan_compat(const symcan_operator* op, uint64_t seed, char** report, int* identity_holds,
                            int* kernels_match) {
  if (!op || !report) return argument("op/report");
  return guarded([&] {
    symcan::CompatOptions o;
    o.seed = seed;
    symcan::CompatOutcome r = symcan::compat(op->file, o);
    *report = copy(r.report.dump(2));
    if (identity_holds) *identity_holds = r.identity_holds ? 1 : 0;
    if (kernels_match) *kernels_match = r.kernels_match ? 1 : 0;
  });
}

symcan_status symcan_verify(const char* report_json, char** transcript, int* all_ok) {
  if (!report_json || !transcript) return argument("report_json/transcript");
  return guarded([&] {
    nlohmann::json report;
    try {
      report = nlohmann::json::parse(report_json);
    } catch (const nlohmann::json::parse_error& e) {
      symcan::fail(symcan::ErrorCode::Parse, std::string("report is not JSON: ") + e.what());
    }
    symcan::VerifyTranscript t = symcan::verify_report(report);
    *transcript = copy(t.to_json().dump(2));
    if (all_ok) *all_ok = t.all_ok() ? 1 : 0;
  });
}

symcan_status symcan_experiment(const char* request_json, char** csv, char** manifest, int* converged) {
  if (!request_json || !csv || !manifest) return argument("request_json/csv/manifest");
  return guarded([&] {
    nlohmann::json req;
    try {
      req = nlohmann::json::parse(request_json);
    } catch (const nlohmann::json::parse_error& e) {
      symcan::fail(symcan::ErrorCode::Parse, std::string("request is not JSON: ") + e.what());
    }
    symcan::ExperimentResult r = symcan::run_experiment(symcan::request_from_json(req));
    *csv = copy(r.table.csv());
    try {
      *manifest = copy(r.manifest.dump(2));
    } catch (...) {
      symcan_free(*csv);
      *csv = nullptr;
      throw;
    }
    if (converged) *converged = r.table.converged ? 1 : 0;
  });
}

symcan_status symcan_catalog_list(char** json) {
  if (!json) return argument("json");
  return guarded([&] {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& e : symcan::catalog_entries()) {
      nlohmann::ordered_json params = nlohmann::ordered_json::array();
      for (const auto& p : e.params)
        params.push_back({{"name", p.name}, {"default", p.default_value}, {"min", p.min_value}, {"max", p.max_value}});
      list.push_back({{"name", e.name},
                      {"role", e.role == symcan::Role::Operator ? "operator" : "constraint"},
                      {"params", params},
                      {"summary", e.summary}});
    }
    *json = copy(list.dump(2));
  });
}

}  // extern "C"
