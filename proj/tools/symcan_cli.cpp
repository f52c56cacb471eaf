// Command line front end; everything goes through the C API.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symcan/symcan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;
constexpr int kExitUncertified = 3;

using json = nlohmann::ordered_json;

struct Text {
  char* p = nullptr;
  ~Text() { symcan_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct OperatorHandle {
  symcan_operator* p = nullptr;
  ~OperatorHandle() { symcan_operator_free(p); }
};

int report_error(symcan_status s) {
  std::cerr << "symcan: " << symcan_status_name(s) << ": " << symcan_last_error() << "\n";
  return s == SYMCAN_ERR_INTERNAL ? kExitFailed : kExitInput;
}

bool write_out(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!text.empty() && text.back() != '\n') out << "\n";
  if (!out) {
    std::cerr << "symcan: cannot write " << path << "\n";
    return false;
  }
  return true;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string vector_text(const json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get<std::string>();
  return s + ")";
}

void print_analysis(const json& r) {
  const json& op = r["operator"];
  std::cout << "input        " << r["input"]["source"].get<std::string>() << "  (n=" << op["n"] << ", dimV=" << op["dimV"]
            << ", dimE=" << op["dimE"] << ", order=" << op["order"] << ")\n";
  std::cout << "mode         " << r["mode"].get<std::string>() << "\n";
  const json& certs = r["certificates"];
  for (const auto& [name, verdict] : r["verdicts"].items()) {
    std::printf("%-12s %s", name.c_str(), verdict.get<std::string>().c_str());
    const json& c = certs[name];
    if (name == "ellipticity") {
      if (c.contains("cover")) std::printf("  [cover of %zu boxes]", c["cover"].size());
      if (c.contains("direction"))
        std::printf("  [A(xi) v = 0 at xi=%s]", vector_text(c["direction"]).c_str());
    } else if (c.contains("witness")) {
      std::printf("  [witness e=%s]", vector_text(c["witness"]).c_str());
    } else if (c.contains("samples")) {
      std::printf("  [%zu sampled directions]", c["samples"].size());
    }
    if (name == "cocanceling") {
      std::printf("  [joint kernel dim %zu]", c["joint_kernel"].size());
      if (c.contains("left_inverses")) std::printf("  [left inverses for %zu terms]", c["left_inverses"].size());
    }
    std::printf("\n");
  }
  if (r.contains("annihilator_digest") && !r["annihilator_digest"].is_null())
    std::cout << "annihilator  digest " << r["annihilator_digest"].get<std::string>() << "\n";
  std::cout << "certified    " << (r["certified"].get<bool>() ? "yes" : "no") << "\n";
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stod(item, &used));
    if (used != item.size()) throw std::invalid_argument(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symcan: exact symbol analysis of constant-coefficient differential operators"};
  app.set_version_flag("--version", std::string(symcan_version()));
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string json_out, csv_out, input;

  auto* analyze = app.add_subcommand("analyze", "run the deciders on an operator");
  unsigned depth = 24;
  std::uint64_t budget = 200000;
  std::string as;
  bool no_timings = false;
  analyze->add_option("input", input, "catalog:name?k=v or operator JSON file")->required();
  analyze->add_option("--seed", seed, "sampling seed");
  analyze->add_option("--depth", depth, "maximum subdivision depth")->check(CLI::Range(1u, 64u));
  analyze->add_option("--box-budget", budget, "maximum boxes examined")->check(CLI::PositiveNumber);
  analyze->add_option("--as", as, "operator or constraint")->check(CLI::IsMember({"operator", "constraint"}));
  analyze->add_flag("--no-timings", no_timings, "omit timing fields from the report");
  analyze->add_option("--json", json_out, "write the report to a file (- for stdout)");

  auto* compat = app.add_subcommand("compat", "build and check the compatibility annihilator");
  compat->add_option("input", input, "catalog:name?k=v or operator JSON file")->required();
  compat->add_option("--seed", seed, "sampling seed");
  compat->add_option("--json", json_out, "write the annihilator report to a file (- for stdout)");

  auto* verify = app.add_subcommand("verify", "re-check the certificates of an analysis report");
  verify->add_option("report", input, "report JSON file (- for stdin)")->required();
  verify->add_option("--json", json_out, "write the transcript to a file (- for stdout)");

  auto* experiment = app.add_subcommand("experiment", "run a numerical experiment");
  std::string kind, op, control, e, lambda, grid, field, preset;
  int ell = -1;
  bool no_refine = false;
  experiment->add_option("kind", kind, "blowup, inequality, necessity or duality")
      ->required()
      ->check(CLI::IsMember({"blowup", "inequality", "necessity", "duality"}));
  experiment->add_option("--op", op, "operator (blowup: A, duality: constraint L)");
  experiment->add_option("--control", control, "blowup: B for ||D^l u|| / ||B(D) u||_1");
  experiment->add_option("--e", e, "blowup target vector, comma separated rationals");
  experiment->add_option("--ell", ell, "derivative order l")->check(CLI::NonNegativeNumber);
  experiment->add_option("--lambda", lambda, "comma separated lambda schedule");
  experiment->add_option("--grid", grid, "N,T");
  experiment->add_option("--field", field, "necessity: gaussian|mean-zero, duality: curl-potential|generic");
  experiment->add_option("--preset", preset, "inequality: gns_disc|korn|solonnikov|strange|newton");
  experiment->add_flag("--no-refine", no_refine, "skip the doubled-resolution rerun");
  experiment->add_option("--seed", seed, "seed recorded in the manifest");
  experiment->add_option("--csv", csv_out, "write the table to a file (- for stdout)");
  experiment->add_option("--json", json_out, "write the run manifest to a file (- for stdout)");

  auto* catalog = app.add_subcommand("catalog", "list built-in operators");
  catalog->add_option("--json", json_out, "write the list to a file (- for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (*analyze || *compat) {
    OperatorHandle h;
    if (symcan_status s = symcan_operator_load(input.c_str(), &h.p); s != SYMCAN_OK) return report_error(s);
    if (*analyze) {
      symcan_analyze_options o;
      symcan_analyze_options_init(&o);
      o.seed = seed;
      o.max_depth = depth;
      o.box_budget = budget;
      o.include_timings = no_timings ? 0 : 1;
      if (as == "operator") o.role = SYMCAN_ROLE_OPERATOR;
      if (as == "constraint") o.role = SYMCAN_ROLE_CONSTRAINT;
      Text report;
      int certified = 0;
      if (symcan_status s = symcan_analyze(h.p, &o, &report.p, &certified); s != SYMCAN_OK) return report_error(s);
      if (json_out != "-") print_analysis(json::parse(report.str()));
      if (!json_out.empty() && !write_out(json_out, report.str())) return kExitFailed;
      return certified ? kExitOk : kExitUncertified;
    }
    Text report;
    int identity = 0, kernels = 0;
    if (symcan_status s = symcan_compat(h.p, seed, &report.p, &identity, &kernels); s != SYMCAN_OK)
      return report_error(s);
    if (json_out != "-") {
      const json r = json::parse(report.str());
      std::cout << "input             " << r["input"]["source"].get<std::string>() << "\n";
      std::cout << "annihilator       " << r["annihilator"]["dimE"] << " x " << r["annihilator"]["dimV"] << ", order "
                << r["annihilator"]["order"] << (r["annihilator_zero"].get<bool>() ? ", identically zero" : "") << "\n";
      std::cout << "identity L A = 0  " << (identity ? "pass" : "FAIL") << "\n";
      std::cout << "ker L = im A      " << (kernels ? "pass" : "FAIL") << " at " << r["sampled_kernel_checks"].size()
                << " sampled directions\n";
    }
    if (!json_out.empty() && !write_out(json_out, report.str())) return kExitFailed;
    return identity && kernels ? kExitOk : kExitUncertified;
  }

  if (*verify) {
    const std::string text = read_all(input);
    if (text.empty()) {
      std::cerr << "symcan: cannot read " << input << "\n";
      return kExitInput;
    }
    Text transcript;
    int ok = 0;
    if (symcan_status s = symcan_verify(text.c_str(), &transcript.p, &ok); s != SYMCAN_OK) return report_error(s);
    if (json_out != "-") {
      const json t = json::parse(transcript.str());
      for (const auto& c : t["checks"]) {
        std::cout << (c["ok"].get<bool>() ? "PASS  " : "FAIL  ") << c["check"].get<std::string>();
        if (c.contains("detail")) std::cout << "  (" << c["detail"].get<std::string>() << ")";
        std::cout << "\n";
      }
    }
    if (!json_out.empty() && !write_out(json_out, transcript.str())) return kExitFailed;
    return ok ? kExitOk : kExitFailed;
  }

  if (*experiment) {
    json req;
    req["kind"] = kind;
    req["seed"] = seed;
    try {
      if (!op.empty()) req["op"] = op;
      if (!control.empty()) req["control"] = control;
      if (!e.empty()) {
        json v = json::array();
        std::stringstream ss(e);
        std::string item;
        while (std::getline(ss, item, ',')) v.push_back(item);
        req["e"] = v;
      }
      if (ell >= 0) req["ell"] = ell;
      if (!lambda.empty()) req["lambda"] = parse_list(lambda);
      if (!grid.empty()) {
        const auto g = parse_list(grid);
        if (g.size() != 2 || g[0] < 1 || g[0] != static_cast<double>(static_cast<long>(g[0])))
          throw std::invalid_argument(grid);
        req["grid"] = {static_cast<long>(g[0]), g[1]};
      }
    } catch (const std::exception&) {
      std::cerr << "symcan: malformed numeric list\n";
      return kExitInput;
    }
    if (!field.empty()) req["field"] = field;
    if (!preset.empty()) req["preset"] = preset;
    if (no_refine) req["refine"] = false;
    Text csv, manifest;
    int converged = 0;
    if (symcan_status s = symcan_experiment(req.dump().c_str(), &csv.p, &manifest.p, &converged); s != SYMCAN_OK)
      return report_error(s);
    if (csv_out.empty() && json_out != "-") std::cout << csv.str();
    if (!csv_out.empty() && !write_out(csv_out, csv.str())) return kExitFailed;
    if (!json_out.empty() && !write_out(json_out, manifest.str())) return kExitFailed;
    const json m = json::parse(manifest.str());
    for (const auto& note : m["notes"]) std::cerr << "note: " << note.get<std::string>() << "\n";
    if (!converged) std::cerr << "warning: run flagged unconverged\n";
    return converged ? kExitOk : kExitUncertified;
  }

  Text list;
  if (symcan_status s = symcan_catalog_list(&list.p); s != SYMCAN_OK) return report_error(s);
  if (!json_out.empty()) return write_out(json_out, list.str()) ? kExitOk : kExitFailed;
  const json entries = json::parse(list.str());
  for (const auto& entry : entries) {
    std::string params;
    for (const auto& p : entry["params"])
      params += (params.empty() ? "" : "&") + p["name"].get<std::string>() + "=" + std::to_string(p["default"].get<long>());
    std::printf("%-22s %-10s %-14s %s\n", entry["name"].get<std::string>().c_str(), entry["role"].get<std::string>().c_str(),
                params.c_str(), entry["summary"].get<std::string>().c_str());
  }
  return kExitOk;
}
