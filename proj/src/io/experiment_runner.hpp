#pragma once

#include <optional>
#include <string>
#include <vector>

#include "io/operator_json.hpp"
#include "numlab/experiments.hpp"

namespace symcan {

struct ExperimentRequest {
  std::string kind;                 // blowup | inequality | necessity | duality
  std::optional<std::string> op;    // operator spec (blowup: A, duality: constraint L)
  std::optional<std::string> control;  // blowup only: B in ||D^l u|| / ||B(D) u||_1
  std::optional<QVector> e;
  std::optional<unsigned> ell;
  std::vector<double> lambdas;
  std::optional<std::pair<std::size_t, double>> grid;  // (N, T)
  std::string field;                // necessity: gaussian | mean-zero; duality: curl-potential | generic
  std::string preset;               // inequality: gns_disc | korn | solonnikov | strange | newton
  bool refine = true;
  std::uint64_t seed = 1;
};

struct ExperimentResult {
  ExperimentTable table;
  ojson manifest;
};

ExperimentResult run_experiment(const ExperimentRequest& req);
// Keys mirror the request fields; "lambda" is a list, "grid" is [N, T].
ExperimentRequest request_from_json(const nlohmann::json& j);

}  // namespace symcan
