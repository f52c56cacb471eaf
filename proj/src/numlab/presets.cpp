#include "numlab/presets.hpp"

#include "catalog/catalog.hpp"

namespace symcan::presets {

GridSpec blowup_grid() { return {2, 1024, 8.0}; }
std::vector<double> blowup_lambdas() { return {4, 8, 16, 32}; }
std::vector<double> necessity_lambdas() { return {1.0, 0.5, 1.0 / 3.0, 0.25}; }
GridSpec necessity_grid() { return {2, 1024, 40.0}; }

ExperimentTable laplacian_blowup(bool refine) {
  return blowup_ratio_experiment(laplacian(2), QVector{1}, 1, blowup_lambdas(), blowup_grid(), refine);
}

ExperimentTable gradient_control() {
  ExperimentTable t =
      family_ratio_experiment(laplacian(2), QVector{1}, gradient(2), 0, blowup_lambdas(), blowup_grid(), false);
  t.name = "control";
  return t;
}

ExperimentTable hodge_blowup(bool refine) {
  return blowup_ratio_experiment(hodge_pair(3, 1), QVector{0, 0, 0, 1}, 0, {2.5, 3.0, 3.5, 4.0}, {3, 64, 4.0},
                                 refine);
}

ExperimentTable gns_disc() {
  return family_experiment(
      "gns_disc", [](double eps, const GridSpec& g) { return fields::mollified_disc(g, 1.0, eps); },
      {0.2, 0.1, 0.05}, {2, 512, 4.0}, 0, {gradient(2)});
}

ExperimentTable gns_resolution() {
  return resolution_experiment(
      "gns_resolution", [](const GridSpec& g) { return fields::mollified_disc(g, 1.0, 0.1); },
      {{2, 256, 4.0}, {2, 512, 4.0}}, 0, {gradient(2)});
}

ExperimentTable korn() {
  return resolution_experiment(
      "korn", [](const GridSpec& g) { return fields::vector_gaussian(g, 2, 0.4); },
      {{2, 64, 8.0}, {2, 128, 8.0}, {2, 256, 8.0}}, 0, {sym_gradient_sk(2, 1)});
}

ExperimentTable solonnikov() {
  return resolution_experiment(
      "solonnikov", [](const GridSpec& g) { return fields::gaussian(g, 0.5, {0.1, -0.2}); },
      {{2, 64, 8.0}, {2, 128, 8.0}, {2, 256, 8.0}}, 1, {quadratic_collection(2, 1)});
}

ExperimentTable strange() {
  return resolution_experiment(
      "strange", [](const GridSpec& g) { return fields::gaussian(g, 0.6, {}); }, {{4, 16, 8.0}, {4, 32, 8.0}}, 0,
      {strange_r4()});
}

ExperimentTable newton() {
  return family_experiment(
      "newton", [](double eps, const GridSpec& g) { return fields::newton_gradient(g, eps); }, {0.4, 0.2, 0.1},
      {3, 128, 8.0}, 0, {divergence(3), exterior_d(3, 1)});
}

ExperimentTable necessity_gaussian() {
  return necessity_experiment(fields::gaussian(necessity_grid(), 0.3, {}, true), necessity_lambdas());
}

ExperimentTable necessity_mean_zero() {
  return necessity_experiment(fields::gaussian_derivative(necessity_grid(), 0.3, {0.5, 0.0}), necessity_lambdas());
}

ExperimentTable duality_divergence_free() {
  const SymbolOperator div = divergence(2);
  ExperimentTable t =
      necessity_experiment(fields::curl_potential(necessity_grid(), 0.3, {0.5, 0.0}), necessity_lambdas(), &div);
  t.name = "duality";
  return t;
}

ExperimentTable duality_generic() {
  const SymbolOperator div = divergence(2);
  ExperimentTable t = necessity_experiment(fields::vector_gaussian(necessity_grid(), 2, 0.3), necessity_lambdas(), &div);
  t.name = "duality";
  return t;
}

}  // namespace symcan::presets
