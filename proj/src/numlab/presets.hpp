#pragma once

#include "numlab/experiments.hpp"

// Standard desk-scale runs shared by the CLI, the tests and the acceptance report.
namespace symcan::presets {

GridSpec blowup_grid();
std::vector<double> blowup_lambdas();
std::vector<double> necessity_lambdas();
GridSpec necessity_grid();

ExperimentTable laplacian_blowup(bool refine = true);
// ||u||_{L^2} / ||Du||_{L^1} on the Laplacian blow-up family.
ExperimentTable gradient_control();
ExperimentTable hodge_blowup(bool refine = true);

ExperimentTable gns_disc();
// the eps = 0.1 disc at two resolutions
ExperimentTable gns_resolution();
ExperimentTable korn();
ExperimentTable solonnikov();
ExperimentTable strange();
ExperimentTable newton();

ExperimentTable necessity_gaussian();
ExperimentTable necessity_mean_zero();
ExperimentTable duality_divergence_free();
ExperimentTable duality_generic();

}  // namespace symcan::presets
