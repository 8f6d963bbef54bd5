#pragma once

#include "voa/workbench.hpp"

namespace voa::experiments {

void o_identity_suite(const ExperimentConfig& cfg, Report& report);
void pairing_invariance(const ExperimentConfig& cfg, Report& report);
void virasoro_counterexample(const ExperimentConfig& cfg, Report& report);
void zhu_rank_and_dimension(const ExperimentConfig& cfg, Report& report);
void lattice_plus_relations(const ExperimentConfig& cfg, Report& report);
void phi_antiinvolution(const ExperimentConfig& cfg, Report& report);

}  // namespace voa::experiments
