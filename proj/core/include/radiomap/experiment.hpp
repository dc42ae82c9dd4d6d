// SPDX-License-Identifier: Apache-2.0
#ifndef RADIOMAP_EXPERIMENT_HPP
#define RADIOMAP_EXPERIMENT_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "radiomap/propagation.hpp"
#include "radiomap/sampling.hpp"
#include "radiomap/trainer.hpp"

namespace radiomap {

// One area under test: the scenario plus its ground-truth generator settings.
struct ScenarioCase {
    std::string label;
    UrbanScenario scenario;
    PropagationParams propagation;
    GeneratorParams generator;
};

struct ExperimentPlan {
    std::vector<ScenarioCase> scenarios;
    std::vector<std::string> methods = {"gat", "idw"};  // gat|idw|kriging|halrtc
    std::vector<EncodingKind> encodings = {EncodingKind::ModelBased};  // gat only
    double f_obv_mhz = 1750.0;
    std::vector<double> f_target_mhz = {5750.0};
    std::vector<double> rates = {0.05};
    std::vector<std::uint64_t> seeds = {0};
    double split_fraction = 0.5;
    double mask_fraction = 1.0;       // < 1 = semi-supervised label subsets
    TrainingConfig training;          // lr/epochs/hidden/strategy template for gat
    int halrtc_iterations = 1500;
    double halrtc_rho = 1e-6;
    double idw_power = 2.0;
    int jobs = 1;                     // > 1 runs independent cells concurrently
};

struct CellResult {
    std::string area;
    std::string method;    // "gat:<encoding>" or baseline name
    double f_target_mhz = 0.0;
    double rate = 0.0;
    std::uint64_t seed = 0;
    double area_rmse_db = 0.0;
    std::string status;  // "ok" or an error message
};

struct ExperimentReport {
    std::vector<CellResult> cells;

    // Byte-stable CSVs: fixed enumeration order, fixed float formatting.
    void write_report_csv(const std::filesystem::path& path) const;
    // Mean/min/max across areas per (method, f_target, rate).
    void write_summary_csv(const std::filesystem::path& path) const;
};

// Runs every cell of the plan; failures are recorded per cell, not thrown.
// Deterministic under the plan's seeds, also when jobs > 1.
ExperimentReport run_experiment(const ExperimentPlan& plan);

// Single-cell entry points, shared by the orchestrator and the CLI.
double run_gat_cell(const ScenarioCase& sc_case, const RadiomapTensor& truth,
                    const BlockSplit& split, const TrainingConfig& cfg, double f_target_mhz);
double run_idw_cell(const UrbanScenario& sc, const RadiomapTensor& truth,
                    const BlockSplit& split, double rate, std::uint64_t seed,
                    double f_target_mhz, double power);
double run_kriging_cell(const UrbanScenario& sc, const RadiomapTensor& truth,
                        const BlockSplit& split, double rate, std::uint64_t seed,
                        double f_obv_mhz, double f_target_mhz);
double run_halrtc_cell(const UrbanScenario& sc, const RadiomapTensor& truth,
                       const BlockSplit& split, double rate, std::uint64_t seed,
                       double f_target_mhz, double rho, int iterations);

}  // namespace radiomap

#endif  // RADIOMAP_EXPERIMENT_HPP
