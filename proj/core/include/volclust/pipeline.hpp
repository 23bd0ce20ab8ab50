#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "volclust/output.hpp"

namespace volclust {

/// The experiments a run can request. `all` expands to every other entry.
enum class Experiment {
    pdf,
    acf,
    rearranged,
    binarized,
    swap,
    windowdist,
    index,
    smallest_index,
    asymmetry,
    transitions,
    signed_transitions,
};

std::string to_string(Experiment e);

/// Parse an experiment name; understands "all". Throws InvalidArgumentError
/// on unknown names.
std::vector<Experiment> parse_experiments(const std::vector<std::string>& names);

struct RunConfig {
    std::vector<std::pair<std::string, std::filesystem::path>> inputs;  // (symbol, csv path)
    int tau = 1;
    std::vector<double> p_list = {5, 10, 15, 20, 30};
    std::size_t n_max = 240;
    std::size_t max_lag = 100;
    std::size_t bins = 50;
    std::uint64_t seed = 1;
    std::vector<std::string> experiments = {"all"};
    std::filesystem::path outdir = "out";
    std::string run_id;  // empty -> derived from config and input digests
    bool overwrite = false;
};

/// Throws InvalidArgumentError when a config invariant is violated.
void validate(const RunConfig& config);

/// Run every requested experiment on every input series and persist the
/// artifacts. A failing (series, experiment) cell is recorded in the
/// manifest and does not abort other cells. Output is a pure function of
/// (input files, config, seed).
ResultManifest run_analysis(const RunConfig& config);

}  // namespace volclust
