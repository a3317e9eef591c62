#pragma once

#include <string>
#include <vector>

#include "nmt/config.hpp"

namespace nmt {

/// Experiment config:
///   {"kind": "linear-modes" | "backbone-hb" | "vtest" | "hysteresis" | "synth" | "compare",
///    "model": <object or file path>, "output": "out", "seed": 1, ...kind-specific keys}
/// Paths are relative to `base_dir`. The full schema is in the README.
struct ExperimentConfig {
    std::string kind;
    json model;  // resolved model object
    std::string output = "out";
    std::uint64_t seed = 1;
    json params;  // remaining kind-specific keys
    std::string base_dir = ".";

    static ExperimentConfig from_json(const json& j, const std::string& base_dir = ".");
    json to_json() const;
};

struct ArtifactEntry {
    std::string path;  // relative to the output directory
    std::string sha256;
};

struct RunResult {
    int status = 0;  // 0 ok, 2 lock or convergence failure
    std::vector<ArtifactEntry> files;
    std::vector<std::string> messages;
    json manifest;
};

/// Validate, run and write artifacts plus manifest.json (config, seed, code
/// version, per-file SHA-256). Config problems raise SchemaError before any
/// file is written. A failed lock or convergence sets status 2 and keeps the
/// artifacts that were produced.
RunResult run_experiment(const ExperimentConfig& config);

/// Library version string written to manifests.
std::string code_version();

}  // namespace nmt
