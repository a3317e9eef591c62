#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "nmt/hb_epmc.hpp"
#include "nmt/hysteresis.hpp"
#include "nmt/noise.hpp"
#include "nmt/pll.hpp"
#include "nmt/rig.hpp"
#include "nmt/shaker.hpp"

namespace nmt {

using json = nlohmann::json;

/// Model config. Keys mirror the symbols of the reference parameter table.
///
///   {"type": "beam", "E": .., "rho": .., "l": .., "n_elements": 7,
///    "b": .., "h": .., "beta": 1e-4,
///    "calibrate": {"omega1": 139.5, "omega2": 760.9},      (optional)
///    "friction": {"node": 3, "k_t": 8000, "f_s": 1}}       (optional)
///
///   {"type": "resonator", "m1": 1, "m2": 1, "m3": 1, "k": .., "k_t": ..,
///    "f_s": .., "k_susp": .., "d_m2": 0}
///
/// Absent keys take the reference values. Unknown keys are rejected.
struct ModelConfig {
    std::string type = "beam";
    BeamSpec beam;
    double beta = 0.0;
    std::optional<JenkinsElement> friction;
    int friction_node = 0;
    ResonatorSpec resonator;

    SecondOrderModel build() const;
};

ModelConfig model_config_from_json(const json& j);

/// {"m_T", "m_C", "k_T", "k_C", "d_T", "d_C", "G", "L", "R", "k_Stinger", "point"}
ShakerModel shaker_from_json(const json& j);

/// {"K", "a", "b", "omega_m", "detector_gain", "reference", "detector"}.
/// omega_m falls back to `default_center`.
PLLConfig pll_from_json(const json& j, double default_center);

/// {"levels": [..], "force_control": true, "hold_duration": 60}
LevelSchedule schedule_from_json(const json& j);

/// {"force_psd", "displacement_psd", "correlation_time", "seed"}
NoiseSpec noise_from_json(const json& j, std::uint64_t default_seed);

ModelConfig default_beam_config();
ModelConfig default_resonator_config();
json to_json(const ModelConfig& c);
json to_json(const ShakerModel& s);
json to_json(const PLLConfig& p);

/// Parse JSON text; syntax errors become SchemaError with the line number.
json parse_json(const std::string& text, const std::string& source);
json read_json(const std::string& path);

/// Reader for one JSON object that names the offending key in every error
/// and rejects keys that were never queried.
class ConfigObject {
public:
    ConfigObject(const json& j, std::string path);

    bool has(const std::string& key) const;
    double number(const std::string& key, double fallback);
    double number(const std::string& key);
    int integer(const std::string& key, int fallback);
    bool boolean(const std::string& key, bool fallback);
    std::string string(const std::string& key, const std::string& fallback);
    std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
    std::vector<int> integers(const std::string& key, const std::vector<int>& fallback);
    /// Nested object, or an empty object when absent.
    const json& object(const std::string& key);
    const json& raw(const std::string& key);
    std::string key_path(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    /// Throws for keys not seen by any accessor.
    void finish() const;

private:
    const json& at(const std::string& key);
    const json& j_;
    std::string path_;
    std::vector<std::string> used_;
};

}  // namespace nmt
