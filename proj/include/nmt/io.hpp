#pragma once

#include <string>
#include <vector>

#include "nmt/backbone.hpp"
#include "nmt/recording.hpp"
#include "nmt/synthesis.hpp"

namespace nmt {

/// Numeric table with a header row. Values are written with %.17g so that a
/// write/read round trip is exact.
struct CsvTable {
    std::vector<std::string> header;
    Eigen::MatrixXd data;

    Eigen::Index column(const std::string& name) const;  // -1 if absent
    bool has_column(const std::string& name) const { return column(name) >= 0; }
};

std::string format_csv(const CsvTable& table);
/// Throws SchemaError with the 1-based line number for ragged rows, empty
/// input or non-numeric cells. `source` names the input in messages.
CsvTable parse_csv(const std::string& text, const std::string& source = "csv");

void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);
void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

/// Columns q, omega, xi, delta, then re_<ch>_h<n>, im_<ch>_h<n> for every
/// harmonic n and channel.
CsvTable backbone_table(const Backbone& backbone);
Backbone backbone_from_table(const CsvTable& table);

/// Columns omega, then amp_<ch> and phase_<ch> [rad] per channel.
CsvTable frf_table(const SynthesizedFRF& frf);
CsvTable frf_table(const SteppedSineFRF& frf);

/// Matrix export with generated column names c0..c(n-1).
CsvTable matrix_table(const MatrixXd& m);

/// One column per channel.
CsvTable recording_table(const Recording& rec);

/// Lower-case hex SHA-256 digest.
std::string sha256_hex(const std::string& bytes);

}  // namespace nmt
