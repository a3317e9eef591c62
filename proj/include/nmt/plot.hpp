#pragma once

#include <string>
#include <vector>

#include "nmt/io.hpp"

namespace nmt {

struct PlotSeries {
    std::string label;
    std::vector<double> x, y;
};

struct PlotPanel {
    std::string x_label, y_label;
    bool log_x = false;
    std::vector<PlotSeries> series;
};

/// Panels stacked vertically, one legend per panel. Every data point is drawn
/// as a marker <circle class="marker s<k>"> joined by a polyline.
std::string render_svg(const std::vector<PlotPanel>& panels, const std::string& title = "");

/// Backbone tables (columns q, omega, delta) give panels omega/omega_ref vs q
/// and delta vs q, with omega_ref the first omega of the first table. FRF
/// tables (omega, amp_<ch>, phase_<ch>) give amplitude and phase vs omega for
/// `channel` (first channel when empty). Throws SchemaError for tables
/// without rows or with neither layout.
std::string plot_tables(const std::vector<std::pair<std::string, CsvTable>>& tables, const std::string& channel = "",
                        const std::string& title = "");

}  // namespace nmt
