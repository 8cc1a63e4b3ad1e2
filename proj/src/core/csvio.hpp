#pragma once

// Deterministic CSV emission for the report types. All numeric text goes
// through format_scalar, so identical values always serialize to identical
// bytes.

#include "core/badpoints.hpp"
#include "core/conditions.hpp"
#include "core/extension.hpp"
#include "core/isometry.hpp"
#include "core/metric.hpp"

#include <string>
#include <vector>

namespace samc {

std::string axiom_report_csv(const AxiomReport& rep);
std::string convergence_report_csv(const ConvergenceReport& rep);
std::string winding_csv(const std::vector<WindingRow>& rows);
std::string gauge_csv(const Gauge& g);
std::string badness_csv(const std::vector<BadnessReport>& reports);
std::string extension_report_csv(const ExtensionReport& rep);
std::string boundary_matrix_csv(const std::vector<double>& params,
                                const std::vector<std::vector<double>>& matrix);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace samc
