#pragma once

// Name -> descriptor lookup for both scalar modes.

#include "core/metric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace samc {

std::vector<std::string> registry_names();
bool registry_has(const std::string& name);

// Throws domain_error for unknown names; exact lookup additionally requires
// the descriptor to be exact-capable.
Metric<Rational> lookup_exact(const std::string& name);
Metric<double> lookup_float(const std::string& name);
bool lookup_exact_capable(const std::string& name);

}  // namespace samc
