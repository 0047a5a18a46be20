#pragma once

#include "toriclci/nakajima.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toriclci {

// The built-in instances exposed by the `example` command.

FreeParamMatrix example_fig2();     // d=3, rows [[2],[2,1]] — singular quadrilateral
FreeParamMatrix example_fig3();     // d=4, rows [[1],[1,0],[2,-1,-1]]
FreeParamMatrix example_triangle(const Int& k);             // d=3, rows [[k],[k,-1]]
FreeParamMatrix example_simplex(int d, const Int& k);       // m_{1,1}=k, m_{i,i}=1
FreeParamMatrix example_box(const std::vector<Int>& ks);    // m_{i,1}=k_i
FreeParamMatrix example_smooth3();  // d=3, rows [[1],[0,1]] — basic simplex

// Parses "fig2", "triangle(3)", "simplex(4,2)", "box(2,3)", ...
// Returns nothing for unknown names or malformed arguments.
std::optional<FreeParamMatrix> example_by_name(const std::string& name);

// One line per known name, for the CLI error message.
std::string example_catalog();

}  // namespace toriclci
