#pragma once

#include <string>

#include "vernon/trees.hpp"

namespace vernon {

/// Graphviz rendering: one node per corolla (special corollas as diamonds),
/// one arc per edge, and a leaf stub per free variable.
std::string to_dot(const VernonGraph& g, const std::string& graph_name = "vernon");

}  // namespace vernon
