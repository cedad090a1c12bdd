#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "esgames/io.hpp"

namespace esgames {

enum class DotView { causality, conflict, family };

std::optional<DotView> parse_view(std::string_view s);

/// Graphviz text for one document. Nodes are events, labelled by their
/// label or else sign and id; strategies use the label of the projected
/// game event. causality draws cover edges, conflict adds dashed undirected
/// conflict edges between minimal conflicting pairs, family draws one
/// cluster per non-identity bijection. Output depends only on the document.
/// Throws InputError when the document has nothing to draw for the view.
std::string export_dot(const Document& d, DotView view);

}  // namespace esgames
