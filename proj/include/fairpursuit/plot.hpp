#pragma once

#include <string>
#include <vector>

#include "fairpursuit/harness.hpp"

namespace fairpursuit {

// Renders one figure-analogue chart ("f2", "f3b", "f3c", "f5") from the
// aggregate table as a standalone SVG. Throws if the figure name is unknown
// or no rows match the figure's strategies.
std::string render_figure_svg(const std::string& figure, const std::vector<AggregateRow>& agg);

// Same, written atomically to out_path.
void write_figure_svg(const std::string& figure, const std::vector<AggregateRow>& agg,
                      const std::string& out_path);

}  // namespace fairpursuit
