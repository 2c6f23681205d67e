#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ttd/blocks.hpp"
#include "ttd/duality.hpp"
#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/widths.hpp"

namespace ttd {

// Report emission.  Every JSON report is an object with a "schema": "1"
// field and a fixed key order, so identical inputs yield identical bytes.

std::string widths_json(const Graph& g, const WidthReport& rep);
std::string blocks_json(const Graph& g, int k, const std::vector<Block>& bs);
std::string find_json(const Graph& g, DualityFamily family, int k,
                      const std::optional<Orientation>& witness);
std::string duality_json(const Graph& g, const DualityReport& rep);

// Graph statistics plus the universe axiom sweep; the wholesale axiom check
// is cubic in the universe size, so it is skipped (and flagged as skipped)
// above kValidateAxiomLimit elements or eleven vertices.
inline constexpr int kValidateAxiomLimit = 600;
std::string validate_json(const Graph& g);

// One-row CSV with a header line.
std::string widths_csv(const Graph& g, const WidthReport& rep);

// Graphviz renderings of a duality report's tree side.
std::string stree_dot(const STree& tree);
std::string treedec_dot(const TreeDecomposition& dec);

// Enum names used in reports and command lines.
const char* family_name(DualityFamily f);
const char* mode_name(UncrossMode m);
std::optional<DualityFamily> family_from_name(std::string_view name);
std::optional<UncrossMode> mode_from_name(std::string_view name);

}  // namespace ttd
