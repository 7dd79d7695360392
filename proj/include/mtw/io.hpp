#pragma once

#include "mtw/harness.hpp"
#include "mtw/subtree.hpp"
#include "mtw/widths.hpp"

#include <string>
#include <string_view>
#include <vector>

// vendor single-header nlohmann/json
#include "json.hpp"

namespace mtw {

/// Tree file: UTF-8 TSV, '#' comments, one edge per line "u<TAB>v<TAB>length"
/// with length a decimal or rational literal ("3/2" accepted).
MetricTree parse_tree_tsv(std::string_view text);
std::string emit_tree_tsv(const MetricTree& t);

/// Newick with mandatory branch lengths; internal names optional (missing
/// ones are synthesized as _1, _2, ...). Errors carry the input position.
MetricTree parse_newick(std::string_view text);
std::string emit_newick(const MetricTree& t);

/// Points file: lines "V <vertex-id>" or "E <u> <v> <offset-from-u>".
std::vector<TreePoint> parse_points(const MetricTree& t, std::string_view text);
std::string emit_points(const MetricTree& t, const std::vector<TreePoint>& pts);

// JSON emission; keys sorted, rationals as canonical strings, schema "1"
nlohmann::json point_to_json(const MetricTree& t, const TreePoint& p);
nlohmann::json subtree_to_json(const Subtree& s);
nlohmann::json width_result_to_json(const WidthResult& r, const MetricTree& t);
nlohmann::json suite_report_to_json(const SuiteReport& r);

} // namespace mtw
