#pragma once

#include <string>

#include <json.hpp>

#include "asg/designs.hpp"
#include "asg/engine.hpp"
#include "asg/problems.hpp"

namespace asg::io {

using nlohmann::json;

/// {"y": "0110", "score": 2 | "+inf" | "-inf", "bits": 5}
json to_json(const RunResult& run);
json to_json(const problems::ProblemRun& run);
json to_json(const CompetitiveVerdict& verdict);
json score_to_json(const Score& score);

/// {"v": 4, "k": 2, "t": 1, "blocks": [[1, 2], [3, 4]]}
json to_json(const designs::CoveringDesign& design);
/// Validates the structure; throws ContractViolation on malformed input.
designs::CoveringDesign design_from_json(const json& j);

/// Instances carry their problem name:
///   graphs    {"problem": "vc", "vertices": 3, "back_edges": [[], [1], [1, 2]]}
///   set cover {"problem": "sc", "universe": 3, "sets": [[1], [2], [1, 3]]}
///   paths     {"problem": "dpa", "length": "8", "requests": [["0", "4"], ["4", "6"]]}
///   knapsack  {"problem": "knapsack", "weights": ["3/5", "1/2"]}
///   matching  {"problem": "matching", "vertices": 4, "edges": [[2, 3], [1, 2]]}
/// DPA coordinates are decimal strings so they survive any size.
json instance_to_json(problems::Problem problem, const problems::Instance& instance);
/// The problem named in the record together with its instance.
std::pair<problems::Problem, problems::Instance> instance_from_json(const json& j);

json read_json_file(const std::string& path);
/// Writes `text` to `path`, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);

}  // namespace asg::io
