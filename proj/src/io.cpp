#include "asg/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "asg/errors.hpp"

namespace asg::io {

namespace {

std::string bits_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (bool b : bits) out.push_back(b ? '1' : '0');
  return out;
}

template <class T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ContractViolation(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ContractViolation(std::string("field '") + key + "': " + e.what());
  }
}

BigInt parse_bigint(const json& j) {
  const std::string text = j.is_string() ? j.get<std::string>() : j.dump();
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ContractViolation("expected a non-negative integer, got '" + text + "'");
  }
  return BigInt(text);
}

void check_contents(const problems::Instance& instance) {
  if (const auto* sc = std::get_if<problems::SetCoverInstance>(&instance)) {
    for (const auto& set : sc->requests) {
      for (std::uint32_t e : set) {
        if (e < 1 || e > sc->universe) throw ContractViolation("set element outside the universe");
      }
    }
  } else if (const auto* dpa = std::get_if<problems::DpaInstance>(&instance)) {
    for (const auto& [from, to] : dpa->requests) {
      if (!(from < to) || dpa->length < to) throw ContractViolation("path request outside 0..length or empty");
    }
  } else if (const auto* ks = std::get_if<problems::KnapsackInstance>(&instance)) {
    for (const Rational& w : ks->weights) {
      if (w < Rational(0) || Rational(1) < w) throw ContractViolation("item weight outside [0, 1]");
    }
  } else if (const auto* m = std::get_if<problems::MatchingInstance>(&instance)) {
    for (const auto& [a, b] : m->edges) {
      if (a < 1 || b < 1 || a > m->vertices || b > m->vertices || a == b) {
        throw ContractViolation("edge endpoints must be distinct vertices");
      }
    }
  }
}

}  // namespace

json score_to_json(const Score& score) {
  if (score.is_finite()) return score.value();
  return score.to_string();
}

json to_json(const RunResult& run) {
  return json{{"y", run.y.to_string()}, {"score", score_to_json(run.score)}, {"bits", run.advice_bits_read}};
}

json to_json(const problems::ProblemRun& run) {
  return json{{"y", run.y.to_string()},
              {"score", score_to_json(run.score)},
              {"bits", run.advice_bits_read},
              {"advice", bits_string(run.advice)}};
}

json to_json(const CompetitiveVerdict& verdict) {
  json j{{"c", verdict.ratio.to_string()},
         {"alpha", verdict.additive},
         {"strict", verdict.strict},
         {"holds", verdict.holds},
         {"instances", verdict.instances_checked}};
  if (verdict.witness) {
    j["witness"] = *verdict.witness;
    j["witness_alg"] = score_to_json(*verdict.witness_alg);
    j["witness_opt"] = score_to_json(*verdict.witness_opt);
  }
  return j;
}

json to_json(const designs::CoveringDesign& design) {
  return json{{"v", design.v}, {"k", design.k}, {"t", design.t}, {"blocks", design.blocks}};
}

designs::CoveringDesign design_from_json(const json& j) {
  designs::CoveringDesign d;
  d.v = required<std::size_t>(j, "v");
  d.k = required<std::size_t>(j, "k");
  d.t = required<std::size_t>(j, "t");
  d.blocks = required<std::vector<designs::Block>>(j, "blocks");
  designs::validate_structure(d);
  return d;
}

json instance_to_json(problems::Problem problem, const problems::Instance& instance) {
  problems::check_instance(problem, instance);
  json j{{"problem", problems::to_string(problem)}};
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, problems::OnlineGraph>) {
          j["vertices"] = inst.size();
          json back = json::array();
          for (std::size_t i = 1; i <= inst.size(); ++i) back.push_back(inst.earlier_neighbors(i));
          j["back_edges"] = back;
        } else if constexpr (std::is_same_v<T, problems::SetCoverInstance>) {
          j["universe"] = inst.universe;
          j["sets"] = inst.requests;
        } else if constexpr (std::is_same_v<T, problems::DpaInstance>) {
          j["length"] = inst.length.str();
          json reqs = json::array();
          for (const auto& [from, to] : inst.requests) reqs.push_back(json::array({from.str(), to.str()}));
          j["requests"] = reqs;
        } else if constexpr (std::is_same_v<T, problems::KnapsackInstance>) {
          json weights = json::array();
          for (const Rational& w : inst.weights) weights.push_back(w.to_string());
          j["weights"] = weights;
        } else {
          j["vertices"] = inst.vertices;
          j["edges"] = inst.edges;
        }
      },
      instance);
  return j;
}

std::pair<problems::Problem, problems::Instance> instance_from_json(const json& j) {
  const problems::Problem problem = problems::parse_problem(required<std::string>(j, "problem"));
  problems::Instance instance;
  switch (problem) {
    case problems::Problem::vertex_cover:
    case problems::Problem::cycle_finding:
    case problems::Problem::dominating_set:
    case problems::Problem::independent_set: {
      const auto n = required<std::size_t>(j, "vertices");
      const auto back = required<std::vector<std::vector<std::uint32_t>>>(j, "back_edges");
      if (back.size() != n) throw ContractViolation("back_edges must list every vertex");
      problems::OnlineGraph g(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t w : back[i]) g.add_edge(w, static_cast<std::uint32_t>(i + 1));
      }
      instance = std::move(g);
      break;
    }
    case problems::Problem::set_cover: {
      problems::SetCoverInstance sc;
      sc.universe = required<std::size_t>(j, "universe");
      sc.requests = required<std::vector<std::vector<std::uint32_t>>>(j, "sets");
      for (auto& set : sc.requests) std::sort(set.begin(), set.end());
      instance = std::move(sc);
      break;
    }
    case problems::Problem::disjoint_path_allocation: {
      problems::DpaInstance dpa;
      dpa.length = parse_bigint(required<json>(j, "length"));
      for (const json& r : required<json>(j, "requests")) {
        if (!r.is_array() || r.size() != 2) throw ContractViolation("a path request is a pair");
        dpa.requests.emplace_back(parse_bigint(r[0]), parse_bigint(r[1]));
      }
      instance = std::move(dpa);
      break;
    }
    case problems::Problem::uniform_knapsack: {
      problems::KnapsackInstance ks;
      for (const json& w : required<json>(j, "weights")) {
        ks.weights.push_back(Rational::parse(w.is_string() ? w.get<std::string>() : w.dump()));
      }
      instance = std::move(ks);
      break;
    }
    case problems::Problem::matching: {
      problems::MatchingInstance m;
      m.vertices = required<std::size_t>(j, "vertices");
      m.edges = required<std::vector<std::pair<std::uint32_t, std::uint32_t>>>(j, "edges");
      instance = std::move(m);
      break;
    }
  }
  problems::check_instance(problem, instance);
  check_contents(instance);
  return {problem, std::move(instance)};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractViolation("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ContractViolation("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ContractViolation("cannot write '" + path + "'");
  out << text;
}

}  // namespace asg::io
