#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "asg/adversary.hpp"
#include "asg/algorithms.hpp"
#include "asg/bounds.hpp"
#include "asg/designs.hpp"
#include "asg/errors.hpp"
#include "asg/harness.hpp"
#include "asg/io.hpp"
#include "asg/reductions.hpp"
#include "asg/setcover.hpp"

namespace py = pybind11;
using namespace asg;

namespace {

// Ratios cross the boundary as "P/Q" strings so no float ever reaches the core.
Rational ratio(const std::string& text) { return Rational::parse(text); }

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json to_json(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Objective objective_of(const std::string& text) {
  if (text == "min") return Objective::minimize;
  if (text == "max") return Objective::maximize;
  throw DomainError("objective must be 'min' or 'max'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tools for asymmetric string guessing with advice";

  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<MalformedAdvice>(m, "MalformedAdvice", PyExc_ValueError);
  py::register_exception<ResourceLimitExceeded>(m, "ResourceLimitExceeded", PyExc_RuntimeError);

  m.def("advice_bound", [](std::uint64_t n, const std::string& c) {
    return bounds::advice_bound(n, ratio(c)).convert_to<double>();
  });
  m.def("entropy", [](double p) { return bounds::entropy(p); });
  m.def("forced_cost_bound", &adversary::forced_cost_bound, py::arg("m"), py::arg("h"));
  m.def("binomial", [](std::uint64_t n, std::uint64_t k) { return binomial(n, k).str(); });

  m.def(
      "exact_cover_number",
      [](std::size_t v, std::size_t k, std::size_t t) {
        const designs::ExactCover e = designs::exact_cover_number(v, k, t);
        return py::make_tuple(e.size, e.witness.blocks);
      },
      py::arg("v"), py::arg("k"), py::arg("t"), "Minimum design size and its lexicographically first witness");
  m.def("greedy_cover",
        [](std::size_t v, std::size_t k, std::size_t t) { return designs::greedy_cover(v, k, t).blocks; });
  m.def("is_covering_design", [](std::size_t v, std::size_t k, std::size_t t, const std::vector<designs::Block>& b) {
    return designs::is_covering_design({v, k, t, b});
  });

  m.def(
      "set_cover",
      [](std::size_t elements, const std::vector<std::vector<std::uint32_t>>& sets, std::uint64_t budget) {
        const setcover::Solution s = setcover::solve({elements, sets}, budget);
        return py::dict(py::arg("lower") = s.lower, py::arg("upper") = s.upper, py::arg("exact") = s.exact,
                        py::arg("chosen") = s.chosen);
      },
      py::arg("elements"), py::arg("sets"), py::arg("node_budget") = 1'000'000);
  m.def("set_cover_lp_bound", [](std::size_t elements, const std::vector<std::vector<std::uint32_t>>& sets) {
    return setcover::lp_lower_bound({elements, sets});
  });

  m.def(
      "run_asg",
      [](const std::string& algo, const std::string& c, const std::string& x) {
        const AsgVariant variant = harness::asg_pair_variant(algo);
        const BitString bits = BitString::parse(x);
        const RunResult r = run_asg(variant, harness::asg_pair_by_name(algo, ratio(c)), bits);
        auto out = from_json(io::to_json(r));
        out["opt"] = from_json(io::score_to_json(asg_optimum(variant, bits)));
        return out;
      },
      py::arg("algo"), py::arg("c"), py::arg("x"));
  m.def(
      "verify",
      [](const std::string& algo, const std::string& c, std::size_t n, const std::string& r) {
        const Rational target = r.empty() ? ratio(c) : ratio(r);
        return from_json(io::to_json(
            verify_asg_pair(harness::asg_pair_variant(algo), harness::asg_pair_by_name(algo, ratio(c)), target, 0, n)));
      },
      py::arg("algo"), py::arg("c"), py::arg("n"), py::arg("ratio") = "");

  m.def(
      "brute_min_advice",
      [](std::size_t n, const std::string& c, const std::string& objective) {
        const adversary::BruteAdvice b = adversary::brute_min_advice(n, ratio(c), objective_of(objective));
        std::vector<std::string> family;
        for (const BitString& y : b.family) family.push_back(y.to_string());
        return py::dict(py::arg("lower") = b.lower, py::arg("upper") = b.upper, py::arg("exact") = b.exact,
                        py::arg("bits_lower") = b.bits_lower, py::arg("bits_upper") = b.bits_upper,
                        py::arg("family") = family);
      },
      py::arg("n"), py::arg("c"), py::arg("objective"));
  m.def("serves", [](const std::string& objective, const std::string& c, const std::string& x, const std::string& y) {
    return adversary::serves(objective_of(objective), ratio(c), BitString::parse(x), BitString::parse(y));
  });

  m.def(
      "reduce",
      [](const std::string& x, const std::string& to) {
        const reductions::Reduction r = reductions::parse_reduction(to);
        return from_json(
            io::instance_to_json(reductions::target_problem(r), reductions::build_instance(r, BitString::parse(x))));
      },
      py::arg("x"), py::arg("to"));
  m.def(
      "optimum",
      [](const py::object& instance) {
        const auto [problem, inst] = io::instance_from_json(to_json(instance));
        const problems::Optimum o = problems::optimum(problem, inst);
        return py::make_tuple(from_json(io::score_to_json(o.value)), o.y.to_string());
      },
      "Brute-force optimum of an instance record: (score, smallest optimal output)");
  m.def(
      "run_problem",
      [](const std::string& algo, const py::object& instance, const std::string& c) {
        const auto [problem, inst] = io::instance_from_json(to_json(instance));
        return from_json(io::to_json(problems::run_problem(harness::problem_pair_by_name(algo, problem, ratio(c)), inst)));
      },
      py::arg("algo"), py::arg("instance"), py::arg("c") = "2");
  m.def("knapsack_optimum_count", [](const py::object& instance) {
    const auto [problem, inst] = io::instance_from_json(to_json(instance));
    return problems::knapsack_optimum_count(std::get<problems::KnapsackInstance>(inst));
  });
  m.def("maximum_matching_size", [](const py::object& instance) {
    const auto [problem, inst] = io::instance_from_json(to_json(instance));
    return problems::maximum_matching_size(std::get<problems::MatchingInstance>(inst));
  });

  m.def(
      "curve",
      [](const std::string& c_min, const std::string& c_max, std::size_t steps, std::uint64_t n) {
        return from_json(harness::curve_json(harness::emit_curve(ratio(c_min), ratio(c_max), steps, n)));
      },
      py::arg("c_min"), py::arg("c_max"), py::arg("steps"), py::arg("n"));
  m.def(
      "run_suite",
      [](const py::object& config) {
        const auto cfg = config.is_none() ? harness::ExperimentConfig{}
                                          : harness::ExperimentConfig::from_json(to_json(config));
        return from_json(harness::run_suite(cfg).to_json());
      },
      py::arg("config") = py::none());
}
