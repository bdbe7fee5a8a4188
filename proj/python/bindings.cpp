#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "termcheck/render.hpp"
#include "termcheck/unify.hpp"

namespace py = pybind11;
using namespace termcheck;

namespace {

GrowthRule growth_rule(const std::string& mode) {
    if (mode == "subterm") return GrowthRule::Subterm;
    if (mode == "direct-arg") return GrowthRule::DirectArgument;
    throw py::value_error("ev mode must be 'subterm' or 'direct-arg'");
}

py::object witness_to_python(const std::optional<EvWitness>& w) {
    if (!w) return py::none();
    py::dict out;
    out["renaming"] = w->renaming;
    py::list positions;
    for (const Position& p : w->growing_positions) positions.append(py::tuple(py::cast(p)));
    out["growing_positions"] = positions;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Loop detection for logic programs with negation";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    m.def("size", [](const std::string& term) { return parse_term(term).size(); },
          "Symbol count of a term.", py::arg("term"));

    m.def("is_variant", [](const std::string& a, const std::string& b) {
        return is_variant(parse_term(a), parse_term(b));
    }, py::arg("a"), py::arg("b"));

    m.def("expanded_variant",
          [](const std::string& larger, const std::string& smaller, const std::string& mode) {
              return witness_to_python(expanded_variant(parse_term(larger), parse_term(smaller), growth_rule(mode)));
          },
          "Witness that `larger` is an expanded variant of `smaller`, or None.",
          py::arg("larger"), py::arg("smaller"), py::arg("mode") = "subterm");

    m.def("mgu",
          [](const std::string& a, const std::string& b, bool occurs_check) -> py::object {
              auto s = mgu(parse_term(a), parse_term(b), occurs_check);
              if (!s) return py::none();
              py::dict out;
              for (const auto& [var, value] : s->bindings()) out[py::str(var)] = to_string(value);
              return out;
          },
          py::arg("a"), py::arg("b"), py::arg("occurs_check") = true);

    m.def("parse_program", [](const std::string& text) {
        std::vector<std::string> out;
        for (const Clause& c : parse_program(text).clauses()) out.push_back(to_string(c));
        return out;
    }, "Clauses of a program in normalized syntax.", py::arg("text"));

    m.def("analyze",
          [](const std::string& program_text, const std::vector<std::string>& queries, std::size_t depth_bound,
             std::size_t max_nodes, bool occurs_check, const std::string& mode, const std::string& format) {
              const Program program = parse_program(program_text);
              std::vector<Literal> goals;
              for (const auto& q : queries) goals.push_back(parse_query(q));
              if (depth_bound < 2) throw py::value_error("depth bound must be at least 2");
              AnalysisConfig config;
              config.depth_bound = depth_bound;
              config.engine.max_nodes = max_nodes;
              config.engine.occurs_check = occurs_check;
              config.rule = growth_rule(mode);
              Verdict v;
              {
                  py::gil_scoped_release release;
                  v = test(program, goals, config);
              }
              if (format == "json") return render_json(v);
              if (format == "text") return render_text(v);
              if (format == "dot") return render_dot(v);
              throw py::value_error("format must be 'json', 'text' or 'dot'");
          },
          "Runs the analysis and returns the rendered verdict.",
          py::arg("program"), py::arg("queries"), py::arg("depth_bound") = 2, py::arg("max_nodes") = 1'000'000,
          py::arg("occurs_check") = true, py::arg("ev_mode") = "subterm", py::arg("format") = "json");
}
