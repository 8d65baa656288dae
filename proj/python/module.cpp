#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "blockwake/bench.hpp"
#include "blockwake/engine.hpp"
#include "blockwake/error.hpp"
#include "blockwake/format.hpp"
#include "blockwake/indicators.hpp"
#include "blockwake/landscapes.hpp"
#include "blockwake/plan.hpp"

namespace py = pybind11;
using namespace blockwake;

namespace {

ParameterSpace make_space(std::size_t m, const std::vector<std::size_t>& levels) {
  if (levels.size() == 1) return ParameterSpace::uniform(m, levels[0]);
  if (levels.size() != m) throw ConfigError("levels must hold one value or m values");
  return ParameterSpace::from_cardinalities(levels);
}

std::vector<std::size_t> ordering_or_identity(const std::optional<std::vector<std::size_t>>& o,
                                              std::size_t m) {
  return o ? *o : identity_ordering(m);
}

py::object opt(const std::optional<double>& v) {
  return v ? py::object(py::float_(*v)) : py::object(py::none());
}

py::dict structure_dict(const StructureSpec& s) {
  py::dict d;
  d["sizes"] = s.sizes;
  d["overlaps"] = s.overlaps;
  d["truncated"] = s.truncated;
  return d;
}

py::dict plan_dict(const SweepPlan& plan) {
  py::dict d;
  d["name"] = plan.name;
  d["label"] = plan.label();
  d["m"] = plan.m;
  d["recomb"] = to_string(plan.recombination);
  py::list cycles;
  for (const auto& c : plan.cycles) {
    py::dict cd;
    cd["offset"] = c.offset;
    cd["verse"] = to_string(c.verse);
    cd["blocks"] = c.blocks;
    cycles.append(cd);
  }
  d["cycles"] = cycles;
  return d;
}

py::dict row_dict(const IndicatorRow& r) {
  py::dict d;
  d["iter"] = r.iter;
  d["SQ_min"] = opt(r.sq_min);
  d["SQ_max"] = opt(r.sq_max);
  d["SE_log"] = opt(r.se_log);
  d["ABS"] = py::int_(py::str(r.abs.get_str()));
  d["GSS"] = py::int_(py::str(r.gss.get_str()));
  d["TOS"] = py::int_(py::str(r.tos.get_str()));
  d["NSS"] = py::int_(py::str(r.nss.get_str()));
  d["GCR"] = r.gcr;
  d["CV"] = py::int_(py::str(r.cv.get_str()));
  d["LCR"] = opt(r.lcr);
  d["logCF"] = opt(r.log_cf);
  d["logCCF"] = opt(r.log_ccf);
  d["SASW"] = r.sasw;
  d["AASW"] = r.aasw;
  d["FSW"] = r.fsw;
  d["NSM"] = opt(r.nsm);
  d["URR"] = opt(r.urr);
  d["logIRUIF"] = opt(r.log_iruif);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Overlapping block coordinate descent with search-structure indicators";

  static py::exception<Error> base_error(m, "BlockwakeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(base_error.ptr(), (std::string(e.kind()) + ": " + e.what()).c_str());
    }
  });

  m.def("parse_structure_name",
        [](const std::string& name) { return structure_dict(parse_structure_name(name)); },
        py::arg("name"));

  m.def("render_structure_name",
        [](std::vector<std::size_t> sizes, std::vector<std::size_t> overlaps, bool truncated) {
          return render_structure_name({std::move(sizes), std::move(overlaps), truncated});
        },
        py::arg("sizes"), py::arg("overlaps"), py::arg("truncated") = false);

  m.def("reference_structure_names", &reference_structure_names);

  m.def("expand_cycle",
        [](const std::string& name, std::size_t m, std::size_t offset, const std::string& verse) {
          if (verse != "forward" && verse != "reverse")
            throw ConfigError("verse must be 'forward' or 'reverse'");
          return expand_cycle(parse_structure_name(name), m, offset,
                              verse == "forward" ? Verse::forward : Verse::reverse);
        },
        py::arg("name"), py::arg("m"), py::arg("offset") = 0, py::arg("verse") = "forward");

  m.def("recombination_schedule",
        [](const std::string& kind, std::size_t m, std::size_t n_cycles) {
          std::vector<std::pair<std::size_t, std::string>> out;
          for (const auto& s : build_recombination_schedule(parse_recombination(kind), m, n_cycles))
            out.emplace_back(s.offset, to_string(s.verse));
          return out;
        },
        py::arg("kind"), py::arg("m"), py::arg("n_cycles"));

  m.def("expand_plan",
        [](const std::string& name, std::size_t m, std::size_t cycles, const std::string& recomb) {
          return plan_dict(
              assemble_plan(parse_structure_name(name), m, cycles, parse_recombination(recomb)));
        },
        py::arg("name"), py::arg("m"), py::arg("cycles") = 1, py::arg("recomb") = "none");

  m.def("run_search",
        [](const std::string& plan_name, std::size_t m, std::vector<std::size_t> levels,
           std::size_t cycles, const std::string& recomb, const std::string& landscape,
           std::uint64_t seed, const std::string& init,
           std::optional<std::vector<std::size_t>> ordering) {
          const auto space = make_space(m, levels);
          const auto plan = assemble_plan(parse_structure_name(plan_name), m, cycles,
                                          parse_recombination(recomb));
          const auto land = make_landscape(landscape, space, seed);
          const auto order = ordering_or_identity(ordering, m);
          const auto start = initial_point(space, parse_init_policy(init), seed);
          MemoCache cache;
          const auto trace = run_search(space, *land, plan, order, start, cache);
          py::list records;
          for (const auto& r : trace.records) {
            py::dict d;
            d["cycle"] = r.cycle;
            d["iter"] = r.iter;
            d["block"] = r.block;
            d["point"] = r.point.coords;
            d["f"] = r.value;
            d["evals_cum"] = r.evals_cum;
            records.append(d);
          }
          py::dict out;
          out["plan"] = plan.label();
          out["initial_f"] = trace.initial_value;
          out["final_f"] = trace.final_value();
          out["evaluations"] = cache.misses();
          out["cache_hits"] = cache.hits();
          out["records"] = records;
          return out;
        },
        py::arg("plan"), py::arg("m"), py::arg("levels") = std::vector<std::size_t>{3},
        py::arg("cycles") = 1, py::arg("recomb") = "none", py::arg("landscape") = "trap",
        py::arg("seed") = 1, py::arg("init") = "mid", py::arg("ordering") = py::none());

  m.def("brute_force",
        [](std::size_t m, std::vector<std::size_t> levels, const std::string& landscape,
           std::uint64_t seed, std::uint64_t budget, std::size_t bins) {
          const auto space = make_space(m, levels);
          const auto land = make_landscape(landscape, space, seed, budget);
          const auto r = brute_force(space, *land, budget, bins);
          py::dict out;
          out["evaluations"] = r.evaluations;
          out["min"] = r.minimum;
          out["argmin"] = r.argmin.coords;
          out["max"] = r.maximum;
          out["histogram"] = r.histogram.counts;
          return out;
        },
        py::arg("m"), py::arg("levels") = std::vector<std::size_t>{3},
        py::arg("landscape") = "trap", py::arg("seed") = 1, py::arg("budget") = kDefaultBudget,
        py::arg("bins") = 20);

  m.def("indicators",
        [](const std::vector<Block>& blocks, const std::vector<std::size_t>& cards,
           const std::vector<double>& values, const std::string& variants) {
          py::list out;
          for (const auto& r : compute_indicators(blocks, cards, values, IndicatorVariants::parse(variants)))
            out.append(row_dict(r));
          return out;
        },
        py::arg("blocks"), py::arg("cardinalities"), py::arg("values") = std::vector<double>{},
        py::arg("variants") = "");

  m.def("pearson",
        [](const std::vector<double>& x, const std::vector<double>& y) { return pearson(x, y); },
        py::arg("x"), py::arg("y"));
  m.def("random_orderings", &random_orderings, py::arg("m"), py::arg("count"), py::arg("seed"));
  m.def("sign_test", &sign_test, py::arg("wins"), py::arg("losses"));
}
