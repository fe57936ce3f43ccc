#include "bdg/bdg.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace py = pybind11;

namespace {

py::object py_int(const bdg::Int& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

py::object py_frac(const bdg::Rat& r) {
    return py::module_::import("fractions").attr("Fraction")(bdg::rat_to_string(r));
}

bdg::Rat rat_from_object(const py::handle& h) {
    return bdg::rat_from_string(py::str(h).cast<std::string>());
}

std::map<std::string, bdg::Rat> coeffs_from_dict(const py::dict& d) {
    std::map<std::string, bdg::Rat> out;
    for (const auto& [key, value] : d) {
        out.emplace(key.cast<std::string>(), rat_from_object(value));
    }
    return out;
}

py::dict coeffs_to_dict(const bdg::Cycle& z) {
    py::dict out;
    for (const auto& [id, value] : z.coeffs()) {
        out[py::str(id)] = py_frac(value);
    }
    return out;
}

bdg::BoundaryConfig boundary(const bdg::WeightedDualGraph& g, const std::string& c) {
    return bdg::BoundaryConfig(g, c);
}

py::dict graph_with_mark(const bdg::WeightedDualGraph& g, const std::string& c) {
    py::dict out;
    out["graph"] = g;
    out["c"] = c;
    return out;
}

std::string kind_name(bdg::SingularityKind kind) {
    return kind == bdg::SingularityKind::chain ? "chain" : "branched";
}

// Identity trace for a trivial class, full reduction for an ample one.
bdg::ReductionTrace trace_for_z(const bdg::BoundaryConfig& b) {
    const bdg::KClass kc = bdg::classify_K(b);
    if (kc.value == bdg::KValue::trivial) {
        return bdg::identity_trace(b);
    }
    if (kc.value == bdg::KValue::ample) {
        return bdg::reduce_to_trivial(b);
    }
    throw bdg::InputError("no Z cycle: the boundary class is anti-ample");
}

py::dict trace_to_dict(const bdg::ReductionTrace& trace) {
    py::list steps;
    for (const auto& step : trace.steps) {
        py::dict s;
        s["contracted"] = step.contracted_id;
        s["case"] = bdg::to_string(step.tag);
        s["c_pairing"] = step.c_pairing ? py_frac(*step.c_pairing) : py::object(py::none());
        steps.append(std::move(s));
    }
    py::dict out;
    out["steps"] = std::move(steps);
    out["final_graph"] = trace.final.graph;
    out["final_c"] = trace.final.c_id;
    return out;
}

bdg::MoveSequence moves_from_list(const py::list& moves) {
    bdg::MoveSequence out;
    for (const auto& item : moves) {
        const py::tuple t = item.cast<py::tuple>();
        const std::string kind = t[0].cast<std::string>();
        bdg::Move move;
        if (kind == "on") {
            move.kind = bdg::Move::Kind::on_curve;
            move.a = t[1].cast<std::string>();
        } else if (kind == "edge") {
            move.kind = bdg::Move::Kind::at_edge;
            move.a = t[1].cast<std::string>();
            move.b = t[2].cast<std::string>();
        } else {
            throw bdg::InputError("move kind must be 'on' or 'edge', got '" + kind + "'");
        }
        out.push_back(std::move(move));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_bdg, m) {
    m.doc() = "weighted dual graphs of curve configurations, exact arithmetic";

    py::register_exception<bdg::InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<bdg::InvariantViolation>(m, "InvariantViolation",
                                                    PyExc_RuntimeError);

    py::class_<bdg::WeightedDualGraph>(m, "Graph")
        .def(py::init<>())
        .def("add_vertex", &bdg::WeightedDualGraph::add_vertex, py::arg("id"),
             py::arg("weight"), py::arg("label") = "")
        .def("add_edge", &bdg::WeightedDualGraph::add_edge)
        .def("remove_vertex", &bdg::WeightedDualGraph::remove_vertex)
        .def("remove_edge", &bdg::WeightedDualGraph::remove_edge)
        .def("set_weight", &bdg::WeightedDualGraph::set_weight)
        .def("has_vertex", &bdg::WeightedDualGraph::has_vertex)
        .def("has_edge", &bdg::WeightedDualGraph::has_edge)
        .def("weight", &bdg::WeightedDualGraph::weight)
        .def("vertex_ids", &bdg::WeightedDualGraph::vertex_ids)
        .def("edge_list", &bdg::WeightedDualGraph::edge_list)
        .def("neighbors", &bdg::WeightedDualGraph::neighbors)
        .def("degree", &bdg::WeightedDualGraph::degree)
        .def("vertex_count", &bdg::WeightedDualGraph::vertex_count)
        .def("edge_count", &bdg::WeightedDualGraph::edge_count)
        .def("__eq__",
             [](const bdg::WeightedDualGraph& a, const bdg::WeightedDualGraph& b) {
                 return a == b;
             })
        .def("__repr__", [](const bdg::WeightedDualGraph& g) {
            return "<Graph " + std::to_string(g.vertex_count()) + " vertices, " +
                   std::to_string(g.edge_count()) + " edges>";
        });

    m.def("parse_graph_text", [](const std::string& text, const std::string& name) {
        const bdg::ParsedGraph parsed = bdg::parse_graph_text(text, name);
        return py::make_tuple(parsed.graph, parsed.c_id);
    }, py::arg("text"), py::arg("name") = "<input>");
    m.def("parse_graph_file", [](const std::string& path) {
        const bdg::ParsedGraph parsed = bdg::parse_graph_file(path);
        return py::make_tuple(parsed.graph, parsed.c_id);
    });
    m.def("emit_graph_text", &bdg::emit_graph_text, py::arg("graph"),
          py::arg("c") = std::nullopt);

    m.def("determinant_d",
          [](const bdg::WeightedDualGraph& g) { return py_int(bdg::determinant_d(g)); });
    m.def("is_negative_definite", &bdg::is_negative_definite);

    m.def("d_sharp",
          [](const bdg::WeightedDualGraph& g,
             const std::optional<std::set<std::string>>& c_adjacency) {
              const bdg::DSharpResult ds = bdg::compute_d_sharp(g, c_adjacency);
              py::dict out;
              out["alpha"] = coeffs_to_dict(ds.cycle);
              out["integral"] = ds.integral;
              out["c_pairing"] =
                  ds.c_pairing ? py_frac(*ds.c_pairing) : py::object(py::none());
              return out;
          },
          py::arg("graph"), py::arg("c_adjacency") = std::nullopt);

    m.def("pa_genus", [](const bdg::WeightedDualGraph& g, const py::dict& coeffs) {
        return py_frac(bdg::pa_genus(bdg::Cycle(g, coeffs_from_dict(coeffs))));
    });
    m.def("pairing",
          [](const bdg::WeightedDualGraph& g, const py::dict& z1, const py::dict& z2) {
              return py_frac(bdg::pairing(bdg::Cycle(g, coeffs_from_dict(z1)),
                                          bdg::Cycle(g, coeffs_from_dict(z2))));
          });

    m.def("fundamental_cycle", [](const bdg::WeightedDualGraph& g) {
        return coeffs_to_dict(bdg::fundamental_cycle(g));
    });
    m.def("is_rational", [](const bdg::WeightedDualGraph& g) {
        const bdg::SingularityReport report = bdg::is_rational(g);
        py::dict out;
        out["rational"] = report.rational;
        out["pa_fundamental"] = py_int(report.pa_fundamental);
        out["kind"] = kind_name(report.kind);
        out["fundamental"] = coeffs_to_dict(report.fundamental);
        return out;
    });
    m.def("max_pa_bounded", [](const bdg::WeightedDualGraph& g, long long bound) {
        const bdg::MaxPaResult result = bdg::max_pa_bounded(g, bound);
        py::dict out;
        out["max"] = py_int(result.max);
        out["witness"] = coeffs_to_dict(result.witness);
        return out;
    });

    m.def("validate_boundary", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        py::list out;
        for (const auto& check : bdg::validate_boundary(boundary(g, c)).checks) {
            py::dict item;
            item["name"] = check.name;
            item["pass"] = check.pass;
            item["detail"] = check.detail;
            out.append(std::move(item));
        }
        return out;
    });
    m.def("comb_decompose", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        const bdg::CombResult result = bdg::comb_decompose(boundary(g, c));
        py::dict out;
        out["matched"] = result.matched();
        if (result.matched()) {
            out["r"] = result.comb->r;
            out["spine"] = result.comb->spine;
            out["chains"] = result.comb->chains;
            out["twigs"] = result.comb->twigs;
        } else {
            out["violation"] = result.violation;
        }
        return out;
    });
    m.def("classify_k", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        const bdg::KClass kc = bdg::classify_K(boundary(g, c));
        py::dict out;
        out["class"] = bdg::to_string(kc.value);
        out["c_pairing"] = py_frac(kc.c_pairing);
        return out;
    });
    m.def("split_determinants", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        const bdg::SplitDeterminants sd = bdg::split_determinants(boundary(g, c));
        py::dict out;
        out["case"] = sd.case_id;
        out["d_a"] = py_int(sd.d_a);
        out["d_b"] = py_int(sd.d_b);
        out["d_a_cut"] = py_int(sd.d_a_cut);
        out["d_b_cut"] = py_int(sd.d_b_cut);
        out["m"] = sd.m;
        return out;
    });
    m.def("coprime_check", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        return bdg::coprime_check(boundary(g, c));
    });

    m.def("blow_down", &bdg::blow_down);
    m.def("blow_up_on_curve", &bdg::blow_up_on_curve, py::arg("graph"), py::arg("v"),
          py::arg("new_id") = "");
    m.def("blow_up_at_edge", &bdg::blow_up_at_edge, py::arg("graph"), py::arg("a"),
          py::arg("b"), py::arg("new_id") = "");

    m.def("peel_step", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        const bdg::PeelOutcome outcome = bdg::peel_step(boundary(g, c));
        py::dict out = graph_with_mark(outcome.boundary.graph, outcome.boundary.c_id);
        out["case"] = bdg::to_string(outcome.tag);
        return out;
    });
    m.def("reduce_to_trivial", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        return trace_to_dict(bdg::reduce_to_trivial(boundary(g, c)));
    });
    m.def("build_z", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        const bdg::BoundaryConfig b = boundary(g, c);
        return coeffs_to_dict(bdg::build_Z(b, trace_for_z(b)));
    });

    m.def("seed_graph",
          [](long long m) { return bdg::seed_graph(bdg::HirzebruchSeed{m}); });
    m.def("apply_moves", [](long long m, const py::list& moves) {
        const bdg::BoundaryConfig b =
            bdg::apply_sequence(bdg::HirzebruchSeed{m}, moves_from_list(moves));
        return graph_with_mark(b.graph, b.c_id);
    });
    m.def("canonical_form", [](const bdg::WeightedDualGraph& g, const std::string& c) {
        return bdg::canonical_form(boundary(g, c));
    });
    m.def("enumerate_boundaries",
          [](long long m_min, long long m_max, int depth, bool negdef, bool minres,
             const std::optional<std::string>& kclass) {
              bdg::EnumFilters filters;
              filters.negdef = negdef;
              filters.minres = minres;
              if (kclass) {
                  if (*kclass == "anti-ample") {
                      filters.kclass = bdg::KValue::anti_ample;
                  } else if (*kclass == "trivial") {
                      filters.kclass = bdg::KValue::trivial;
                  } else if (*kclass == "ample") {
                      filters.kclass = bdg::KValue::ample;
                  } else {
                      throw bdg::InputError("unknown class filter '" + *kclass + "'");
                  }
              }
              py::list out;
              for (const auto& eb : bdg::enumerate_boundaries(m_min, m_max, depth, filters)) {
                  py::dict row = graph_with_mark(eb.boundary.graph, eb.boundary.c_id);
                  row["canonical"] = eb.canonical;
                  if (eb.kclass) {
                      row["class"] = bdg::to_string(eb.kclass->value);
                      row["c_pairing"] = py_frac(eb.kclass->c_pairing);
                  } else {
                      row["class"] = py::none();
                  }
                  py::list comps;
                  for (const auto& cr : eb.component_rationality) {
                      comps.append(py::make_tuple(cr.component_id, cr.rational));
                  }
                  row["components"] = std::move(comps);
                  out.append(std::move(row));
              }
              return out;
          },
          py::arg("m_min") = 2, py::arg("m_max") = 2, py::arg("depth") = 6,
          py::arg("negdef") = false, py::arg("minres") = false,
          py::arg("kclass") = std::nullopt);

    m.def("corpus_names", [] {
        std::vector<std::string> names;
        for (const auto& entry : bdg::corpus()) {
            names.push_back(entry.name);
        }
        return names;
    });
    m.def("corpus_entry", [](const std::string& name) {
        const bdg::CorpusEntry& entry = bdg::corpus_entry(name);
        py::dict out;
        out["name"] = entry.name;
        out["citation"] = entry.citation;
        out["graph_text"] = entry.graph_text;
        return out;
    });
    m.def("verify_paper", [] {
        py::list out;
        for (const auto& r : bdg::verify_paper()) {
            py::dict item;
            item["name"] = r.name;
            item["pass"] = r.pass;
            item["detail"] = r.detail;
            out.append(std::move(item));
        }
        return out;
    });
}
