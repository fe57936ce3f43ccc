#include "bdg/bdg.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bdg::Int;
using bdg::Rat;
using Json = nlohmann::ordered_json;

struct Output {
    bool json = false;
    bool quiet = false;
    Json obj = Json::object();
    std::vector<std::string> lines;

    void line(const std::string& s) { lines.push_back(s); }

    void flush() const {
        if (quiet) {
            return;
        }
        if (json) {
            std::cout << obj.dump(2) << "\n";
        } else {
            for (const auto& s : lines) {
                std::cout << s << "\n";
            }
        }
    }
};

std::string int_str(const Int& v) {
    return v.str();
}

bdg::ParsedGraph load_graph(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return bdg::parse_graph_text(buffer.str(), "<stdin>");
    }
    return bdg::parse_graph_file(path);
}

// D when a marked curve is present, the whole graph otherwise.
bdg::WeightedDualGraph operand_graph(const bdg::ParsedGraph& parsed) {
    if (parsed.c_id) {
        return bdg::BoundaryConfig(parsed.graph, *parsed.c_id).d_part();
    }
    return parsed.graph;
}

bdg::BoundaryConfig require_marked(const bdg::ParsedGraph& parsed) {
    if (!parsed.c_id) {
        throw bdg::InputError("this command needs a marked curve ('c <id>' line)");
    }
    return bdg::BoundaryConfig(parsed.graph, *parsed.c_id);
}

Json rationality_json(const bdg::WeightedDualGraph& component,
                      const bdg::SingularityReport& report) {
    Json j = Json::object();
    j["id"] = component.vertex_ids().front();
    j["vertices"] = component.vertex_count();
    j["rational"] = report.rational;
    j["pa_fundamental"] = int_str(report.pa_fundamental);
    j["kind"] = report.kind == bdg::SingularityKind::chain ? "chain" : "branched";
    return j;
}

std::string rationality_line(const bdg::WeightedDualGraph& component,
                             const bdg::SingularityReport& report) {
    std::ostringstream os;
    os << "component " << component.vertex_ids().front() << " (" << component.vertex_count()
       << (component.vertex_count() == 1 ? " vertex" : " vertices") << "): "
       << (report.rational ? "rational" : "irrational") << " (pa of fundamental cycle = "
       << int_str(report.pa_fundamental) << ", "
       << (report.kind == bdg::SingularityKind::chain ? "chain" : "branched") << ")";
    return os.str();
}

void report_components(Output& out, const bdg::WeightedDualGraph& g) {
    Json comps = Json::array();
    for (const auto& comp : bdg::connected_components(g)) {
        const bdg::SingularityReport report = bdg::is_rational(comp);
        comps.push_back(rationality_json(comp, report));
        out.line(rationality_line(comp, report));
    }
    out.obj["components"] = std::move(comps);
}

Json cycle_json(const bdg::Cycle& z) {
    Json j = Json::object();
    for (const auto& [id, value] : z.coeffs()) {
        if (value != 0) {
            j[id] = bdg::rat_to_string(value);
        }
    }
    return j;
}

Json steps_json(const bdg::ReductionTrace& trace) {
    Json steps = Json::array();
    for (const auto& step : trace.steps) {
        Json j = Json::object();
        j["contracted"] = step.contracted_id;
        j["case"] = bdg::to_string(step.tag);
        if (step.c_pairing) {
            j["c_pairing"] = bdg::rat_to_string(*step.c_pairing);
        } else {
            j["c_pairing"] = nullptr;
        }
        steps.push_back(std::move(j));
    }
    return steps;
}

bdg::ReductionTrace trace_for_z(const bdg::BoundaryConfig& b) {
    const bdg::KClass kc = bdg::classify_K(b);
    switch (kc.value) {
        case bdg::KValue::trivial:
            return bdg::identity_trace(b);
        case bdg::KValue::ample:
            return bdg::reduce_to_trivial(b);
        case bdg::KValue::anti_ample:
            break;
    }
    throw bdg::InputError("no Z cycle: the boundary class is anti-ample");
}

int run(int argc, char** argv) {
    CLI::App app{"weighted dual graph toolkit for curve configurations"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    int exit_code = 0;
    app.add_flag("--json", out.json, "emit JSON instead of text");
    app.add_flag("--quiet", out.quiet, "suppress normal output");

    std::string file;
    std::string cycle_literal;
    long long bound = 0;
    std::string trace_path;
    std::string m_range = "2..2";
    int depth = 6;
    std::vector<std::string> filter_names;
    bool with_classes = false;
    std::string jsonl_path;

    auto add_file = [&file](CLI::App* cmd) {
        cmd->add_option("file", file, "graph file in the text format, or - for stdin")
            ->required();
    };

    auto* det = app.add_subcommand("det", "determinant d = det(-(intersection matrix))");
    add_file(det);
    det->callback([&] {
        const bdg::ParsedGraph parsed = load_graph(file);
        const Int d_whole = bdg::determinant_d(parsed.graph);
        out.obj["d"] = int_str(d_whole);
        if (parsed.c_id) {
            const Int d_d = bdg::determinant_d(require_marked(parsed).d_part());
            out.line("d(C+D) = " + int_str(d_whole));
            out.line("d(D) = " + int_str(d_d));
            out.obj["d_d"] = int_str(d_d);
        } else {
            out.line("d = " + int_str(d_whole));
        }
    });

    auto* negdef = app.add_subcommand(
        "negdef", "check negative definiteness (of D when a curve is marked)");
    add_file(negdef);
    negdef->callback([&] {
        const bool value = bdg::is_negative_definite(operand_graph(load_graph(file)));
        out.line(value ? "negative definite" : "not negative definite");
        out.obj["negative_definite"] = value;
        if (!value) {
            exit_code = 1;
        }
    });

    auto* dsharp = app.add_subcommand(
        "dsharp", "anti-canonical cycle coefficients (of D when a curve is marked)");
    add_file(dsharp);
    dsharp->callback([&] {
        const bdg::ParsedGraph parsed = load_graph(file);
        std::optional<std::set<std::string>> c_adjacency;
        bdg::WeightedDualGraph g = parsed.graph;
        if (parsed.c_id) {
            const bdg::BoundaryConfig b = require_marked(parsed);
            const auto nbs = b.c_neighbors();
            c_adjacency.emplace(nbs.begin(), nbs.end());
            g = b.d_part();
        }
        const bdg::DSharpResult ds = bdg::compute_d_sharp(g, c_adjacency);
        Json alpha = Json::object();
        for (const auto& [id, value] : ds.cycle.coeffs()) {
            alpha[id] = bdg::rat_to_string(value);
            out.line("alpha[" + id + "] = " + bdg::rat_to_string(value));
        }
        out.obj["alpha"] = std::move(alpha);
        out.obj["integral"] = ds.integral;
        out.line(std::string("integral = ") + (ds.integral ? "true" : "false"));
        if (ds.c_pairing) {
            out.obj["c_pairing"] = bdg::rat_to_string(*ds.c_pairing);
            out.line("c_pairing = " + bdg::rat_to_string(*ds.c_pairing));
        }
    });

    auto* pa = app.add_subcommand("pa", "arithmetic genus of an integer cycle");
    add_file(pa);
    pa->add_option("--cycle", cycle_literal, "coefficients, e.g. D1=2,D2=5")->required();
    pa->callback([&] {
        const bdg::ParsedGraph parsed = load_graph(file);
        const bdg::Cycle z(parsed.graph,
                           bdg::parse_cycle_literal(parsed.graph, cycle_literal));
        const Rat value = bdg::pa_genus(z);
        out.line("pa = " + bdg::rat_to_string(value));
        out.obj["pa"] = bdg::rat_to_string(value);
    });

    auto* rational = app.add_subcommand(
        "rational",
        "rationality of each connected component (of D when a curve is marked)");
    add_file(rational);
    rational->callback([&] {
        report_components(out, operand_graph(load_graph(file)));
    });

    auto* maxpa = app.add_subcommand(
        "maxpa", "maximum arithmetic genus over full-support cycles with bounded coefficients");
    add_file(maxpa);
    maxpa->add_option("--bound", bound, "largest coefficient to try")
        ->required()
        ->check(CLI::PositiveNumber);
    maxpa->callback([&] {
        const bdg::WeightedDualGraph g = operand_graph(load_graph(file));
        const bdg::MaxPaResult result = bdg::max_pa_bounded(g, bound);
        out.line("max pa = " + int_str(result.max));
        out.line("witness: " + bdg::emit_cycle_literal(result.witness));
        out.obj["bound"] = bound;
        out.obj["max"] = int_str(result.max);
        out.obj["witness"] = cycle_json(result.witness);
    });

    auto* classify = app.add_subcommand(
        "classify", "canonical class trichotomy of a marked boundary");
    add_file(classify);
    classify->callback([&] {
        const bdg::BoundaryConfig b = require_marked(load_graph(file));
        const bdg::KClass kc = bdg::classify_K(b);
        out.line("class = " + bdg::to_string(kc.value));
        out.line("c_pairing = " + bdg::rat_to_string(kc.c_pairing));
        out.obj["class"] = bdg::to_string(kc.value);
        out.obj["c_pairing"] = bdg::rat_to_string(kc.c_pairing);
        report_components(out, b.d_part());
    });

    auto* reduce = app.add_subcommand(
        "reduce", "contract a marked ample boundary until the class is trivial");
    add_file(reduce);
    reduce->add_option("--trace", trace_path, "also write the step list to this JSON file");
    reduce->callback([&] {
        const bdg::BoundaryConfig b = require_marked(load_graph(file));
        const bdg::ReductionTrace trace = bdg::reduce_to_trivial(b);
        int n = 0;
        for (const auto& step : trace.steps) {
            std::ostringstream os;
            os << "step " << ++n << ": contract " << step.contracted_id << " (case "
               << bdg::to_string(step.tag) << ")";
            if (step.c_pairing) {
                os << ", c = " << bdg::rat_to_string(*step.c_pairing);
            }
            out.line(os.str());
        }
        const std::string final_text =
            bdg::emit_graph_text(trace.final.graph, trace.final.c_id);
        out.line("final:");
        {
            std::istringstream is(final_text);
            std::string graph_line;
            while (std::getline(is, graph_line)) {
                out.line(graph_line);
            }
        }
        out.obj["steps"] = steps_json(trace);
        out.obj["final_graph"] = final_text;
        out.obj["final_c"] = trace.final.c_id;
        if (!trace_path.empty()) {
            Json doc = Json::object();
            doc["steps"] = steps_json(trace);
            doc["final_graph"] = final_text;
            doc["final_c"] = trace.final.c_id;
            std::ofstream f(trace_path);
            if (!f) {
                throw bdg::InputError("cannot write '" + trace_path + "'");
            }
            f << doc.dump(2) << "\n";
        }
    });

    auto* buildz = app.add_subcommand(
        "buildz", "integer cycle of arithmetic genus one on the branched component");
    add_file(buildz);
    buildz->callback([&] {
        const bdg::BoundaryConfig b = require_marked(load_graph(file));
        const bdg::Cycle z = bdg::build_Z(b, trace_for_z(b));
        out.line(bdg::emit_cycle_literal(z));
        out.obj["z"] = cycle_json(z);
        out.obj["pa"] = bdg::rat_to_string(bdg::pa_genus(z));
    });

    auto* shape = app.add_subcommand(
        "shape", "comb decomposition of a marked boundary tree");
    add_file(shape);
    shape->callback([&] {
        const bdg::BoundaryConfig b = require_marked(load_graph(file));
        const bdg::CombResult result = bdg::comb_decompose(b);
        if (!result.matched()) {
            out.line("no match: " + result.violation);
            out.obj["matched"] = false;
            out.obj["violation"] = result.violation;
            exit_code = 1;
            return;
        }
        const bdg::CombDecomposition& comb = *result.comb;
        out.obj["matched"] = true;
        out.obj["r"] = comb.r;
        out.obj["spine"] = comb.spine;
        Json chains = Json::array();
        Json twigs = Json::array();
        out.line("r = " + std::to_string(comb.r));
        std::ostringstream spine_os;
        for (const auto& id : comb.spine) {
            spine_os << " " << id;
        }
        out.line("spine:" + spine_os.str());
        for (std::size_t i = 0; i < comb.chains.size(); ++i) {
            chains.push_back(comb.chains[i]);
            twigs.push_back(comb.twigs[i]);
            std::ostringstream os;
            os << "group " << i << ": s = " << comb.chains[i].size() << " [";
            for (std::size_t j = 0; j < comb.chains[i].size(); ++j) {
                os << (j ? " " : "") << comb.chains[i][j];
            }
            os << "], t = " << comb.twigs[i].size() << " [";
            for (std::size_t j = 0; j < comb.twigs[i].size(); ++j) {
                os << (j ? " " : "") << comb.twigs[i][j];
            }
            os << "]";
            out.line(os.str());
        }
        out.obj["chains"] = std::move(chains);
        out.obj["twigs"] = std::move(twigs);
    });

    auto* enumerate = app.add_subcommand(
        "enumerate", "build boundaries from ruled-surface seeds by local blow-ups");
    enumerate->add_option("--m", m_range, "seed range, e.g. 2..4")->capture_default_str();
    enumerate->add_option("--depth", depth, "number of blow-ups")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    enumerate->add_option("--filter", filter_names,
                          "comma-separated: negdef, minres, anti-ample, trivial, ample")
        ->delimiter(',');
    enumerate->add_flag("--classify", with_classes,
                        "include class and component rationality");
    enumerate
        ->add_option("--json", jsonl_path,
                     "write JSON lines to a file, or JSON to stdout when no path is given")
        ->expected(0, 1);
    enumerate->callback([&] {
        long long m_min = 0;
        long long m_max = 0;
        const auto dots = m_range.find("..");
        try {
            if (dots == std::string::npos) {
                m_min = m_max = std::stoll(m_range);
            } else {
                m_min = std::stoll(m_range.substr(0, dots));
                m_max = std::stoll(m_range.substr(dots + 2));
            }
        } catch (const std::exception&) {
            throw bdg::InputError("cannot read seed range '" + m_range + "'");
        }
        bdg::EnumFilters filters;
        for (const auto& name : filter_names) {
            if (name == "negdef") {
                filters.negdef = true;
            } else if (name == "minres") {
                filters.minres = true;
            } else if (name == "anti-ample") {
                filters.kclass = bdg::KValue::anti_ample;
            } else if (name == "trivial") {
                filters.kclass = bdg::KValue::trivial;
            } else if (name == "ample") {
                filters.kclass = bdg::KValue::ample;
            } else {
                throw bdg::InputError("unknown filter '" + name + "'");
            }
        }
        const auto boundaries = bdg::enumerate_boundaries(m_min, m_max, depth, filters);
        const bool emit_jsonl = enumerate->count("--json") > 0;
        Json rows = Json::array();
        for (const auto& eb : boundaries) {
            Json row = Json::object();
            row["canonical"] = eb.canonical;
            row["vertices"] = eb.boundary.graph.vertex_count();
            row["graph"] = bdg::emit_graph_text(eb.boundary.graph, eb.boundary.c_id);
            row["c"] = eb.boundary.c_id;
            if (with_classes) {
                if (eb.kclass) {
                    row["class"] = bdg::to_string(eb.kclass->value);
                    row["c_pairing"] = bdg::rat_to_string(eb.kclass->c_pairing);
                } else {
                    row["class"] = nullptr;
                }
                Json comps = Json::array();
                for (const auto& cr : eb.component_rationality) {
                    Json c = Json::object();
                    c["id"] = cr.component_id;
                    c["rational"] = cr.rational;
                    comps.push_back(std::move(c));
                }
                row["components"] = std::move(comps);
            }
            rows.push_back(std::move(row));

            std::ostringstream os;
            os << eb.boundary.graph.vertex_count() << " vertices  " << eb.canonical;
            if (with_classes && eb.kclass) {
                os << "  class=" << bdg::to_string(eb.kclass->value);
            }
            out.line(os.str());
        }
        out.line("total: " + std::to_string(boundaries.size()));
        out.obj["count"] = boundaries.size();
        out.obj["boundaries"] = rows;
        if (emit_jsonl) {
            if (jsonl_path.empty()) {
                out.json = true;
            } else {
                std::ofstream f(jsonl_path);
                if (!f) {
                    throw bdg::InputError("cannot write '" + jsonl_path + "'");
                }
                for (const auto& row : out.obj["boundaries"]) {
                    f << row.dump() << "\n";
                }
            }
        }
    });

    auto* verify = app.add_subcommand(
        "verify-paper", "replay the recorded corpus expectations");
    verify->callback([&] {
        const auto results = bdg::verify_paper();
        Json rows = Json::array();
        for (const auto& r : results) {
            const std::string citation = bdg::corpus_entry(r.name).citation;
            std::ostringstream os;
            os << (r.pass ? "PASS" : "FAIL") << " " << r.name << " (" << citation << ")";
            if (!r.pass) {
                os << ": " << r.detail;
                exit_code = 1;
            }
            out.line(os.str());
            Json row = Json::object();
            row["name"] = r.name;
            row["citation"] = citation;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            rows.push_back(std::move(row));
        }
        out.obj["results"] = std::move(rows);
        out.obj["all_pass"] = exit_code == 0;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bdg::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const bdg::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    }
    out.flush();
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
