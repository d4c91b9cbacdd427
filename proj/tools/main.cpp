// selfsim: batch CLI over the library. One JSON system definition in,
// one machine-readable result out; exit codes: 0 success, 1 inconclusive
// or nothing found, 2 parse/validation error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "selfsim/digit.hpp"
#include "selfsim/gaps.hpp"
#include "selfsim/ifs.hpp"
#include "selfsim/json_io.hpp"
#include "selfsim/measurability.hpp"
#include "selfsim/neighbor.hpp"
#include "selfsim/openset.hpp"

namespace {

using namespace selfsim;

constexpr int kOk = 0;
constexpr int kNone = 1;
constexpr int kUsage = 2;

struct GlobalOpts {
    std::string input = "-";
    std::string format = "json";
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

SystemInput load_system(const GlobalOpts& g) {
    return parse_system_text(read_all(g.input));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int emit_result(const std::string& command, Json body, int status) {
    Json out = make_result(command, std::move(body));
    out["status"] = status;
    emit(out);
    return status;
}

std::vector<Rational> parse_grid(const std::string& grid) {
    std::vector<Rational> out;
    std::stringstream ss(grid);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(parse_rational(item));
        }
    }
    if (out.empty()) {
        throw std::invalid_argument("empty epsilon grid");
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Rational default_dim_width() {
    return parse_rational("1/1000000000000000000000000000000");  // 1e-30
}

std::string verdict_name(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::NotMeasurableLattice: return "NotMeasurableLattice";
        case VerdictStatus::MeasurableNonlattice: return "MeasurableNonlattice";
        case VerdictStatus::MeasurableTrivial: return "MeasurableTrivial";
        case VerdictStatus::Inconclusive: return "Inconclusive";
    }
    return "Inconclusive";
}

std::string lattice_name(LatticeClass::Tag t) {
    switch (t) {
        case LatticeClass::Tag::Lattice: return "lattice";
        case LatticeClass::Tag::Nonlattice: return "nonlattice";
        case LatticeClass::Tag::Unknown: return "unknown";
    }
    return "unknown";
}

std::string boundary_name(BoundaryVerdict v) {
    switch (v) {
        case BoundaryVerdict::Empty: return "empty";
        case BoundaryVerdict::Finite: return "finite";
        case BoundaryVerdict::CountablyInfinite: return "countably-infinite";
        case BoundaryVerdict::Uncountable: return "uncountable";
    }
    return "empty";
}

Json feasibility_json(const FeasibilityCheck& fc) {
    Json out;
    out["feasible"] = fc.feasible;
    switch (fc.failure) {
        case FeasibilityCheck::Failure::None: out["failure"] = "none"; break;
        case FeasibilityCheck::Failure::NotContained:
            out["failure"] = "not-contained";
            out["letter"] = fc.j;
            break;
        case FeasibilityCheck::Failure::Overlap:
            out["failure"] = "overlap";
            out["pair"] = Json::array({fc.i, fc.j});
            break;
    }
    if (!fc.witness.empty()) {
        out["witness"] = interval_set_json(fc.witness);
    }
    return out;
}

Json dimension_json(const DimensionEnclosure& dim) {
    Json out = enclosure_json(dim.value);
    out["width_requested"] = rational_json(dim.requested_width);
    return out;
}

Json piecewise_json(const PiecewisePower& pp) {
    Json out;
    out["domain"] = Json{{"lo", rational_json(pp.domain_lo)},
                         {"hi", rational_json(pp.domain_hi)}};
    out["base"] = rational_json(pp.base);
    Json pieces = Json::array();
    for (const PowerPiece& piece : pp.pieces) {
        pieces.push_back(Json{{"lo", rational_json(piece.lo)},
                              {"hi", rational_json(piece.hi)},
                              {"a", enclosure_json(piece.coef_a)},
                              {"b", enclosure_json(piece.coef_b)}});
    }
    out["pieces"] = std::move(pieces);
    Json bps = Json::array();
    for (const BreakpointInfo& bp : pp.breakpoints) {
        bps.push_back(Json{{"epsilon", rational_json(bp.eps)},
                           {"gap_index", bp.gap_index},
                           {"level", bp.level}});
    }
    out["breakpoints"] = std::move(bps);
    out["tail_upper"] = pp.tail.upper_string();
    return out;
}

// Selects and certifies an open set per the --open-set argument.
// Returns nullopt (with a reason) when the search comes up empty.
std::optional<OpenSetRep> select_open_set(const IFS& ifs, const std::string& choice,
                                          int max_m, int max_depth,
                                          int truncation_depth, std::string& reason) {
    if (choice == "auto") {
        if (auto m = find_feasible_convex_iterate(ifs, max_m)) {
            return OpenSetRep::finite_union(convex_iterate(ifs, *m), true);
        }
        if (auto cert = construct_U_lambda(ifs, max_m, max_depth)) {
            return OpenSetRep::u_lambda(cert->lambda, cert->m, truncation_depth, true);
        }
        reason = "no feasible open set found within the search budget";
        return std::nullopt;
    }
    if (choice.rfind("convex:", 0) == 0) {
        int m = std::stoi(choice.substr(7));
        if (m < 0) {
            throw std::invalid_argument("convex:m needs m >= 0");
        }
        IntervalSet o = convex_iterate(ifs, m);
        FeasibilityCheck fc = check_feasible(ifs, o);
        if (!fc.feasible) {
            reason = "requested iterated convex hull is not feasible";
            return std::nullopt;
        }
        return OpenSetRep::finite_union(std::move(o), true);
    }
    if (choice == "ulambda") {
        if (auto cert = construct_U_lambda(ifs, max_m, max_depth)) {
            return OpenSetRep::u_lambda(cert->lambda, cert->m, truncation_depth, true);
        }
        reason = "no certified generating word family found within the budget";
        return std::nullopt;
    }
    throw std::invalid_argument("--open-set must be auto, convex:m, or ulambda");
}

void write_csv_header() { std::cout << "epsilon,value_lo,value_hi\n"; }

void write_csv_row(const Rational& eps, const Enclosure& value) {
    Enclosure e = Enclosure::from_rational(eps);
    std::cout << e.lower_string() << "," << value.lower_string() << ","
              << value.upper_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry and Minkowski measurability of self-similar "
                 "subsets of the line"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("-i,--input", g.input,
                   "JSON system definition file ('-' for stdin)");
    app.add_option("-f,--format", g.format, "output format: json, csv, or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));

    // dim
    auto* cmd_dim = app.add_subcommand("dim", "Minkowski dimension enclosure");
    std::string dim_width = "1/1000000000000000000000000000000";
    cmd_dim->add_option("--width", dim_width, "target enclosure width (rational)");

    // lattice
    auto* cmd_lattice = app.add_subcommand("lattice", "lattice/nonlattice classification");

    // gaps
    auto* cmd_gaps = app.add_subcommand("gaps", "gaps longer than a threshold");
    std::string gaps_min;
    cmd_gaps->add_option("--min-length", gaps_min, "length threshold (rational, > 0)")
        ->required();

    // volume
    auto* cmd_volume = app.add_subcommand("volume", "exact parallel volume");
    std::string vol_eps, vol_grid;
    cmd_volume->add_option("--epsilon", vol_eps, "single epsilon (rational)");
    cmd_volume->add_option("--grid", vol_grid, "comma-separated epsilon list");

    // pfunction
    auto* cmd_pf = app.add_subcommand("pfunction", "renewal criterion function");
    std::string pf_open_set = "auto";
    int pf_samples = 0, pf_max_m = 8, pf_max_depth = 8, pf_trunc = 8;
    std::string pf_min_gap, pf_width = dim_width;
    cmd_pf->add_option("--open-set", pf_open_set, "auto, convex:m, or ulambda");
    cmd_pf->add_option("--samples", pf_samples, "number of evaluation samples");
    cmd_pf->add_option("--max-m", pf_max_m, "word-family search budget");
    cmd_pf->add_option("--max-depth", pf_max_depth, "certification depth budget");
    cmd_pf->add_option("--truncation-depth", pf_trunc, "generator truncation depth");
    cmd_pf->add_option("--min-gap", pf_min_gap,
                       "assumed minimal undiscovered component length (rational)");
    cmd_pf->add_option("--width", pf_width, "dimension enclosure width (rational)");

    // verdict
    auto* cmd_verdict = app.add_subcommand("verdict", "Minkowski measurability verdict");

    // feasible
    auto* cmd_feasible = app.add_subcommand("feasible", "open set condition check "
                                            "for iterated convex hulls");
    int fe_m = -1, fe_search = -1;
    cmd_feasible->add_option("--m", fe_m, "check the m-fold image of the open hull");
    cmd_feasible->add_option("--search", fe_search, "search smallest feasible m <= max");

    // construct-open-set
    auto* cmd_cos = app.add_subcommand("construct-open-set",
                                       "search for a certified generating word family");
    int cos_max_m = 3, cos_max_depth = 8;
    cmd_cos->add_option("--max-m", cos_max_m, "maximum total word length");
    cmd_cos->add_option("--max-depth", cos_max_depth, "certification depth budget");

    // neighbor-graph
    auto* cmd_ng = app.add_subcommand("neighbor-graph", "neighbor maps and boundary "
                                      "classification");
    int ng_max_vertices = 512;
    std::string ng_dot;
    cmd_ng->add_option("--max-vertices", ng_max_vertices, "vertex budget");
    cmd_ng->add_option("--dot", ng_dot, "also write DOT to this file");

    // osc-check
    auto* cmd_osc = app.add_subcommand("osc-check", "digit-system separation tests");
    std::string osc_mode = "mod";
    int osc_depth = 16;
    cmd_osc->add_option("--mode", osc_mode, "mod or helau")
        ->check(CLI::IsMember({"mod", "helau"}));
    cmd_osc->add_option("--depth", osc_depth, "search depth for --mode helau");

    // overlap-example
    auto* cmd_ov = app.add_subcommand("overlap-example", "overlapping word images in "
                                      "the base-4 {0,1,6} system");
    int ov_k = 0;
    cmd_ov->add_option("--k", ov_k, "index of the word pair (k >= 0)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_dim->parsed()) {
            SystemInput in = load_system(g);
            DimensionEnclosure dim = moran_dimension(in.ifs, parse_rational(dim_width));
            Json body;
            body["system"] = system_json(in);
            body["dimension"] = dimension_json(dim);
            return emit_result("dim", std::move(body), kOk);
        }

        if (cmd_lattice->parsed()) {
            SystemInput in = load_system(g);
            LatticeClass lat = lattice_classify(in.ifs);
            Json body;
            body["system"] = system_json(in);
            body["tag"] = lattice_name(lat.tag);
            if (lat.tag == LatticeClass::Tag::Lattice) {
                body["base"] = rational_json(lat.base);
                body["exponents"] = lat.exponents;
            }
            return emit_result("lattice", std::move(body),
                               lat.tag == LatticeClass::Tag::Unknown ? kNone : kOk);
        }

        if (cmd_gaps->parsed()) {
            SystemInput in = load_system(g);
            GapList list = gaps_above(in.ifs, parse_rational(gaps_min));
            Json body;
            body["system"] = system_json(in);
            body["theta"] = rational_json(list.theta);
            Json arr = Json::array();
            for (const Gap& gap : list.gaps) {
                arr.push_back(Json{{"interval", interval_json(gap.interval)},
                                   {"length", rational_json(gap.length)}});
            }
            body["gaps"] = std::move(arr);
            return emit_result("gaps", std::move(body), kOk);
        }

        if (cmd_volume->parsed()) {
            SystemInput in = load_system(g);
            std::vector<Rational> grid;
            if (!vol_eps.empty()) {
                grid.push_back(parse_rational(vol_eps));
            } else if (!vol_grid.empty()) {
                grid = parse_grid(vol_grid);
            } else {
                throw std::invalid_argument("volume needs --epsilon or --grid");
            }
            std::vector<std::pair<Rational, Rational>> rows;
            for (const Rational& eps : grid) {
                rows.emplace_back(eps, parallel_volume(in.ifs, eps));
            }
            if (g.format == "csv") {
                write_csv_header();
                for (const auto& [eps, vol] : rows) {
                    write_csv_row(eps, Enclosure::from_rational(vol));
                }
                return kOk;
            }
            Json body;
            body["system"] = system_json(in);
            Json arr = Json::array();
            for (const auto& [eps, vol] : rows) {
                arr.push_back(Json{{"epsilon", rational_json(eps)},
                                   {"volume", rational_json(vol)}});
            }
            body["samples"] = std::move(arr);
            return emit_result("volume", std::move(body), kOk);
        }

        if (cmd_pf->parsed()) {
            SystemInput in = load_system(g);
            DimensionEnclosure dim = moran_dimension(in.ifs, parse_rational(pf_width));
            LatticeClass lat = lattice_classify(in.ifs);
            std::string reason;
            auto rep = select_open_set(in.ifs, pf_open_set, pf_max_m, pf_max_depth,
                                       pf_trunc, reason);
            if (!rep) {
                return emit_result("pfunction", Json{{"reason", reason}}, kNone);
            }
            GeneratorData gen = generator_data(in.ifs, *rep);
            Rational min_gap =
                pf_min_gap.empty() ? Rational(0) : parse_rational(pf_min_gap);
            PiecewisePower pp = gen.finite ? p_function(in.ifs, gen, dim, lat)
                                           : p_truncated(in.ifs, gen, dim, lat, min_gap);
            int samples = pf_samples;
            if (g.format == "csv" && samples <= 0) {
                samples = 64;
            }
            std::vector<std::pair<Rational, Enclosure>> rows;
            Rational span = pp.domain_hi - pp.domain_lo;
            for (int k = 1; k <= samples; ++k) {
                Rational eps = pp.domain_lo + span * Rational(k) / Rational(samples);
                rows.emplace_back(eps, pp.eval(eps));
            }
            if (g.format == "csv") {
                write_csv_header();
                for (const auto& [eps, value] : rows) {
                    write_csv_row(eps, value);
                }
                return kOk;
            }
            Json body;
            body["system"] = system_json(in);
            body["dimension"] = dimension_json(dim);
            body["pfunction"] = piecewise_json(pp);
            Extrema ex = p_extrema(pp);
            body["extrema"] = Json{{"min", enclosure_json(ex.min_value)},
                                   {"max", enclosure_json(ex.max_value)},
                                   {"arg_min", enclosure_json(ex.arg_min)},
                                   {"arg_max", enclosure_json(ex.arg_max)}};
            body["amplitude"] = enclosure_json(amplitude(pp));
            if (samples > 0) {
                Json arr = Json::array();
                for (const auto& [eps, value] : rows) {
                    arr.push_back(Json{{"epsilon", rational_json(eps)},
                                       {"value", enclosure_json(value)}});
                }
                body["samples"] = std::move(arr);
            }
            return emit_result("pfunction", std::move(body), kOk);
        }

        if (cmd_verdict->parsed()) {
            SystemInput in = load_system(g);
            Verdict v = compute_verdict(in.ifs);
            Json body;
            body["system"] = system_json(in);
            body["verdict"] = verdict_name(v.status);
            body["lattice"] = lattice_name(v.lattice.tag);
            if (v.dim) {
                body["dimension"] = dimension_json(*v.dim);
            }
            if (v.amplitude) {
                body["amplitude"] = enclosure_json(*v.amplitude);
            }
            if (v.content) {
                body["content"] = rational_json(*v.content);
            }
            if (v.content_estimate) {
                body["content_estimate"] = *v.content_estimate;
                body["content_estimate_certified"] = false;
            }
            body["osc_certified"] = v.osc_certified;
            body["note"] = v.note;
            return emit_result("verdict", std::move(body),
                               v.status == VerdictStatus::Inconclusive ? kNone : kOk);
        }

        if (cmd_feasible->parsed()) {
            SystemInput in = load_system(g);
            if ((fe_m < 0) == (fe_search < 0)) {
                throw std::invalid_argument("feasible needs exactly one of --m or --search");
            }
            Json body;
            body["system"] = system_json(in);
            if (fe_search >= 0) {
                auto m = find_feasible_convex_iterate(in.ifs, fe_search);
                if (m) {
                    body["m"] = *m;
                    return emit_result("feasible", std::move(body), kOk);
                }
                body["reason"] = "no iterated convex hull is feasible within the budget";
                return emit_result("feasible", std::move(body), kNone);
            }
            FeasibilityCheck fc = check_feasible(in.ifs, convex_iterate(in.ifs, fe_m));
            body["m"] = fe_m;
            body.update(feasibility_json(fc));
            return emit_result("feasible", std::move(body), fc.feasible ? kOk : kNone);
        }

        if (cmd_cos->parsed()) {
            SystemInput in = load_system(g);
            Json body;
            body["system"] = system_json(in);
            auto cert = construct_U_lambda(in.ifs, cos_max_m, cos_max_depth);
            if (!cert) {
                body["reason"] = "no certified generating word family within the budget";
                return emit_result("construct-open-set", std::move(body), kNone);
            }
            Json words = Json::array();
            for (const Word& w : cert->lambda) {
                words.push_back(word_json(w));
            }
            body["lambda"] = std::move(words);
            body["m"] = cert->m;
            body["verified_depth"] = cert->verified_depth;
            return emit_result("construct-open-set", std::move(body), kOk);
        }

        if (cmd_ng->parsed()) {
            SystemInput in = load_system(g);
            NeighborGraph graph = neighbor_graph(in.ifs, ng_max_vertices);
            if (!ng_dot.empty()) {
                std::ofstream out(ng_dot);
                if (!out) {
                    throw std::invalid_argument("cannot write DOT file: " + ng_dot);
                }
                out << to_dot(graph);
            }
            if (g.format == "dot") {
                std::cout << to_dot(graph);
                return graph.incomplete ? kNone : kOk;
            }
            Json body;
            body["system"] = system_json(in);
            body["vertices"] = graph.vertices.size();
            body["edges"] = graph.edges.size();
            body["incomplete"] = graph.incomplete;
            body["identity_found"] = graph.identity_found;
            if (!graph.incomplete) {
                BoundaryClassification cls = classify(graph);
                body["classification"] = Json{{"verdict", boundary_name(cls.verdict)},
                                              {"reason", cls.reason}};
                body["trimmed_vertices"] = cls.trimmed_vertices;
                body["trimmed_edges"] = cls.trimmed_edges;
            }
            return emit_result("neighbor-graph", std::move(body),
                               graph.incomplete ? kNone : kOk);
        }

        if (cmd_osc->parsed()) {
            SystemInput in = load_system(g);
            if (!in.digits) {
                throw std::invalid_argument(
                    "osc-check requires the digit-system input form");
            }
            Json body;
            body["system"] = system_json(in);
            if (osc_mode == "mod") {
                ModCheck mc = osc_mod_check(*in.digits);
                if (!mc.applicable) {
                    throw std::invalid_argument(
                        "residue test needs integer base and digits; "
                        "use --mode helau");
                }
                body["distinct_residues"] = mc.distinct_residues;
                if (mc.distinct_residues) {
                    body["osc"] = "holds";
                    return emit_result("osc-check", std::move(body), kOk);
                }
                body["osc"] = "inconclusive";
                body["collision"] = Json::array({mc.i, mc.j});
                return emit_result("osc-check", std::move(body), kNone);
            }
            SeparationCheck sc = osc_helau_check(*in.digits, osc_depth);
            body["depth_reached"] = sc.depth_reached;
            body["stabilized"] = sc.stabilized;
            body["min_difference"] = rational_json(sc.min_difference);
            switch (sc.result) {
                case SeparationCheck::Result::Holds:
                    body["osc"] = "holds";
                    return emit_result("osc-check", std::move(body), kOk);
                case SeparationCheck::Result::Fails:
                    body["osc"] = "fails";
                    body["witness_u"] = word_json(sc.witness_u);
                    body["witness_v"] = word_json(sc.witness_v);
                    return emit_result("osc-check", std::move(body), kOk);
                case SeparationCheck::Result::Inconclusive:
                    body["osc"] = "inconclusive";
                    return emit_result("osc-check", std::move(body), kNone);
            }
        }

        if (cmd_ov->parsed()) {
            OverlapExample ex = example_overlap(ov_k);
            Json body;
            SystemInput in{to_ifs(ex.system), ex.system};
            body["system"] = system_json(in);
            body["k"] = ov_k;
            body["u"] = word_json(ex.u);
            body["v"] = word_json(ex.v);
            body["image_u"] = interval_json(ex.image_u);
            body["image_v"] = interval_json(ex.image_v);
            body["endpoint_difference"] = rational_json(ex.endpoint_difference);
            body["overlap_length"] = rational_json(ex.overlap_length);
            body["interval_length"] = rational_json(ex.interval_length);
            return emit_result("overlap-example", std::move(body), kOk);
        }
    } catch (const std::invalid_argument& e) {
        emit(Json{{"schema", "v1"}, {"error", e.what()}, {"status", kUsage}});
        return kUsage;
    } catch (const std::domain_error& e) {
        emit(Json{{"schema", "v1"}, {"error", e.what()}, {"status", kUsage}});
        return kUsage;
    } catch (const std::exception& e) {
        emit(Json{{"schema", "v1"}, {"error", e.what()}, {"status", kUsage}});
        return kUsage;
    }
    return kUsage;
}
