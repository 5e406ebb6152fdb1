#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "vab/betti.hpp"
#include "vab/changepoint.hpp"
#include "vab/csv.hpp"
#include "vab/depth.hpp"
#include "vab/filtration.hpp"
#include "vab/graph_stats.hpp"
#include "vab/ledger.hpp"
#include "vab/metrics.hpp"
#include "vab/persistence.hpp"
#include "vab/simgen.hpp"

using nlohmann::json;

namespace {

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

// Writes to `path`, or stdout when it is empty or "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
    if (path.empty() || path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    fn(out);
}

json number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    return x;
}

double parse_q(const std::string& s) {
    if (s == "inf") return vab::kInfinity;
    return vab::parse_number(s, 0);
}

vab::GroundNorm parse_norm(const std::string& s) {
    if (s == "1") return vab::GroundNorm::L1;
    if (s == "2") return vab::GroundNorm::L2;
    if (s == "inf") return vab::GroundNorm::LInf;
    throw std::invalid_argument("ground norm must be 1, 2 or inf");
}

vab::AttributedGraph load_graph(const std::string& edges, const std::string& attrs) {
    auto e = open_in(edges);
    auto a = open_in(attrs);
    return vab::read_graph_csv(e, a);
}

// Square matrix with a header of node labels; "inf" marks missing distances.
vab::DistanceMatrix load_distances(const std::string& path) {
    auto in = open_in(path);
    const auto t = vab::read_csv(in);
    const std::size_t n = t.header.size();
    if (t.rows.size() != n) throw vab::ParseError(1, "distance matrix must be square");
    vab::DistanceMatrix dm(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double v = vab::parse_number(t.rows[i].fields[j], t.rows[i].line);
            if (i == j && v != 0.0) throw vab::ParseError(t.rows[i].line, "nonzero diagonal");
            if (i < j) dm.set(i, j, v);
            if (i > j && v != dm(i, j)) throw vab::ParseError(t.rows[i].line, "matrix not symmetric");
        }
    }
    return dm;
}

vab::PersistenceDiagram load_diagram(const std::string& path) {
    auto in = open_in(path);
    return vab::read_diagram_csv(in);
}

std::string stem(const std::string& path) {
    const auto slash = path.find_last_of('/');
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    const auto dot = name.rfind('.');
    return dot == std::string::npos || dot == 0 ? name : name.substr(0, dot);
}

json change_points_json(const vab::ChangePointResult& r) {
    json splits = json::array();
    for (const auto& s : r.order_found) {
        splits.push_back({{"index", s.index},
                          {"p_value", s.p_value},
                          {"statistic", s.statistic},
                          {"segment", {s.segment_begin, s.segment_end}}});
    }
    return {{"estimates", r.estimates}, {"p_values", r.p_values}, {"splits", splits}};
}

vab::SimConfig config_from_json(const json& j) {
    vab::SimConfig cfg = vab::SimConfig::four_regimes();
    if (j.contains("alphas")) cfg.alphas = j.at("alphas").get<std::vector<std::vector<double>>>();
    if (j.contains("n")) cfg.n = j.at("n").get<std::size_t>();
    if (j.contains("steps_per_regime")) cfg.steps_per_regime = j.at("steps_per_regime").get<std::size_t>();
    if (j.contains("d")) cfg.d = j.at("d").get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("attribute_scaling")) {
        const auto s = j.at("attribute_scaling").get<std::string>();
        if (s == "max-entropy") {
            cfg.scaling = vab::AttributeScaling::MaxEntropy;
        } else if (s == "min-max") {
            cfg.scaling = vab::AttributeScaling::MinMax;
        } else {
            throw std::invalid_argument("attribute_scaling must be max-entropy or min-max, got " + s);
        }
    }
    if (j.contains("detector")) {
        const auto& e = j.at("detector");
        auto& o = cfg.detector;
        if (e.contains("alpha")) o.alpha = e.at("alpha").get<double>();
        if (e.contains("permutations")) o.permutations = e.at("permutations").get<std::size_t>();
        if (e.contains("significance")) o.significance = e.at("significance").get<double>();
        if (e.contains("min_size")) o.min_size = e.at("min_size").get<std::size_t>();
    }
    if (j.contains("m") && !cfg.alphas.empty() && j.at("m").get<std::size_t>() != cfg.alphas.front().size()) {
        throw std::invalid_argument("m does not match the length of the alpha vectors");
    }
    return cfg;
}

json report_json(const vab::SimConfig& cfg, const vab::ExperimentReport& r) {
    json fams = json::array();
    for (const auto& f : r.families) {
        fams.push_back({{"family", vab::family_name(f.family)},
                        {"mae", f.mae},
                        {"mean_false_positives", f.mean_false_positives},
                        {"estimates", f.estimates}});
    }
    json regimes = json::array();
    for (const auto& s : r.regimes) {
        regimes.push_back({{"alpha", s.alpha},
                           {"wedges", s.wedges},
                           {"triangles", s.triangles},
                           {"edges", s.edges},
                           {"clustering", s.clustering},
                           {"assortativity", s.assortativity},
                           {"centralization", s.centralization},
                           {"norm_betti_common_dim0", s.norm_common0},
                           {"norm_betti_common_dim1", s.norm_common1},
                           {"norm_vab_dim0", s.norm_vab0},
                           {"norm_vab_dim1", s.norm_vab1}});
    }
    return {{"config",
             {{"m", cfg.alphas.front().size()},
              {"alphas", cfg.alphas},
              {"n", cfg.n},
              {"steps_per_regime", cfg.steps_per_regime},
              {"d", cfg.d},
              {"seed", cfg.seed},
              {"attribute_scaling",
               cfg.scaling == vab::AttributeScaling::MaxEntropy ? "max-entropy" : "min-max"},
              {"detector",
               {{"alpha", cfg.detector.alpha},
                {"permutations", cfg.detector.permutations},
                {"significance", cfg.detector.significance},
                {"min_size", cfg.detector.min_size}}}}},
            {"runs", r.runs},
            {"true_change_points", r.true_change_points},
            {"families", fams},
            {"regimes", regimes},
            {"imputed_values", r.imputed_values}};
}

void write_report_csv(std::ostream& out, const vab::ExperimentReport& r) {
    out << "family";
    for (std::size_t cp : r.true_change_points) out << ",mae_cp" << cp;
    out << ",mean_false_positives\n";
    for (const auto& f : r.families) {
        out << vab::family_name(f.family);
        for (double m : f.mae) out << ',' << vab::format_number(m);
        out << ',' << vab::format_number(f.mean_false_positives) << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological features of attributed graphs: persistence, Betti vectors, depth and change points"};
    app.require_subcommand(1);

    // pd
    std::string edges_path, attrs_path, dist_path, out_path;
    std::string filtration_kind = "lower-star";
    double t_max = -1.0;
    bool keep_zero = false;
    auto* pd = app.add_subcommand("pd", "Persistence diagram of a graph (lower-star) or distance matrix (Rips)");
    pd->add_option("--edges", edges_path, "edge list CSV (u,v)");
    pd->add_option("--attrs", attrs_path, "node attribute CSV (node,value)");
    pd->add_option("--distances", dist_path, "square distance matrix CSV with a label header");
    pd->add_option("--filtration", filtration_kind)->check(CLI::IsMember({"lower-star", "rips"}));
    pd->add_option("--t-max", t_max, "Rips threshold (default: largest finite distance)");
    pd->add_flag("--keep-zero", keep_zero, "keep zero-persistence pairs");
    pd->add_option("-o,--output", out_path);

    // vectorize
    std::string diagram_path, kind = "vab", infinite = "1", weight = "one", format = "wide";
    std::size_t grid_points = 100;
    double lo = 0.0, hi = 1.0;
    std::vector<int> dims{0, 1};
    auto* vec = app.add_subcommand("vectorize", "Betti-curve vectors of a diagram on a uniform grid");
    vec->add_option("--diagram", diagram_path)->required();
    vec->add_option("--kind", kind)->check(CLI::IsMember({"vab", "common"}));
    vec->add_option("--grid", grid_points, "number of grid points");
    vec->add_option("--lo", lo);
    vec->add_option("--hi", hi);
    vec->add_option("--dims", dims);
    vec->add_option("--infinite", infinite, "value replacing infinite deaths, or 'drop'");
    vec->add_option("--weight", weight)->check(CLI::IsMember({"one", "persistence"}));
    vec->add_option("--format", format)->check(CLI::IsMember({"wide", "long"}));
    vec->add_option("-o,--output", out_path);

    // distance
    std::string diag_a, diag_b, norm_text = "1", q_text = "1";
    int dist_dim = 0;
    bool show_pairs = false;
    auto* dist = app.add_subcommand("distance", "Wasserstein and bottleneck distances between two diagrams");
    dist->add_option("a", diag_a)->required();
    dist->add_option("b", diag_b)->required();
    dist->add_option("--dim", dist_dim);
    dist->add_option("--p", norm_text, "ground norm: 1, 2 or inf");
    dist->add_option("--q", q_text, "Wasserstein order (>= 1 or inf)");
    dist->add_option("--infinite", infinite, "value replacing infinite deaths, or 'drop'");
    dist->add_flag("--pairs", show_pairs, "include the optimal matching");
    dist->add_option("-o,--output", out_path);

    // depth
    std::string vectors_path, band = "closed";
    std::size_t window = 7;
    auto* dep = app.add_subcommand("depth", "Rolling modified band depth of a vector sequence");
    dep->add_option("--vectors", vectors_path, "wide vector CSV, rows in time order")->required();
    dep->add_option("--window", window);
    dep->add_option("--band", band)->check(CLI::IsMember({"closed", "open"}));
    dep->add_option("-o,--output", out_path);

    // changepoint
    std::string series_path;
    vab::EDivisiveOptions ed;
    auto* cp = app.add_subcommand("changepoint", "E-divisive change points of a multivariate series");
    cp->add_option("--series", series_path, "CSV with a header, one row per time step")->required();
    cp->add_option("--alpha", ed.alpha, "distance exponent in (0, 2)");
    cp->add_option("--permutations", ed.permutations);
    cp->add_option("--significance", ed.significance);
    cp->add_option("--min-size", ed.min_size);
    cp->add_option("--seed", ed.seed);
    cp->add_option("--threads", ed.threads);
    cp->add_option("-o,--output", out_path);

    // simulate
    std::string config_path, csv_path;
    std::size_t runs = 1, sim_threads = 1;
    std::uint64_t sim_seed = 0;
    bool seed_given = false;
    auto* sim = app.add_subcommand("simulate", "Random dot product graph change-point experiment");
    sim->add_option("--config", config_path, "JSON config (defaults: four-regime setup)");
    sim->add_option("--runs", runs);
    auto* seed_opt = sim->add_option("--seed", sim_seed);
    sim->add_option("--threads", sim_threads);
    sim->add_option("--csv", csv_path, "also write the MAE table as CSV");
    sim->add_option("-o,--output", out_path);

    // features
    std::string ledger_path, prices_path, transform = "log1p", activity = "count";
    vab::IngestOptions ingest;
    vab::FeatureConfig fc;
    auto* feat = app.add_subcommand("features", "Daily feature table from a transaction ledger and prices");
    feat->add_option("--ledger", ledger_path, "CSV day,from,to,amount")->required();
    feat->add_option("--prices", prices_path, "CSV day,open")->required();
    feat->add_option("--delta", fc.delta);
    feat->add_option("--horizon", fc.horizon);
    feat->add_option("--window", fc.window);
    feat->add_option("--grid", fc.grid_points);
    feat->add_option("--band", band)->check(CLI::IsMember({"closed", "open"}));
    feat->add_option("--top-nodes", ingest.top_nodes);
    feat->add_option("--min-transactions", ingest.min_transactions_per_day);
    feat->add_option("--transform", transform)->check(CLI::IsMember({"log1p", "identity"}));
    feat->add_option("--activity", activity)->check(CLI::IsMember({"count", "degree", "volume"}));
    feat->add_option("--threads", fc.threads);
    feat->add_option("-o,--output", out_path);

    // summarize
    auto* sum = app.add_subcommand("summarize", "Graph summary statistics as JSON");
    sum->add_option("--edges", edges_path)->required();
    sum->add_option("--attrs", attrs_path)->required();
    sum->add_option("-o,--output", out_path);

    CLI11_PARSE(app, argc, argv);
    seed_given = seed_opt->count() > 0;

    try {
        auto resolve = [&](const vab::PersistenceDiagram& d) {
            if (infinite == "drop") return vab::resolve_infinite(d, vab::InfinitePolicy::drop());
            return vab::resolve_infinite(d, vab::InfinitePolicy::replace(vab::parse_number(infinite, 0)));
        };

        if (*pd) {
            vab::PersistenceOptions opts;
            opts.keep_zero_persistence = keep_zero;
            vab::PersistenceDiagram diagram;
            if (filtration_kind == "rips") {
                if (dist_path.empty()) throw std::invalid_argument("--distances is required for rips");
                const auto dm = load_distances(dist_path);
                const auto f = t_max < 0 ? vab::vietoris_rips_filtration(dm)
                                         : vab::vietoris_rips_filtration(dm, t_max);
                diagram = vab::compute_persistence(f, opts);
            } else {
                if (edges_path.empty() || attrs_path.empty()) {
                    throw std::invalid_argument("--edges and --attrs are required for lower-star");
                }
                diagram = vab::compute_persistence(
                    vab::lower_star_filtration(load_graph(edges_path, attrs_path)), opts);
            }
            with_output(out_path, [&](std::ostream& o) { vab::write_diagram_csv(o, diagram); });
        } else if (*vec) {
            const auto diagram = resolve(load_diagram(diagram_path));
            const auto grid = vab::uniform_grid(lo, hi, grid_points);
            vab::WeightFunction w = vab::WeightFunction::constant_one();
            if (weight == "persistence") {
                double max_pers = 0.0;
                for (const auto& p : diagram.points) max_pers = std::max(max_pers, p.persistence());
                w = vab::WeightFunction::linear_persistence(max_pers);
            }
            std::vector<vab::LabelledVector> rows;
            std::vector<std::pair<int, vab::VAB>> long_rows;
            for (int dim : dims) {
                const auto bf = vab::betti_function(diagram, dim, w);
                if (kind == "common") {
                    rows.push_back({stem(diagram_path), dim, vab::vectorize_common(bf, grid)});
                } else {
                    auto v = vab::vectorize_averaged(bf, grid);
                    rows.push_back({stem(diagram_path), dim, v.values});
                    long_rows.emplace_back(dim, std::move(v));
                }
            }
            with_output(out_path, [&](std::ostream& o) {
                if (format == "long" && kind == "vab") {
                    o << "dim,k,t_lo,t_hi,value\n";
                    for (const auto& [dim, v] : long_rows) vab::write_vab_long(o, dim, v);
                } else {
                    vab::write_vectors_wide(o, rows);
                }
            });
        } else if (*dist) {
            const auto a = resolve(load_diagram(diag_a)).slice(dist_dim);
            const auto b = resolve(load_diagram(diag_b)).slice(dist_dim);
            const auto norm = parse_norm(norm_text);
            const double q = parse_q(q_text);
            const auto m = vab::wasserstein(a, b, norm, q);
            json j{{"dim", dist_dim},
                   {"p", norm_text},
                   {"q", number(q)},
                   {"wasserstein", m.cost},
                   {"bottleneck", vab::bottleneck(a, b, norm)}};
            if (show_pairs) {
                json pairs = json::array();
                for (const auto& mp : m.pairs) {
                    pairs.push_back({{"a", mp.first ? json(*mp.first) : json(nullptr)},
                                     {"b", mp.second ? json(*mp.second) : json(nullptr)},
                                     {"distance", mp.distance}});
                }
                j["pairs"] = pairs;
            }
            with_output(out_path, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
        } else if (*dep) {
            auto in = open_in(vectors_path);
            const auto vectors = vab::read_vectors_wide(in);
            const auto mode = band == "open" ? vab::BandMode::Open : vab::BandMode::Closed;
            std::map<int, std::vector<std::size_t>> by_dim;
            for (std::size_t i = 0; i < vectors.size(); ++i) by_dim[vectors[i].dim].push_back(i);
            std::vector<std::optional<double>> depth(vectors.size());
            for (const auto& [dim, idx] : by_dim) {
                std::vector<vab::Curve> curves;
                for (std::size_t i : idx) curves.push_back(vectors[i].values);
                if (curves.size() < window) continue;
                const auto ds = vab::rolling_depth(curves, window, mode);
                for (std::size_t k = 0; k < idx.size(); ++k) depth[idx[k]] = ds.values[k];
            }
            with_output(out_path, [&](std::ostream& o) {
                o << "date,dim,depth\n";
                for (std::size_t i = 0; i < vectors.size(); ++i) {
                    o << vectors[i].label << ',' << vectors[i].dim << ','
                      << (depth[i] ? vab::format_number(*depth[i]) : "") << '\n';
                }
            });
        } else if (*cp) {
            auto in = open_in(series_path);
            const auto t = vab::read_csv(in);
            std::vector<std::vector<double>> rows;
            for (const auto& r : t.rows) {
                std::vector<double> row;
                for (const auto& f : r.fields) row.push_back(vab::parse_number(f, r.line));
                rows.push_back(std::move(row));
            }
            const auto result = vab::e_divisive(vab::SeriesMatrix::from_rows(rows), ed);
            json j = change_points_json(result);
            j["seed"] = ed.seed;
            with_output(out_path, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
        } else if (*sim) {
            vab::SimConfig cfg = vab::SimConfig::four_regimes();
            if (!config_path.empty()) {
                auto in = open_in(config_path);
                cfg = config_from_json(json::parse(in));
            }
            if (seed_given) cfg.seed = sim_seed;
            cfg.threads = sim_threads;
            const auto report = vab::run_cpd_experiment(cfg, runs);
            if (report.imputed_values > 0) {
                std::cerr << "warning: " << report.imputed_values
                          << " undefined graph summary values were replaced by 0\n";
            }
            with_output(out_path, [&](std::ostream& o) { o << report_json(cfg, report).dump(2) << '\n'; });
            if (!csv_path.empty()) {
                with_output(csv_path, [&](std::ostream& o) { write_report_csv(o, report); });
            }
        } else if (*feat) {
            ingest.transform = transform == "identity" ? vab::AmountTransform::Identity
                                                       : vab::AmountTransform::Log1p;
            ingest.activity = activity == "degree"   ? vab::ActivityMeasure::Degree
                              : activity == "volume" ? vab::ActivityMeasure::Volume
                                                     : vab::ActivityMeasure::TransactionCount;
            fc.band = band == "open" ? vab::BandMode::Open : vab::BandMode::Closed;
            auto lin = open_in(ledger_path);
            auto pin = open_in(prices_path);
            const auto ledger = vab::read_ledger_csv(lin);
            const auto prices = vab::read_price_csv(pin);
            const auto graphs = vab::ingest_transactions(ledger, ingest);
            const auto rows = vab::feature_table(graphs, prices, fc);
            with_output(out_path, [&](std::ostream& o) { vab::write_feature_csv(o, rows); });
        } else if (*sum) {
            const auto g = load_graph(edges_path, attrs_path);
            const auto s = vab::summarize(g);
            const auto mc = vab::motif_counts_3(g);
            auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
            json j{{"nodes", g.node_count()},
                   {"edges", s.edge_count},
                   {"clustering", opt(s.clustering)},
                   {"average_local_clustering", vab::average_local_clustering(g)},
                   {"assortativity", opt(s.assortativity)},
                   {"centralization", opt(s.centralization)},
                   {"wedges", mc.wedges},
                   {"triangles", mc.triangles}};
            with_output(out_path, [&](std::ostream& o) { o << j.dump(2) << '\n'; });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
