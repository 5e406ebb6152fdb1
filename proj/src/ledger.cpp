#include "vab/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>
#include <stdexcept>

#include "vab/betti.hpp"
#include "vab/csv.hpp"
#include "vab/filtration.hpp"
#include "vab/graph_stats.hpp"
#include "vab/parallel.hpp"
#include "vab/persistence.hpp"

namespace vab {
namespace {

bool is_iso_day(const std::string& s) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
        if (s[i] < '0' || s[i] > '9') return false;
    }
    const int month = (s[5] - '0') * 10 + (s[6] - '0');
    const int day = (s[8] - '0') * 10 + (s[9] - '0');
    return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

double transform_amount(double x, AmountTransform t) {
    return t == AmountTransform::Log1p ? std::log1p(x) : x;
}

}  // namespace

std::vector<Transaction> read_ledger_csv(std::istream& in) {
    const CsvTable t = read_csv(in);
    std::vector<Transaction> out;
    if (t.header.empty()) return out;
    const std::size_t cd = t.column("day");
    const std::size_t cf = t.column("from");
    const std::size_t ct = t.column("to");
    const std::size_t ca = t.column("amount");
    out.reserve(t.rows.size());
    for (const auto& r : t.rows) {
        Transaction tx{r.fields[cd], r.fields[cf], r.fields[ct], parse_number(r.fields[ca], r.line)};
        if (!is_iso_day(tx.day)) throw ParseError(r.line, "day is not YYYY-MM-DD: '" + tx.day + "'");
        if (tx.from.empty() || tx.to.empty()) throw ParseError(r.line, "empty address");
        if (!(tx.amount > 0.0)) throw ParseError(r.line, "amount must be positive");
        out.push_back(std::move(tx));
    }
    return out;
}

std::map<std::string, double> read_price_csv(std::istream& in) {
    const CsvTable t = read_csv(in);
    std::map<std::string, double> out;
    if (t.header.empty()) return out;
    const std::size_t cd = t.column("day");
    const std::size_t co = t.column("open");
    for (const auto& r : t.rows) {
        const std::string& day = r.fields[cd];
        if (!is_iso_day(day)) throw ParseError(r.line, "day is not YYYY-MM-DD: '" + day + "'");
        const double p = parse_number(r.fields[co], r.line);
        if (!(p > 0.0)) throw ParseError(r.line, "price must be positive");
        if (!out.emplace(day, p).second) throw ParseError(r.line, "duplicate day " + day);
    }
    return out;
}

std::vector<std::pair<std::string, double>> node_attributes(std::span<const Transaction> day,
                                                            AmountTransform transform) {
    struct Flow {
        double sent = 0.0, received = 0.0;
        std::size_t n_sent = 0, n_received = 0;
    };
    std::map<std::string, Flow> flows;
    for (const auto& tx : day) {
        if (tx.from == tx.to) continue;
        const double a = transform_amount(tx.amount, transform);
        auto& f = flows[tx.from];
        f.sent += a;
        ++f.n_sent;
        auto& g = flows[tx.to];
        g.received += a;
        ++g.n_received;
    }
    std::vector<std::pair<std::string, double>> out;
    out.reserve(flows.size());
    for (const auto& [addr, f] : flows) {
        const double mean_sent = f.n_sent ? f.sent / static_cast<double>(f.n_sent) : 0.0;
        const double mean_recv = f.n_received ? f.received / static_cast<double>(f.n_received) : 0.0;
        out.emplace_back(addr, mean_sent + mean_recv);
    }
    return out;
}

std::map<std::string, AttributedGraph> ingest_transactions(std::span<const Transaction> ledger,
                                                           const IngestOptions& opts) {
    if (opts.top_nodes < 1) throw std::invalid_argument("top_nodes must be at least 1");
    std::map<std::string, std::vector<Transaction>> by_day;
    for (const auto& tx : ledger) {
        if (!(tx.amount > 0.0)) throw std::invalid_argument("amount must be positive");
        if (tx.from == tx.to) continue;
        by_day[tx.day].push_back(tx);
    }

    std::map<std::string, AttributedGraph> out;
    for (const auto& [day, txs] : by_day) {
        if (txs.size() < opts.min_transactions_per_day) continue;
        const auto attrs = node_attributes(txs, opts.transform);
        std::vector<std::pair<std::string, std::string>> edges;
        edges.reserve(txs.size());
        for (const auto& tx : txs) edges.emplace_back(tx.from, tx.to);
        AttributedGraph g = AttributedGraph::build(edges, attrs);

        std::vector<double> activity;
        if (opts.activity == ActivityMeasure::Degree) {
            activity = degree_activity(g);
        } else {
            activity.assign(g.node_count(), 0.0);
            for (const auto& tx : txs) {
                const double w = opts.activity == ActivityMeasure::Volume
                                     ? transform_amount(tx.amount, opts.transform)
                                     : 1.0;
                activity[*g.find(tx.from)] += w;
                activity[*g.find(tx.to)] += w;
            }
        }
        g = trim_top_active(g, activity, opts.top_nodes);
        if (opts.normalize) g = normalize_attributes(g);
        out.emplace(day, std::move(g));
    }
    return out;
}

std::vector<PriceShock> label_anomalies(std::span<const double> prices, double delta) {
    if (prices.size() < 2) throw std::invalid_argument("need at least two prices");
    if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
    for (double p : prices) {
        if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("prices must be positive");
    }
    std::vector<PriceShock> out(prices.size());
    for (std::size_t t = 1; t < prices.size(); ++t) {
        const double r = (prices[t] - prices[t - 1]) / prices[t - 1];
        out[t] = {r, std::abs(r) >= delta ? 1 : 0};
    }
    return out;
}

std::vector<std::optional<int>> horizon_label(std::span<const std::optional<int>> labels,
                                              std::size_t h) {
    if (h < 1) throw std::invalid_argument("horizon must be at least 1");
    std::vector<std::optional<int>> out(labels.size());
    for (std::size_t t = 0; t + h < labels.size(); ++t) {
        int any = 0;
        for (std::size_t s = t + 1; s <= t + h; ++s) {
            if (labels[s] && *labels[s] == 1) any = 1;
        }
        out[t] = any;
    }
    return out;
}

std::vector<DailyFeatureRow> feature_table(const std::map<std::string, AttributedGraph>& graphs,
                                           const std::map<std::string, double>& prices,
                                           const FeatureConfig& cfg) {
    if (cfg.window < 2) throw std::invalid_argument("depth window must be at least 2");
    std::vector<std::string> price_days;
    std::vector<double> price_values;
    for (const auto& [day, p] : prices) {
        price_days.push_back(day);
        price_values.push_back(p);
    }
    std::vector<PriceShock> shocks(price_values.size());
    if (price_values.size() >= 2) shocks = label_anomalies(price_values, cfg.delta);
    std::vector<std::optional<int>> labels;
    for (const auto& s : shocks) labels.push_back(s.label);
    const auto horizon = horizon_label(labels, cfg.horizon);
    const double max_price =
        price_values.empty() ? 1.0 : *std::max_element(price_values.begin(), price_values.end());

    std::vector<DailyFeatureRow> rows;
    std::vector<const AttributedGraph*> day_graphs;
    for (std::size_t i = 0; i < price_days.size(); ++i) {
        const auto it = graphs.find(price_days[i]);
        if (it == graphs.end()) continue;
        DailyFeatureRow row;
        row.day = price_days[i];
        row.price = price_values[i];
        row.price_norm = price_values[i] / max_price;
        row.ret = shocks[i].ret;
        row.label = shocks[i].label;
        row.horizon_label = horizon[i];
        rows.push_back(std::move(row));
        day_graphs.push_back(&it->second);
    }

    const auto grid = uniform_grid(0.0, 1.0, cfg.grid_points);
    std::vector<Curve> vab0(rows.size());
    std::vector<Curve> vab1(rows.size());
    parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
        const AttributedGraph& g = *day_graphs[i];
        rows[i].nodes = g.node_count();
        rows[i].edges = g.edge_count();
        rows[i].avg_clustering = average_local_clustering(g);
        const double cap = std::max(1.0, g.attrs().empty()
                                             ? 1.0
                                             : *std::max_element(g.attrs().begin(), g.attrs().end()));
        const auto pd = resolve_infinite(compute_persistence(lower_star_filtration(g)),
                                         InfinitePolicy::replace(cap));
        vab0[i] = vectorize_averaged(betti_function(pd, 0), grid).values;
        vab1[i] = vectorize_averaged(betti_function(pd, 1), grid).values;
    });

    if (rows.size() >= cfg.window) {
        const auto d0 = rolling_depth(vab0, cfg.window, cfg.band);
        const auto d1 = rolling_depth(vab1, cfg.window, cfg.band);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            rows[i].depth0 = d0.values[i];
            rows[i].depth1 = d1.values[i];
        }
    }
    return rows;
}

void write_feature_csv(std::ostream& out, std::span<const DailyFeatureRow> rows) {
    auto opt = [](const auto& v) -> std::string {
        if (!v) return "";
        if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, int>) {
            return std::to_string(*v);
        } else {
            return format_number(*v);
        }
    };
    out << "# schema: " << kFeatureSchema << '\n';
    out << "day,price,price_norm,return,label,horizon_label,nodes,edges,avg_clustering,"
           "depth_beta0,depth_beta1\n";
    for (const auto& r : rows) {
        out << r.day << ',' << format_number(r.price) << ',' << format_number(r.price_norm) << ','
            << opt(r.ret) << ',' << opt(r.label) << ',' << opt(r.horizon_label) << ',' << r.nodes
            << ',' << r.edges << ',' << format_number(r.avg_clustering) << ',' << opt(r.depth0)
            << ',' << opt(r.depth1) << '\n';
    }
}

}  // namespace vab
