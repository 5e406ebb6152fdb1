#include "vab/simgen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "vab/betti.hpp"
#include "vab/filtration.hpp"
#include "vab/graph_stats.hpp"
#include "vab/parallel.hpp"
#include "vab/persistence.hpp"
#include "vab/random.hpp"

namespace vab {

std::vector<SimplexPoint> sample_dirichlet(std::span<const double> alpha, std::size_t n,
                                           std::mt19937_64& rng) {
    if (alpha.empty()) throw std::invalid_argument("Dirichlet parameter is empty");
    for (double a : alpha) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw std::invalid_argument("Dirichlet parameters must be positive");
        }
    }
    std::vector<std::gamma_distribution<double>> gammas;
    for (double a : alpha) gammas.emplace_back(a, 1.0);
    std::vector<SimplexPoint> out(n, SimplexPoint(alpha.size()));
    for (auto& x : out) {
        double total = 0.0;
        do {
            total = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                x[i] = gammas[i](rng);
                total += x[i];
            }
        } while (!(total > 0.0));
        for (double& xi : x) xi /= total;
    }
    return out;
}

std::vector<SimplexPoint> sample_dirichlet(std::span<const double> alpha, std::size_t n,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_dirichlet(alpha, n, rng);
}

double entropy_attribute(std::span<const double> x) {
    double h = 0.0;
    for (double xi : x) {
        if (xi > 0.0) h -= xi * std::log(xi);
    }
    return h;
}

AttributedGraph rdpg(std::span<const SimplexPoint> points, std::mt19937_64& rng,
                     AttributeScaling scaling) {
    const std::size_t n = points.size();
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = std::inner_product(points[i].begin(), points[i].end(),
                                                points[j].begin(), 0.0);
            if (uniform_unit(rng) < p) {
                edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
            }
        }
    }
    std::vector<double> attrs(n);
    for (std::size_t i = 0; i < n; ++i) attrs[i] = entropy_attribute(points[i]);
    auto g = AttributedGraph::from_indexed(n, edges, std::move(attrs));
    if (scaling == AttributeScaling::MinMax) return normalize_attributes(g);
    const std::size_t m = n == 0 ? 0 : points.front().size();
    if (m < 2) return g.with_attrs(std::vector<double>(n, 0.0));
    const double top = std::log(static_cast<double>(m));
    std::vector<double> scaled(g.attrs().begin(), g.attrs().end());
    for (double& a : scaled) a = std::clamp(a / top, 0.0, 1.0);
    return g.with_attrs(std::move(scaled));
}

std::string family_name(FeatureFamily f) {
    switch (f) {
        case FeatureFamily::BettiCommonDim0: return "betti_common_dim0";
        case FeatureFamily::BettiCommonDim1: return "betti_common_dim1";
        case FeatureFamily::VabDim0: return "vab_dim0";
        case FeatureFamily::VabDim1: return "vab_dim1";
        case FeatureFamily::GraphSummaries: return "graph_summaries";
        case FeatureFamily::Motifs: return "motifs";
    }
    return "unknown";
}

SimConfig SimConfig::four_regimes() {
    SimConfig cfg;
    cfg.alphas = {{1.5, 1.5, 1.5}, {2.0, 2.0, 2.0}, {2.0, 2.0, 3.5}, {2.0, 0.5, 2.0}};
    return cfg;
}

void SimConfig::validate() const {
    if (alphas.empty()) throw std::invalid_argument("config needs at least one regime");
    for (const auto& a : alphas) {
        if (a.size() != alphas.front().size()) {
            throw std::invalid_argument("regimes differ in Dirichlet dimension");
        }
        for (double x : a) {
            if (!(x > 0.0)) throw std::invalid_argument("Dirichlet parameters must be positive");
        }
    }
    if (n < 2) throw std::invalid_argument("graphs need at least two nodes");
    if (steps_per_regime < 1) throw std::invalid_argument("steps_per_regime must be positive");
    if (d < 2) throw std::invalid_argument("grid needs at least two points");
}

GraphFeatures graph_features(const AttributedGraph& g, std::span<const double> grid) {
    GraphFeatures out;
    const auto pd = resolve_infinite(compute_persistence(lower_star_filtration(g)),
                                     InfinitePolicy::replace(1.0));
    const auto b0 = betti_function(pd, 0);
    const auto b1 = betti_function(pd, 1);
    out.common0 = vectorize_common(b0, grid);
    out.common1 = vectorize_common(b1, grid);
    out.vab0 = vectorize_averaged(b0, grid).values;
    out.vab1 = vectorize_averaged(b1, grid).values;

    const auto summary = summarize(g);
    auto impute = [&](const std::optional<double>& v) {
        if (v) return *v;
        ++out.imputed;
        return 0.0;
    };
    out.summary = {static_cast<double>(summary.edge_count), impute(summary.clustering),
                   impute(summary.assortativity), impute(summary.centralization)};
    const auto motifs = motif_counts_3(g);
    out.motifs = {static_cast<double>(motifs.wedges), static_cast<double>(motifs.triangles)};
    return out;
}

std::vector<double> score_estimates(std::span<const std::size_t> truth,
                                    std::span<const std::size_t> estimates, double cap) {
    std::vector<double> errors;
    for (std::size_t cp : truth) {
        double best = cap;
        for (std::size_t e : estimates) {
            const double err = std::abs(static_cast<double>(e) - static_cast<double>(cp));
            if (err <= cap / 2.0) best = std::min(best, err);
        }
        errors.push_back(best);
    }
    return errors;
}

namespace {

double norm2(const std::vector<double>& v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

const std::vector<double>& family_row(const GraphFeatures& f, FeatureFamily fam) {
    switch (fam) {
        case FeatureFamily::BettiCommonDim0: return f.common0;
        case FeatureFamily::BettiCommonDim1: return f.common1;
        case FeatureFamily::VabDim0: return f.vab0;
        case FeatureFamily::VabDim1: return f.vab1;
        case FeatureFamily::GraphSummaries: return f.summary;
        case FeatureFamily::Motifs: return f.motifs;
    }
    return f.summary;
}

struct RunOutcome {
    std::vector<std::vector<std::size_t>> estimates;  // per family
    std::vector<RegimeSummary> sums;                  // per regime, unnormalized sums
    std::size_t imputed = 0;
};

RunOutcome simulate_run(const SimConfig& cfg, std::uint64_t run_seed) {
    const std::size_t regimes = cfg.alphas.size();
    const std::size_t steps = regimes * cfg.steps_per_regime;
    const auto grid = uniform_grid(0.0, 1.0, cfg.d);

    std::vector<GraphFeatures> features(steps);
    std::vector<MotifCounts> motif_counts(steps);
    parallel_for(steps, cfg.threads, [&](std::size_t t) {
        std::mt19937_64 rng(derive_seed(run_seed, t));
        const auto& alpha = cfg.alphas[t / cfg.steps_per_regime];
        const auto points = sample_dirichlet(alpha, cfg.n, rng);
        features[t] = graph_features(rdpg(points, rng, cfg.scaling), grid);
    });

    RunOutcome out;
    out.sums.resize(regimes);
    for (std::size_t t = 0; t < steps; ++t) {
        const auto& f = features[t];
        auto& s = out.sums[t / cfg.steps_per_regime];
        s.wedges += f.motifs[0];
        s.triangles += f.motifs[1];
        s.edges += f.summary[0];
        s.clustering += f.summary[1];
        s.assortativity += f.summary[2];
        s.centralization += f.summary[3];
        s.norm_common0 += norm2(f.common0);
        s.norm_common1 += norm2(f.common1);
        s.norm_vab0 += norm2(f.vab0);
        s.norm_vab1 += norm2(f.vab1);
        out.imputed += f.imputed;
    }

    for (std::size_t k = 0; k < kFeatureFamilyCount; ++k) {
        const auto fam = static_cast<FeatureFamily>(k);
        std::vector<std::vector<double>> rows(steps);
        for (std::size_t t = 0; t < steps; ++t) rows[t] = family_row(features[t], fam);
        EDivisiveOptions opts = cfg.detector;
        opts.seed = derive_seed(run_seed, 0xcafe, k);
        opts.threads = cfg.threads;
        out.estimates.push_back(e_divisive(SeriesMatrix::from_rows(rows), opts).estimates);
    }
    return out;
}

}  // namespace

ExperimentReport run_cpd_experiment(const SimConfig& cfg, std::size_t runs) {
    cfg.validate();
    if (runs < 1) throw std::invalid_argument("need at least one run");
    const std::size_t regimes = cfg.alphas.size();
    const double cap = static_cast<double>(cfg.steps_per_regime);

    ExperimentReport report;
    report.runs = runs;
    for (std::size_t k = 1; k < regimes; ++k) {
        report.true_change_points.push_back(k * cfg.steps_per_regime + 1);
    }

    std::vector<RunOutcome> outcomes;
    outcomes.reserve(runs);
    for (std::size_t r = 0; r < runs; ++r) outcomes.push_back(simulate_run(cfg, cfg.seed + r));

    for (std::size_t k = 0; k < kFeatureFamilyCount; ++k) {
        FamilyResult fr{static_cast<FeatureFamily>(k),
                        std::vector<double>(report.true_change_points.size(), 0.0), 0.0, {}};
        for (const auto& o : outcomes) {
            const auto& est = o.estimates[k];
            const auto errors = score_estimates(report.true_change_points, est, cap);
            for (std::size_t c = 0; c < errors.size(); ++c) fr.mae[c] += errors[c];
            for (std::size_t e : est) {
                const bool near_truth = std::any_of(
                    report.true_change_points.begin(), report.true_change_points.end(),
                    [&](std::size_t cp) {
                        return std::abs(static_cast<double>(e) - static_cast<double>(cp)) <= cap / 2.0;
                    });
                if (!near_truth) fr.mean_false_positives += 1.0;
            }
            fr.estimates.push_back(est);
        }
        for (double& m : fr.mae) m /= static_cast<double>(runs);
        fr.mean_false_positives /= static_cast<double>(runs);
        report.families.push_back(std::move(fr));
    }

    const double per_regime = static_cast<double>(runs * cfg.steps_per_regime);
    for (std::size_t g = 0; g < regimes; ++g) {
        RegimeSummary s;
        s.alpha = cfg.alphas[g];
        for (const auto& o : outcomes) {
            const auto& x = o.sums[g];
            s.wedges += x.wedges;
            s.triangles += x.triangles;
            s.edges += x.edges;
            s.clustering += x.clustering;
            s.assortativity += x.assortativity;
            s.centralization += x.centralization;
            s.norm_common0 += x.norm_common0;
            s.norm_common1 += x.norm_common1;
            s.norm_vab0 += x.norm_vab0;
            s.norm_vab1 += x.norm_vab1;
        }
        for (double* field : {&s.wedges, &s.triangles, &s.edges, &s.clustering, &s.assortativity,
                              &s.centralization, &s.norm_common0, &s.norm_common1, &s.norm_vab0,
                              &s.norm_vab1}) {
            *field /= per_regime;
        }
        report.regimes.push_back(std::move(s));
    }
    for (const auto& o : outcomes) report.imputed_values += o.imputed;
    return report;
}

}  // namespace vab
