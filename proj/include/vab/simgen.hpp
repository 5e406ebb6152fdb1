// Random dot product graph simulation and the change-point experiment that
// compares topological and classical feature families.

#ifndef VAB_SIMGEN_HPP
#define VAB_SIMGEN_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "vab/changepoint.hpp"
#include "vab/graph.hpp"

namespace vab {

using SimplexPoint = std::vector<double>;

/// `n` Dirichlet(alpha) draws via normalized Gamma(alpha_i, 1) variates.
/// Throws std::invalid_argument on a nonpositive or empty alpha.
std::vector<SimplexPoint> sample_dirichlet(std::span<const double> alpha, std::size_t n,
                                           std::mt19937_64& rng);
std::vector<SimplexPoint> sample_dirichlet(std::span<const double> alpha, std::size_t n,
                                           std::uint64_t seed);

/// -sum x_i log x_i with 0 log 0 = 0.
double entropy_attribute(std::span<const double> x);

/// How entropy attributes are mapped into [0, 1].
enum class AttributeScaling {
    MinMax,      // per graph: (h - min) / (max - min)
    MaxEntropy,  // h / log(m), the entropy of the uniform point; keeps level shifts between graphs
};

/// Random dot product graph: nodes i < j are joined with probability
/// <x_i, x_j>. Node attributes are entropy_attribute(x_i), scaled into [0, 1].
AttributedGraph rdpg(std::span<const SimplexPoint> points, std::mt19937_64& rng,
                     AttributeScaling scaling = AttributeScaling::MinMax);

/// Feature families fed to the change-point detector, in report order.
enum class FeatureFamily {
    BettiCommonDim0,
    BettiCommonDim1,
    VabDim0,
    VabDim1,
    GraphSummaries,
    Motifs,
};
inline constexpr std::size_t kFeatureFamilyCount = 6;
std::string family_name(FeatureFamily f);

struct SimConfig {
    std::vector<std::vector<double>> alphas;  // one Dirichlet parameter per regime
    std::size_t n = 100;                      // nodes per graph
    std::size_t steps_per_regime = 50;
    std::size_t d = 5;                        // grid points on [0, 1]
    std::uint64_t seed = 0;
    // Min-max scaling per graph hides the difference between regimes with
    // equal Dirichlet means, so the experiment scales by log(m) instead.
    AttributeScaling scaling = AttributeScaling::MaxEntropy;
    EDivisiveOptions detector;
    std::size_t threads = 1;

    /// The four-regime setting: (1.5,1.5,1.5), (2,2,2), (2,2,3.5), (2,0.5,2).
    static SimConfig four_regimes();
    /// Throws std::invalid_argument describing the first invalid field.
    void validate() const;
};

/// Feature vectors of one simulated graph.
struct GraphFeatures {
    std::vector<double> common0, common1;  // pointwise Betti values, d entries
    std::vector<double> vab0, vab1;        // cell averages, d - 1 entries
    std::vector<double> summary;           // |E|, clustering, assortativity, centralization
    std::vector<double> motifs;            // wedges, triangles
    std::size_t imputed = 0;               // undefined summary entries replaced by 0
};

/// Lower-star persistence (infinite deaths set to 1) and all six feature
/// families for one graph with attributes in [0, 1].
GraphFeatures graph_features(const AttributedGraph& g, std::span<const double> grid);

struct FamilyResult {
    FeatureFamily family;
    std::vector<double> mae;  // per true change point
    double mean_false_positives = 0.0;
    std::vector<std::vector<std::size_t>> estimates;  // per run
};

/// Table of per-regime means over all runs and steps.
struct RegimeSummary {
    std::vector<double> alpha;
    double wedges = 0, triangles = 0, edges = 0, clustering = 0, assortativity = 0,
           centralization = 0;
    double norm_common0 = 0, norm_common1 = 0, norm_vab0 = 0, norm_vab1 = 0;
};

struct ExperimentReport {
    std::size_t runs = 0;
    std::vector<std::size_t> true_change_points;  // 1-based
    std::vector<FamilyResult> families;
    std::vector<RegimeSummary> regimes;
    std::size_t imputed_values = 0;
};

/// Absolute error of the nearest estimate within half the regime length of
/// each true change point; `cap` (the regime length) when none is that close.
std::vector<double> score_estimates(std::span<const std::size_t> truth,
                                    std::span<const std::size_t> estimates, double cap);

/// Runs the full experiment `runs` times. Run r draws its graphs from seeds
/// derived from cfg.seed + r, so every run is reproducible on its own.
ExperimentReport run_cpd_experiment(const SimConfig& cfg, std::size_t runs);

}  // namespace vab

#endif  // VAB_SIMGEN_HPP
