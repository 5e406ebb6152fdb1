// Transaction-ledger pipeline: daily graphs, price-shock labels and the
// per-day feature table with rolling topological depth.

#ifndef VAB_LEDGER_HPP
#define VAB_LEDGER_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vab/depth.hpp"
#include "vab/graph.hpp"

namespace vab {

struct Transaction {
    std::string day;  // YYYY-MM-DD
    std::string from;
    std::string to;
    double amount = 0.0;
};

/// Reads `day,from,to,amount`. Throws ParseError (with the line number) on a
/// malformed row, a bad date or a nonpositive amount.
std::vector<Transaction> read_ledger_csv(std::istream& in);

/// Reads `day,open`; prices must be positive and days unique.
std::map<std::string, double> read_price_csv(std::istream& in);

enum class AmountTransform { Log1p, Identity };
enum class ActivityMeasure { TransactionCount, Degree, Volume };

struct IngestOptions {
    std::size_t min_transactions_per_day = 5;
    std::size_t top_nodes = 150;
    AmountTransform transform = AmountTransform::Log1p;
    ActivityMeasure activity = ActivityMeasure::TransactionCount;
    bool normalize = true;
};

/// Per-address attribute for one day: mean (transformed) amount sent plus
/// mean amount received, a missing side counting as 0. Sorted by address.
/// Self-transfers are ignored.
std::vector<std::pair<std::string, double>> node_attributes(std::span<const Transaction> day,
                                                            AmountTransform transform);

/// One undirected graph per day that passes the activity floor, trimmed to
/// the most active addresses and min-max normalized.
std::map<std::string, AttributedGraph> ingest_transactions(std::span<const Transaction> ledger,
                                                           const IngestOptions& opts = {});

/// Open-price return and shock label of one day; absent on the first day.
struct PriceShock {
    std::optional<double> ret;
    std::optional<int> label;
};

/// R_t = (P_t - P_{t-1}) / P_{t-1} and Y_t = 1 iff |R_t| >= delta.
/// Throws std::invalid_argument on a nonpositive price or fewer than 2 days.
std::vector<PriceShock> label_anomalies(std::span<const double> prices, double delta = 0.05);

/// 1 iff some Y_s = 1 for s in t+1..t+h; absent for the last h days.
std::vector<std::optional<int>> horizon_label(std::span<const std::optional<int>> labels,
                                              std::size_t h);

struct FeatureConfig {
    double delta = 0.05;
    std::size_t horizon = 1;
    std::size_t window = 7;
    std::size_t grid_points = 100;
    BandMode band = BandMode::Closed;
    std::size_t threads = 1;
};

struct DailyFeatureRow {
    std::string day;
    double price = 0.0;
    double price_norm = 0.0;
    std::optional<double> ret;
    std::optional<int> label;
    std::optional<int> horizon_label;
    std::size_t nodes = 0;
    std::size_t edges = 0;
    double avg_clustering = 0.0;
    std::optional<double> depth0;
    std::optional<double> depth1;
};

/// One row per day that has both a graph and a price. Returns, labels and
/// normalized prices are computed over the full price series; rolling depths
/// run over consecutive table rows.
std::vector<DailyFeatureRow> feature_table(const std::map<std::string, AttributedGraph>& graphs,
                                           const std::map<std::string, double>& prices,
                                           const FeatureConfig& cfg = {});

inline constexpr const char* kFeatureSchema = "vab.daily_features.v1";

/// Writes a `# schema:` comment line, the header and one line per row;
/// undefined values are empty fields.
void write_feature_csv(std::ostream& out, std::span<const DailyFeatureRow> rows);

}  // namespace vab

#endif  // VAB_LEDGER_HPP
