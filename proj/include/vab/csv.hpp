// Minimal CSV reading/writing and the file formats of the command-line tool.

#ifndef VAB_CSV_HPP
#define VAB_CSV_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vab/betti.hpp"
#include "vab/graph.hpp"
#include "vab/persistence.hpp"

namespace vab {

/// Raised for malformed input files; the message carries the line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct CsvRow {
    std::size_t line = 0;  // 1-based line number in the source
    std::vector<std::string> fields;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<CsvRow> rows;

    /// Index of a header column; throws ParseError(1, ...) when absent.
    std::size_t column(std::string_view name) const;
};

/// Reads a comma-separated table with a header row. Blank lines and lines
/// starting with '#' are skipped; double-quoted fields may contain commas
/// and doubled quotes. An empty stream yields an empty table.
CsvTable read_csv(std::istream& in);

/// Shortest decimal text that round-trips; "inf"/"-inf" for infinities.
std::string format_number(double x);

/// Parses a finite number or "inf"/"+inf"/"-inf"; throws ParseError.
double parse_number(std::string_view text, std::size_t line);

/// `u,v` edge list plus `node,value` attributes. Nodes that appear only in
/// the attribute file become isolated nodes.
AttributedGraph read_graph_csv(std::istream& edges, std::istream& attrs);

/// `dim,birth,death` rows in canonical order, `inf` for essential points.
void write_diagram_csv(std::ostream& out, const PersistenceDiagram& pd);
PersistenceDiagram read_diagram_csv(std::istream& in);

/// One labelled vector per row, for the vectorize and depth commands.
struct LabelledVector {
    std::string label;
    int dim = 0;
    std::vector<double> values;
};

/// Wide format: `label,dim,v1..vK`.
void write_vectors_wide(std::ostream& out, std::span<const LabelledVector> rows);
std::vector<LabelledVector> read_vectors_wide(std::istream& in);

/// Long VAB format: `dim,k,t_lo,t_hi,value`, one row per grid cell.
void write_vab_long(std::ostream& out, int dim, const VAB& vab);

}  // namespace vab

#endif  // VAB_CSV_HPP
