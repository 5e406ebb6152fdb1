#include "vab/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace vab {
namespace {

std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (quoted) throw ParseError(line_no, "unterminated quoted field");
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(std::string s) {
    const auto ws = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

const std::string& field(const CsvRow& row, std::size_t i) {
    if (i >= row.fields.size()) throw ParseError(row.line, "missing field");
    return row.fields[i];
}

}  // namespace

std::size_t CsvTable::column(std::string_view name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw ParseError(1, "missing column '" + std::string(name) + "'");
    return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        auto fields = split_line(line, line_no);
        for (auto& f : fields) f = trim(std::move(f));
        if (!have_header) {
            table.header = std::move(fields);
            have_header = true;
        } else {
            if (fields.size() != table.header.size()) {
                throw ParseError(line_no, "expected " + std::to_string(table.header.size()) +
                                              " fields, found " + std::to_string(fields.size()));
            }
            table.rows.push_back({line_no, std::move(fields)});
        }
    }
    return table;
}

std::string format_number(double x) {
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::isnan(x)) return "nan";
    if (x == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::size_t line) {
    if (text == "inf" || text == "+inf" || text == "Inf") return kInfinity;
    if (text == "-inf" || text == "-Inf") return -kInfinity;
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
        throw ParseError(line, "not a number: '" + std::string(text) + "'");
    }
    return value;
}

AttributedGraph read_graph_csv(std::istream& edges, std::istream& attrs) {
    const CsvTable et = read_csv(edges);
    const CsvTable at = read_csv(attrs);
    std::vector<std::pair<std::string, std::string>> edge_list;
    if (!et.header.empty()) {
        if (et.header.size() < 2) throw ParseError(1, "edge list needs two columns");
        for (const auto& r : et.rows) edge_list.emplace_back(field(r, 0), field(r, 1));
    }
    std::vector<std::pair<std::string, double>> attr_list;
    if (!at.header.empty()) {
        if (at.header.size() < 2) throw ParseError(1, "attribute file needs two columns");
        for (const auto& r : at.rows) {
            attr_list.emplace_back(field(r, 0), parse_number(field(r, 1), r.line));
        }
    }
    return AttributedGraph::build(edge_list, attr_list);
}

void write_diagram_csv(std::ostream& out, const PersistenceDiagram& pd) {
    PersistenceDiagram sorted = pd;
    sorted.canonicalize();
    out << "dim,birth,death\n";
    for (const auto& p : sorted.points) {
        out << p.dim << ',' << format_number(p.birth) << ',' << format_number(p.death) << '\n';
    }
}

PersistenceDiagram read_diagram_csv(std::istream& in) {
    const CsvTable t = read_csv(in);
    PersistenceDiagram pd;
    if (t.header.empty()) return pd;
    const std::size_t cd = t.column("dim");
    const std::size_t cb = t.column("birth");
    const std::size_t cx = t.column("death");
    bool first = true;
    for (const auto& r : t.rows) {
        const double dim = parse_number(field(r, cd), r.line);
        if (dim != 0.0 && dim != 1.0) throw ParseError(r.line, "dimension must be 0 or 1");
        const double b = parse_number(field(r, cb), r.line);
        const double d = parse_number(field(r, cx), r.line);
        if (!std::isfinite(b) || d < b) throw ParseError(r.line, "need finite birth <= death");
        pd.points.push_back({static_cast<int>(dim), b, d});
        const double hi = std::isfinite(d) ? d : b;
        pd.min_value = first ? b : std::min(pd.min_value, b);
        pd.max_value = first ? hi : std::max(pd.max_value, hi);
        first = false;
    }
    pd.canonicalize();
    return pd;
}

void write_vectors_wide(std::ostream& out, std::span<const LabelledVector> rows) {
    const std::size_t width = rows.empty() ? 0 : rows.front().values.size();
    out << "label,dim";
    for (std::size_t k = 1; k <= width; ++k) out << ",v" << k;
    out << '\n';
    for (const auto& r : rows) {
        if (r.values.size() != width) throw std::invalid_argument("vectors differ in length");
        out << r.label << ',' << r.dim;
        for (double v : r.values) out << ',' << format_number(v);
        out << '\n';
    }
}

std::vector<LabelledVector> read_vectors_wide(std::istream& in) {
    const CsvTable t = read_csv(in);
    std::vector<LabelledVector> out;
    if (t.header.empty()) return out;
    if (t.header.size() < 3) throw ParseError(1, "vector file needs label, dim and values");
    for (const auto& r : t.rows) {
        LabelledVector v;
        v.label = r.fields[0];
        v.dim = static_cast<int>(parse_number(r.fields[1], r.line));
        for (std::size_t k = 2; k < r.fields.size(); ++k) {
            v.values.push_back(parse_number(r.fields[k], r.line));
        }
        out.push_back(std::move(v));
    }
    return out;
}

void write_vab_long(std::ostream& out, int dim, const VAB& vab) {
    for (std::size_t k = 0; k < vab.values.size(); ++k) {
        out << dim << ',' << k + 1 << ',' << format_number(vab.grid[k]) << ','
            << format_number(vab.grid[k + 1]) << ',' << format_number(vab.values[k]) << '\n';
    }
}

}  // namespace vab
