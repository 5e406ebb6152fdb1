#include <doctest.h>

#include <sstream>

#include "../oracles.hpp"
#include "vab/csv.hpp"

TEST_CASE("read_csv: quoting, comments, blank lines and BOM") {
    std::istringstream in("\xEF\xBB\xBF" "a,b\n# comment\n\n\"x,1\", \"say \"\"hi\"\"\"\r\n3,4\n");
    const auto t = vab::read_csv(in);
    CHECK(t.header == std::vector<std::string>{"a", "b"});
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0].fields == std::vector<std::string>{"x,1", "say \"hi\""});
    CHECK(t.rows[0].line == 4);
    CHECK(t.rows[1].line == 5);
    CHECK(t.column("b") == 1);
    CHECK_THROWS_AS(t.column("c"), vab::ParseError);
}

TEST_CASE("read_csv: malformed rows") {
    std::istringstream short_row("a,b\n1\n");
    CHECK_THROWS_AS(vab::read_csv(short_row), vab::ParseError);
    std::istringstream open_quote("a\n\"abc\n");
    CHECK_THROWS_AS(vab::read_csv(open_quote), vab::ParseError);
}

TEST_CASE("number formatting round-trips") {
    oracle::Rng rng(91);
    for (int i = 0; i < 1000; ++i) {
        const double x = (oracle::unit(rng) - 0.5) * std::pow(10.0, static_cast<double>(oracle::below(rng, 20)) - 10);
        CHECK(vab::parse_number(vab::format_number(x), 0) == x);
    }
    CHECK(vab::format_number(vab::kInfinity) == "inf");
    CHECK(vab::format_number(0.0) == "0");
    CHECK(vab::format_number(-0.0) == "0");
    CHECK(vab::parse_number("+inf", 0) == vab::kInfinity);
    CHECK(vab::parse_number("-inf", 0) == -vab::kInfinity);
    CHECK_THROWS_AS(vab::parse_number("1.5x", 3), vab::ParseError);
    CHECK_THROWS_AS(vab::parse_number("", 3), vab::ParseError);
}

TEST_CASE("diagram CSV round trip in canonical order") {
    auto pd = vab::PersistenceDiagram::from_pairs(1, {{0.5, vab::kInfinity}, {0.25, 0.75}});
    pd.points.push_back({0, 0.1, 0.2});
    std::ostringstream out;
    vab::write_diagram_csv(out, pd);
    CHECK(out.str() == "dim,birth,death\n0,0.1,0.2\n1,0.25,0.75\n1,0.5,inf\n");
    std::istringstream in(out.str());
    auto back = vab::read_diagram_csv(in);
    pd.canonicalize();
    CHECK(back.points == pd.points);
    std::istringstream bad("dim,birth,death\n2,0,1\n");
    CHECK_THROWS_AS(vab::read_diagram_csv(bad), vab::ParseError);
    std::istringstream reversed("dim,birth,death\n0,1,0\n");
    CHECK_THROWS_AS(vab::read_diagram_csv(reversed), vab::ParseError);
}

TEST_CASE("graph CSV with string labels and isolated nodes") {
    std::istringstream edges("u,v\nalice,bob\nbob,carol\nbob,alice\n");
    std::istringstream attrs("node,value\nalice,1\nbob,2\ncarol,3\ndave,4\n");
    const auto g = vab::read_graph_csv(edges, attrs);
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.degree(*g.find("dave")) == 0);
}

TEST_CASE("vector formats") {
    const std::vector<vab::LabelledVector> rows{{"d1", 0, {0.5, 1}}, {"d1", 1, {0, 0.25}}};
    std::ostringstream out;
    vab::write_vectors_wide(out, rows);
    CHECK(out.str() == "label,dim,v1,v2\nd1,0,0.5,1\nd1,1,0,0.25\n");
    std::istringstream in(out.str());
    const auto back = vab::read_vectors_wide(in);
    REQUIRE(back.size() == 2);
    CHECK(back[1].values == rows[1].values);

    const vab::VAB v{{0.5, 0.6}, {0, 2, 4}};
    std::ostringstream lng;
    vab::write_vab_long(lng, 0, v);
    CHECK(lng.str() == "0,1,0,2,0.5\n0,2,2,4,0.6\n");
}
