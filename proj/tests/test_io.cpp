#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace epg;

TEST_CASE("EPG files round-trip through print and parse") {
    Rng rng{5};
    for (int round = 0; round < 50; ++round) {
        const EdgePeriodicGraph g = random_epg(rng, 6, 0.5, 6);
        CHECK(parse_epg_text(print_epg(g)) == g);
    }
    const EdgePeriodicGraph fig = test::fig1();
    CHECK(parse_epg_text(print_epg(fig)) == fig);
}

TEST_CASE("graph and PCA files round-trip") {
    Rng rng{6};
    for (int round = 0; round < 50; ++round) {
        const StaticGraph g = random_graph(rng, 7, 0.4);
        CHECK(parse_graph_text(print_graph(g)) == g);
        const PcaInstance x = random_pca(rng, 5, 8);
        CHECK(parse_pca_text(print_pca(x)) == x);
        const MulticoloredPcaInstance mc = random_mcpca(rng, 3, 3, 6);
        if (mc.groups.size() > 1)
            CHECK(parse_mcpca_text(print_mcpca(mc)) == mc);
    }
}

TEST_CASE("repetition abbreviations expand on parse") {
    CHECK(expand_bitstring("10^4", 1) == "10000");
    CHECK(expand_bitstring("0^21", 1) == "001"); // unbraced counts are one digit
    CHECK(expand_bitstring("10^{12}", 1) == "1" + std::string(12, '0'));
    CHECK_THROWS_AS(expand_bitstring("1^", 1), ParseError);
    CHECK_THROWS_AS(expand_bitstring("1^{3", 1), ParseError);
    CHECK_THROWS_AS(expand_bitstring("1x", 1), ParseError);
    const EdgePeriodicGraph g = parse_epg_text("epg 2 1\n0 1 10^31^2\n");
    CHECK(g.label(std::size_t{0}).str() == "100011");
}

TEST_CASE("comments and blank lines are ignored") {
    const EdgePeriodicGraph g = parse_epg_text("# header comment\n\nepg 2 1 # trailing\n 0 1 01 \n\n");
    CHECK(g.graph().vertex_count() == 2);
    CHECK(g.label(std::size_t{0}).str() == "01");
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_epg_text("epg 2 1\n0 1 000\n");
        FAIL("expected a diagnostic");
    } catch (const ParseError& e) {
        CHECK(e.line_number == 2);
        CHECK(std::string{e.what()}.find("all-zero") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_epg_text("epg 2 2\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_epg_text("graph 2 1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_epg_text("epg 2 1\n0 1 0a1\n"), ParseError);
    CHECK_THROWS_AS(parse_epg_text("epg 1 1\n0 1 1\n"), ParseError);   // endpoint out of range
    CHECK_THROWS_AS(parse_graph_text("graph 2 1\nx y\n"), ParseError);
    CHECK_THROWS_AS(parse_pca_text("10\n%\n01\n"), ParseError);        // groups in a plain PCA file
    CHECK_THROWS_AS(parse_mcpca_text("10\n%\n"), ParseError);          // empty group
}

TEST_CASE("epg labels stay attached to their edges regardless of input order") {
    const EdgePeriodicGraph g = parse_epg_text("epg 3 2\n2 1 011\n0 1 10\n");
    CHECK(g.label(Edge{1, 2}).str() == "011");
    CHECK(g.label(Edge{0, 1}).str() == "10");
}

TEST_CASE("mcpca files use % separators") {
    const MulticoloredPcaInstance x = parse_mcpca_text("10\n01\n%\n1\n");
    REQUIRE(x.groups.size() == 2);
    CHECK(x.groups[0].size() == 2);
    CHECK(x.groups[1][0].str() == "1");
}

TEST_CASE("digest is stable") {
    CHECK(digest("") == "cbf29ce484222325");
    CHECK(digest("abc") == digest("abc"));
    CHECK(digest("abc") != digest("abd"));
}
