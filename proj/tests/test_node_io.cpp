#include <doctest.h>

#include <fstream>
#include <sstream>

#include "netenergy/node_io.hpp"
#include "test_support.hpp"

using namespace netenergy;

TEST_CASE("parse the scalar example file") {
    std::istringstream in("1 1 1\n-4.5\n1\n3\n");
    const NodeSystem node = parse_node_stream(in);
    CHECK(node.a1(0, 0) == -4.5);
    CHECK(node.b1(0, 0) == 1.0);
    CHECK(node.c1(0, 0) == 3.0);
    CHECK(node.a12(0, 0) == 3.0);
}

TEST_CASE("parse the second-order example with comments") {
    std::istringstream in(
        "# node system\n"
        "2 1 1\n"
        "0 1   # first row of A1\n"
        "-4 -2.5\n"
        "0\n"
        "1\n"
        "2 2\n");
    const NodeSystem node = parse_node_stream(in);
    CHECK(test_support::max_abs_diff(node.a1, example_node_2().a1) == 0.0);
    CHECK(test_support::max_abs_diff(node.a12, example_node_2().a12) == 0.0);
}

TEST_CASE("malformed files carry a line number") {
    std::istringstream missing("2 1 1\n0 1\n-4\n");  // A1 second row truncated
    try {
        parse_node_stream(missing);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line >= 3);
    }

    std::istringstream garbage("1 1 1\nfoo\n1\n3\n");
    CHECK_THROWS_AS(parse_node_stream(garbage), ParseError);

    std::istringstream trailing("1 1 1\n-4.5\n1\n3\n99\n");
    CHECK_THROWS_AS(parse_node_stream(trailing), ParseError);

    std::istringstream bad_dim("0 1 1\n");
    CHECK_THROWS_AS(parse_node_stream(bad_dim), ParseError);
}

TEST_CASE("serialize and reparse round-trips exactly") {
    auto rng = test_support::make_rng(888);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rep % 4, m = 1 + rep % 2;
        const NodeSystem node = make_node_system(test_support::random_matrix(rng, n, n),
                                                 test_support::random_matrix(rng, n, m),
                                                 test_support::random_matrix(rng, m, n));
        std::ostringstream out;
        write_node_stream(out, node);
        std::istringstream in(out.str());
        const NodeSystem back = parse_node_stream(in);
        CHECK(test_support::max_abs_diff(node.a1, back.a1) == 0.0);
        CHECK(test_support::max_abs_diff(node.b1, back.b1) == 0.0);
        CHECK(test_support::max_abs_diff(node.c1, back.c1) == 0.0);
        CHECK(test_support::max_abs_diff(node.a12, back.a12) == 0.0);
    }
}

TEST_CASE("coupling file parser") {
    std::istringstream in("2\n0 1\n-1 0\n");
    std::ofstream("/tmp/netenergy_test_coupling.txt") << in.str();
    const RealMatrix g = parse_coupling_file("/tmp/netenergy_test_coupling.txt");
    CHECK(g(0, 1) == 1.0);
    CHECK(g(1, 0) == -1.0);
}

TEST_CASE("built-in example nodes match the published data") {
    const NodeSystem ex1 = example_node_1();
    CHECK(ex1.a12(0, 0) == 3.0);
    const NodeSystem ex2 = example_node_2();
    CHECK(test_support::max_abs_diff(ex2.a12, RealMatrix{{0.0, 0.0}, {2.0, 2.0}}) == 0.0);
}
