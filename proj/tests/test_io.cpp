#include "doctest.h"
#include "support.hpp"
#include "treeaug/gen.hpp"
#include "treeaug/io.hpp"
#include "treeaug/oracle.hpp"
#include "treeaug/solve.hpp"
#include "treeaug/treewidth.hpp"

using namespace treeaug;
using treeaug::testing::mk;

TEST_CASE("instance serialization is canonical and round-trips") {
    auto inst = random_instance(7, 0.35, 99);
    auto text = serialize_instance(inst);
    auto file = parse_instance(text);
    CHECK(serialize_instance(file.instance) == text);
    CHECK(file.instance.node_count() == inst.node_count());
    CHECK(file.instance.edge_count() == inst.edge_count());
    auto [o1, r1] = solve_exact(inst);
    auto [o2, r2] = solve_exact(file.instance);
    CHECK(r1.value == r2.value);
}

TEST_CASE("weights parse as integers, fractions and decimals") {
    CHECK(parse_weight("3") == Weight(3));
    CHECK(parse_weight("3/2") == Weight(3, 2));
    CHECK(parse_weight("0.25") == Weight(1, 4));
    CHECK(parse_weight("2.5") == Weight(5, 2));
    CHECK_THROWS_AS(parse_weight("x"), Error);
    CHECK_THROWS_AS(parse_weight("1/0"), Error);
}

TEST_CASE("weighted instances round-trip exactly") {
    auto inst = mk(3, 0, {{1, 0}, {2, 0}}, {{1, 2}}, {Weight(1), Weight(3, 2), Weight(7)});
    auto file = parse_instance(serialize_instance(inst));
    CHECK(file.instance.weighted);
    CHECK(file.instance.weights[1] == Weight(3, 2));
    CHECK(file.instance.weights[2] == Weight(7));
}

TEST_CASE("float weights are rejected with a clear message") {
    std::string text = R"({"nodes":["a","d"],"root":"d","tree_arcs":[["a","d"]],
                           "edges":[],"weights":{"a":1.5}})";
    CHECK_THROWS_WITH_AS(parse_instance(text),
                         doctest::Contains("weights must be integers or rational strings"), Error);
}

TEST_CASE("missing fields are named") {
    CHECK_THROWS_WITH_AS(parse_instance(R"({"nodes":[],"tree_arcs":[],"edges":[]})"),
                         doctest::Contains("missing field: root"), Error);
    CHECK_THROWS_AS(parse_instance("not json"), Error);
}

TEST_CASE("parallel edges collapse at load with a warning") {
    std::string text = R"({"nodes":["a","b","d"],"root":"d",
        "tree_arcs":[["a","d"],["b","d"]],
        "edges":[["a","b"],["b","a"]]})";
    auto file = parse_instance(text);
    CHECK(file.instance.edge_count() == 1);
    REQUIRE(file.warnings.size() == 1);
    CHECK(file.warnings[0].find("parallel") != std::string::npos);
    CHECK(validate(file.instance).empty());
}

TEST_CASE("solutions round-trip through files") {
    auto inst = random_instance(6, 0.4, 12);
    auto [o, rep] = solve_exact(inst);
    auto sol = make_solution(inst, "exact", o, rep);
    auto parsed = parse_solution(serialize_solution(sol));
    CHECK(orientation_from_solution(inst, parsed) == o);
    CHECK(parsed.value == rep.value);
    verify_solution(inst, parsed);  // must not throw
}

TEST_CASE("verify rejects a cycle-inducing flip and a wrong value") {
    // path n0 <- n1 <- n2 with back edge {n2, n0}
    auto inst = mk(3, 0, {{1, 0}, {2, 1}}, {{2, 0}});
    auto [o, rep] = solve_exact(inst);
    auto good = make_solution(inst, "exact", o, rep);
    verify_solution(inst, good);

    auto cyclic = good;
    cyclic.oriented[0] = {good.oriented[0].second, good.oriented[0].first};
    CHECK_THROWS_WITH_AS(verify_solution(inst, cyclic), doctest::Contains("cycle"), Error);

    auto lying = good;
    lying.value = rep.value + Weight(1);
    CHECK_THROWS_WITH_AS(verify_solution(inst, lying), doctest::Contains("claimed value"), Error);

    auto partial = good;
    partial.oriented.clear();
    CHECK_THROWS_WITH_AS(verify_solution(inst, partial), doctest::Contains("unoriented"), Error);
}

TEST_CASE("verify rejects arcs that match no edge") {
    auto inst = mk(3, 0, {{1, 0}, {2, 0}}, {{1, 2}});
    SolutionFile sol;
    sol.oriented = {{"n0", "n1"}};  // a tree arc pair, not an undirected edge
    sol.value = Weight(0);
    CHECK_THROWS_WITH_AS(verify_solution(inst, sol), doctest::Contains("non-edge"), Error);
}

TEST_CASE("decomposition files load by node name") {
    auto inst = mk(3, 0, {{1, 0}, {2, 0}}, {{1, 2}});
    write_file("/tmp/treeaug_td_test.json",
               R"({"bags": [["n0","n1","n2"]], "parent": [-1]})");
    auto td = load_decomposition("/tmp/treeaug_td_test.json", inst);
    REQUIRE(td.bags.size() == 1);
    CHECK(td.width() == 2);
}

TEST_CASE("embedding round-trips preserving rotation order") {
    auto inst = grid_instance(2, 3);
    REQUIRE(inst.embedding.has_value());
    auto file = parse_instance(serialize_instance(inst));
    REQUIRE(file.instance.embedding.has_value());
    CHECK(*file.instance.embedding == *inst.embedding);
}
