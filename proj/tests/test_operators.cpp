#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tk/constructions.hpp"
#include "tk/operators.hpp"

using namespace tk;

namespace {

std::vector<int> deltas(ShapeFamily f, int m) {
    std::vector<int> out;
    if (f == ShapeFamily::LowerThenRaise) out.push_back(-1);
    for (int k = 0; k < m; ++k) out.push_back(+1);
    if (f == ShapeFamily::RaiseThenLower) out.push_back(-1);
    if (f == ShapeFamily::RaiseThenFlat) out.push_back(0);
    return out;
}

std::vector<Step> steps_of(const std::vector<int>& ds) {
    std::vector<Step> out;
    for (int d : ds) out.push_back(d > 0 ? Step::Raise : d < 0 ? Step::Lower : Step::Flat);
    return out;
}

}  // namespace

TEST_CASE("adjacency splits into lowering, flat and raising parts") {
    auto [g, x] = example_graph();
    auto ops = build_operators(g, x);
    CHECK(ops.lowering + ops.flat + ops.raising == ops.adjacency);
    CHECK(ops.raising == ops.lowering.transpose());
    CHECK(ops.flat == ops.flat.transpose());
    CHECK(ops.ecc() == 2);
    CHECK(ops.dual_idempotents.size() == 3);
    IntMatrix sum(6, 6);
    for (const auto& e : ops.dual_idempotents) sum = sum + e;
    CHECK(sum == IntMatrix::identity(6));
}

TEST_CASE("shape strings") {
    auto s = parse_shape("rrl");
    CHECK(s == std::vector<Step>{Step::Raise, Step::Raise, Step::Lower});
    CHECK(parse_shape("r\xe2\x84\x93") == std::vector<Step>{Step::Raise, Step::Lower});
    CHECK(parse_shape("").empty());
    CHECK_THROWS(parse_shape("rx"));

    auto m = classify_shape(s);
    REQUIRE(m);
    CHECK(m->family == ShapeFamily::RaiseThenLower);
    CHECK(m->m == 2);
    auto lr = parse_shape("lrr");
    CHECK(classify_shape(lr)->family == ShapeFamily::LowerThenRaise);
    auto rf = parse_shape("rf");
    CHECK(classify_shape(rf)->family == ShapeFamily::RaiseThenFlat);
    auto empty = parse_shape("");
    CHECK(classify_shape(empty)->family == ShapeFamily::Raise);
    auto odd = parse_shape("frl");
    CHECK_FALSE(classify_shape(odd));
    CHECK(shape_name(ShapeFamily::RaiseThenLower, 2) == "r^2l");
}

TEST_CASE("example graph walk counts") {
    auto [g, x] = example_graph();
    auto ops = build_operators(g, x);
    auto v = [&](const char* l) { return g.vertex(l); };
    // 2 -> 5 -> 3 is the only rl walk from 2 to 3.
    auto rl = walk_table(ops, ShapeFamily::RaiseThenLower, 1);
    CHECK(rl.counts(v("3"), v("2")) == 1);
    auto r2 = walk_table(ops, ShapeFamily::Raise, 2);
    CHECK(r2.counts(v("4"), v("2")) == 0);
    auto r0 = walk_table(ops, ShapeFamily::Raise, 0);
    CHECK(r0.counts == IntMatrix::identity(6));
}

TEST_CASE("walk tables agree with enumeration on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = testing::random_connected(rng, n, 0.35);
        Vertex x = static_cast<Vertex>(rng() % n);
        auto ops = build_operators(g, x);
        auto dx = testing::distances(g, x);
        WalkCounter counter(ops);
        for (auto f : {ShapeFamily::Raise, ShapeFamily::RaiseThenLower, ShapeFamily::LowerThenRaise,
                       ShapeFamily::RaiseThenFlat})
            for (int m = 0; m <= ops.ecc() + 1; ++m) {
                auto ds = deltas(f, m);
                auto table = walk_table(ops, f, m).counts;
                CHECK(counter.table(f, m) == table);
                auto steps = steps_of(ds);
                for (Vertex y = 0; y < n; ++y)
                    for (Vertex z = 0; z < n; ++z) {
                        long expect = testing::count_walks(g, dx, ds, y, z);
                        CHECK(table(z, y) == expect);
                        CHECK(enumerate_walks(g, x, steps, y, z) == expect);
                    }
            }
    }
}

TEST_CASE("general products match enumeration") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testing::random_connected(rng, 6, 0.4);
        auto ops = build_operators(g, 0);
        auto dx = testing::distances(g, 0);
        std::vector<int> ds;
        for (int k = 0; k < 4; ++k) ds.push_back(static_cast<int>(rng() % 3) - 1);
        auto prod = walk_matrix(ops, steps_of(ds));
        for (Vertex y = 0; y < 6; ++y)
            for (Vertex z = 0; z < 6; ++z) CHECK(prod(z, y) == testing::count_walks(g, dx, ds, y, z));
    }
}

TEST_CASE("block restriction") {
    auto [g, x] = example_graph();
    auto ops = build_operators(g, x);
    const auto& l1 = ops.metric.spheres[1];
    const auto& l2 = ops.metric.spheres[2];
    auto block = restrict_block(ops.raising, l2, l1);
    CHECK(block.rows() == l2.size());
    CHECK(block.cols() == l1.size());
    for (std::size_t r = 0; r < l2.size(); ++r)
        for (std::size_t c = 0; c < l1.size(); ++c) CHECK(block(r, c) == ops.raising(l2[r], l1[c]));
}
