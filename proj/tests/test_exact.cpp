#include <doctest.h>

#include <random>

#include "tk/exact.hpp"

using namespace tk;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
    return m;
}

RatMatrix rat(std::initializer_list<std::initializer_list<long>> rows) {
    RatMatrix m(rows.size(), rows.begin()->size());
    std::size_t r = 0;
    for (const auto& row : rows) {
        std::size_t c = 0;
        for (long v : row) m(r, c++) = v;
        ++r;
    }
    return m;
}

}  // namespace

TEST_CASE("parallel product matches reference") {
    std::mt19937_64 rng(1);
    for (auto [r, k, c] : {std::tuple{0, 3, 2}, {3, 0, 2}, {1, 1, 1}, {7, 5, 9}, {40, 40, 40}, {130, 70, 90}}) {
        auto a = random_matrix(rng, r, k, -3, 3);
        auto b = random_matrix(rng, k, c, -3, 3);
        CHECK(multiply(a, b) == multiply_reference(a, b));
    }
}

TEST_CASE("products do not overflow") {
    IntMatrix a(1, 1);
    a(0, 0) = Integer("123456789012345678901234567890");
    auto p = multiply(a, a);
    CHECK(p(0, 0) == Integer("15241578753238836750495351562536198787501905199875019052100"));
}

TEST_CASE("rref and rank") {
    auto m = rat({{2, 4, 6}, {1, 2, 3}, {0, 1, 1}});
    auto pivots = rref(m);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(m(0, 0) == 1);
    CHECK(m(0, 2) == 1);
    CHECK(m(1, 2) == 1);
    CHECK(m.row(2)[0] == 0);

    IntMatrix z(3, 2);
    CHECK(rank(z) == 0);
    IntMatrix id = IntMatrix::identity(4);
    CHECK(rank(id) == 4);
}

TEST_CASE("solve") {
    auto a = rat({{1, 1}, {1, -1}});
    std::vector<Rational> b{3, 1};
    auto s = solve(a, b);
    CHECK(s.consistent);
    CHECK(s.values[0] == 2);
    CHECK(s.values[1] == 1);
    CHECK(s.determined[0]);

    auto sing = rat({{1, 2}, {2, 4}});
    std::vector<Rational> bad{1, 3};
    CHECK_FALSE(solve(sing, bad).consistent);
    std::vector<Rational> good{1, 2};
    auto s2 = solve(sing, good);
    CHECK(s2.consistent);
    CHECK(s2.values[1] == 0);  // free variable
    CHECK(s2.values[0] == 1);
    CHECK_FALSE(s2.determined[0]);
    CHECK_FALSE(s2.determined[1]);
}

TEST_CASE("incremental system") {
    IncrementalSystem sys(2);
    std::vector<Rational> r1{2, 0};
    CHECK(sys.add(r1, 4));
    CHECK(sys.forces(0, 2));
    CHECK_FALSE(sys.forces(1, 0));
    std::vector<Rational> r2{1, 0};
    CHECK_FALSE(sys.add(r2, 3));  // contradicts x0 = 2
    CHECK(sys.rank() == 1);
    CHECK(sys.add(r2, 2));        // redundant
    std::vector<Rational> r3{1, 3};
    CHECK(sys.add(r3, 1));
    auto s = sys.solution();
    CHECK(s.consistent);
    CHECK(s.values[1] == Rational(-1, 3));
    CHECK(sys.forces(1, Rational(-1, 3)));

    IncrementalSystem zero(2);
    std::vector<Rational> zr{0, 0};
    CHECK(zero.add(zr, 0));
    CHECK_FALSE(zero.add(zr, 1));
}

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(3)) == "3");
    CHECK(to_string(Rational(-2, 4)) == "-1/2");
}
