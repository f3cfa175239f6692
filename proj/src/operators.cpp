#include "tk/operators.hpp"

#include <stdexcept>

namespace tk {

LocalOperators build_operators(const Graph& g, Vertex x) {
    LocalOperators ops;
    ops.metric = local_metric(g, x);
    const auto n = static_cast<std::size_t>(g.order());
    const auto& dist = ops.metric.dist;

    ops.adjacency = IntMatrix(n, n);
    ops.lowering = IntMatrix(n, n);
    ops.flat = IntMatrix(n, n);
    ops.raising = IntMatrix(n, n);
    for (auto [u, v] : g.edges()) {
        ops.adjacency(u, v) = ops.adjacency(v, u) = 1;
        // (z, y) entry of L is 1 when z is one level below y.
        if (dist[u] == dist[v]) {
            ops.flat(u, v) = ops.flat(v, u) = 1;
        } else if (dist[u] + 1 == dist[v]) {
            ops.lowering(u, v) = 1;
            ops.raising(v, u) = 1;
        } else {
            ops.lowering(v, u) = 1;
            ops.raising(u, v) = 1;
        }
    }

    ops.dual_idempotents.assign(ops.metric.ecc + 1, IntMatrix(n, n));
    for (std::size_t v = 0; v < n; ++v) ops.dual_idempotents[dist[v]](v, v) = 1;
    return ops;
}

std::string shape_name(ShapeFamily family, int m) {
    std::string r = "r^" + std::to_string(m);
    switch (family) {
        case ShapeFamily::Raise: return r;
        case ShapeFamily::RaiseThenLower: return r + "l";
        case ShapeFamily::LowerThenRaise: return "l" + r;
        case ShapeFamily::RaiseThenFlat: return r + "f";
    }
    return r;
}

std::vector<Step> parse_shape(std::string_view text) {
    std::vector<Step> steps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == 'r') {
            steps.push_back(Step::Raise);
        } else if (c == 'f') {
            steps.push_back(Step::Flat);
        } else if (c == 'l') {
            steps.push_back(Step::Lower);
        } else if (text.substr(i).starts_with("\xE2\x84\x93")) {  // ℓ
            steps.push_back(Step::Lower);
            i += 2;
        } else {
            throw std::invalid_argument("shape: unexpected character '" + std::string(1, c) + "'");
        }
    }
    return steps;
}

std::optional<FamilyMatch> classify_shape(std::span<const Step> steps) {
    const int n = static_cast<int>(steps.size());
    auto raises = [&](int from, int to) {
        for (int i = from; i < to; ++i)
            if (steps[i] != Step::Raise) return false;
        return true;
    };
    if (raises(0, n)) return FamilyMatch{ShapeFamily::Raise, n};
    if (steps.back() == Step::Lower && raises(0, n - 1)) return FamilyMatch{ShapeFamily::RaiseThenLower, n - 1};
    if (steps.back() == Step::Flat && raises(0, n - 1)) return FamilyMatch{ShapeFamily::RaiseThenFlat, n - 1};
    if (steps.front() == Step::Lower && raises(1, n)) return FamilyMatch{ShapeFamily::LowerThenRaise, n - 1};
    return std::nullopt;
}

namespace {

IntMatrix power(const IntMatrix& m, int k) {
    IntMatrix out = IntMatrix::identity(m.rows());
    for (int i = 0; i < k; ++i) out = multiply(m, out);
    return out;
}

IntMatrix apply_family(const LocalOperators& ops, ShapeFamily family, const IntMatrix& rm) {
    switch (family) {
        case ShapeFamily::Raise: return rm;
        case ShapeFamily::RaiseThenLower: return multiply(ops.lowering, rm);
        case ShapeFamily::LowerThenRaise: return multiply(rm, ops.lowering);
        case ShapeFamily::RaiseThenFlat: return multiply(ops.flat, rm);
    }
    throw std::logic_error("unknown shape family");
}

}  // namespace

WalkTable walk_table(const LocalOperators& ops, ShapeFamily family, int m) {
    if (m < 0) throw std::invalid_argument("walk_table: negative exponent");
    return {family, m, apply_family(ops, family, power(ops.raising, m))};
}

const IntMatrix& WalkCounter::raise_power(int m) {
    if (powers_.empty()) powers_.push_back(IntMatrix::identity(ops_->order()));
    while (static_cast<int>(powers_.size()) <= m) powers_.push_back(multiply(ops_->raising, powers_.back()));
    return powers_[m];
}

IntMatrix WalkCounter::table(ShapeFamily family, int m) {
    return apply_family(*ops_, family, raise_power(m));
}

IntMatrix walk_matrix(const LocalOperators& ops, std::span<const Step> steps) {
    IntMatrix out = IntMatrix::identity(ops.order());
    for (Step s : steps) {
        const IntMatrix& m = s == Step::Raise ? ops.raising : s == Step::Flat ? ops.flat : ops.lowering;
        out = multiply(m, out);
    }
    return out;
}

namespace {

Integer count_from(const Graph& g, const std::vector<int>& dist, std::span<const Step> steps,
                   std::size_t pos, Vertex at, Vertex target) {
    if (pos == steps.size()) return at == target ? 1 : 0;
    int want = dist[at] + (steps[pos] == Step::Raise ? 1 : steps[pos] == Step::Lower ? -1 : 0);
    Integer total = 0;
    for (Vertex next : g.neighbors(at))
        if (dist[next] == want) total += count_from(g, dist, steps, pos + 1, next, target);
    return total;
}

}  // namespace

Integer enumerate_walks(const Graph& g, Vertex x, std::span<const Step> steps, Vertex y, Vertex z) {
    if (!g.contains(x) || !g.contains(y) || !g.contains(z)) throw GraphError("vertex out of range");
    auto dist = bfs_distances(g, x);
    return count_from(g, dist, steps, 0, y, z);
}

IntMatrix restrict_block(const IntMatrix& m, std::span<const Vertex> rows, std::span<const Vertex> cols) {
    return submatrix(m, rows, cols);
}

}  // namespace tk
