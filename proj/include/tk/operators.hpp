#pragma once

#include <deque>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tk/exact.hpp"
#include "tk/graph.hpp"
#include "tk/partition.hpp"

namespace tk {

/// Adjacency matrix, dual idempotents and the lowering/flat/raising split at a base vertex.
struct LocalOperators {
    LocalMetric metric;
    IntMatrix adjacency;
    std::vector<IntMatrix> dual_idempotents;  ///< E*_0 .. E*_d
    IntMatrix lowering;
    IntMatrix flat;
    IntMatrix raising;

    int ecc() const { return metric.ecc; }
    std::size_t order() const { return adjacency.rows(); }
};

LocalOperators build_operators(const Graph& g, Vertex x);

enum class Step { Raise, Flat, Lower };

/// The four walk-shape families used by the fits: r^m, r^m l, l r^m, r^m f.
enum class ShapeFamily { Raise, RaiseThenLower, LowerThenRaise, RaiseThenFlat };

std::string shape_name(ShapeFamily family, int m);

/// Parses a step string over {r, f, l}; the UTF-8 letter ℓ is accepted for l.
std::vector<Step> parse_shape(std::string_view text);

/// Family and exponent of a step string, if it belongs to one of the four families.
struct FamilyMatch {
    ShapeFamily family;
    int m;
};
std::optional<FamilyMatch> classify_shape(std::span<const Step> steps);

/// Walk counts of one shape: counts(z, y) = number of y-to-z walks of that shape.
struct WalkTable {
    ShapeFamily family;
    int m = 0;
    IntMatrix counts;
};

WalkTable walk_table(const LocalOperators& ops, ShapeFamily family, int m);

/// Cached powers R^0, R^1, ... for repeated walk-table queries at one base vertex.
class WalkCounter {
public:
    explicit WalkCounter(const LocalOperators& ops) : ops_(&ops) {}

    const IntMatrix& raise_power(int m);
    IntMatrix table(ShapeFamily family, int m);

private:
    const LocalOperators* ops_;
    std::deque<IntMatrix> powers_;  // stable references
};

/// Matrix route for an arbitrary step string: M_{t_j} ... M_{t_1}.
IntMatrix walk_matrix(const LocalOperators& ops, std::span<const Step> steps);

/// Depth-first count of y-to-z walks whose steps match `steps` relative to x.
/// Independent of the matrix route; used as its oracle.
Integer enumerate_walks(const Graph& g, Vertex x, std::span<const Step> steps, Vertex y, Vertex z);

/// Block of a table on the given rows and columns, ascending index order expected.
IntMatrix restrict_block(const IntMatrix& m, std::span<const Vertex> rows, std::span<const Vertex> cols);

}  // namespace tk
