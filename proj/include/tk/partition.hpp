#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tk/graph.hpp"

namespace tk {

/// BFS data around a base vertex x.
struct LocalMetric {
    Vertex base = 0;
    std::vector<int> dist;                  ///< dist[v] = distance from base to v
    int ecc = 0;                            ///< eccentricity of base
    std::vector<std::vector<Vertex>> spheres;  ///< spheres[i] = vertices at distance i, ascending

    std::span<const Vertex> sphere(int i) const {
        if (i < 0 || i > ecc) return {};
        return spheres[i];
    }
};

/// Requires g connected; throws GraphError otherwise.
LocalMetric local_metric(const Graph& g, Vertex x);

/// Cells D^i_j = Gamma_i(x) ∩ Gamma_j(y) for an edge {x, y}, kept for |i - j| <= 1.
struct DistancePartition {
    Vertex x = 0;
    Vertex y = 0;
    int ecc_x = 0;
    int ecc_y = 0;
    std::map<std::pair<int, int>, std::vector<Vertex>> cells;

    /// Empty span for cells outside the stored band or range.
    std::span<const Vertex> cell(int i, int j) const;
    bool nonempty(int i, int j) const { return !cell(i, j).empty(); }
};

DistancePartition distance_partition(const Graph& g, Vertex x, Vertex y);

/// Nonemptiness pattern of the distance partition for one neighbor y of x.
struct NeighborStructure {
    Vertex y = 0;
    std::vector<bool> up;    ///< up[i]: D^i_{i+1} nonempty, 0 <= i <= d
    std::vector<bool> flat;  ///< flat[i]: D^i_i nonempty
    std::vector<bool> down;  ///< down[i]: D^i_{i-1} nonempty
    std::optional<int> t;    ///< threshold index, nullopt when the two-clause pattern fails
};

/// Structural predicates of the distance partitions around x.
///
/// The structural flags are evaluated on any input; they are only
/// guaranteed to hold when x passes the endpoint-1 condition.
struct PartitionStructureReport {
    Vertex base = 0;
    int ecc = 0;
    bool vacuous = false;  ///< deg(x) < 2
    bool tree = false;
    std::vector<NeighborStructure> neighbors;

    bool down_cells_nonempty = true;   ///< D^i_{i-1}(x,y) != ∅ for all y, 1 <= i <= d
    bool flat_cells_empty_below_up = true;  ///< D^i_{i+1}(x,y) != ∅ ⇒ D^j_j(x,z) = ∅, j <= i, all z
    bool thresholds_defined = true;    ///< every t(y) exists
    bool flat_run_after_threshold = true;  ///< D^j_j(x,y) != ∅ ⇒ D^i_i(x,y) != ∅ for t(y) < i <= j
    bool tree_threshold_is_ecc = true;  ///< tree ⇒ t(y) = d (vacuously true on non-trees)
    bool d11_forces_zero = true;        ///< some D^1_1(x,z) != ∅ ⇒ t(y) = 0 for all y
    bool threshold_constant = true;     ///< all t(y) equal

    bool all_predicates_hold() const {
        return down_cells_nonempty && flat_cells_empty_below_up && thresholds_defined &&
               flat_run_after_threshold && tree_threshold_is_ecc && d11_forces_zero;
    }
};

PartitionStructureReport structure_report(const Graph& g, Vertex x);

}  // namespace tk
