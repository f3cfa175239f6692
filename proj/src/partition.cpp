#include "tk/partition.hpp"

#include <algorithm>

namespace tk {

LocalMetric local_metric(const Graph& g, Vertex x) {
    if (!g.contains(x)) throw GraphError("base vertex out of range");
    LocalMetric m;
    m.base = x;
    m.dist = bfs_distances(g, x);
    for (int d : m.dist) {
        if (d < 0) throw GraphError("graph is disconnected");
        m.ecc = std::max(m.ecc, d);
    }
    m.spheres.assign(m.ecc + 1, {});
    for (Vertex v = 0; v < g.order(); ++v) m.spheres[m.dist[v]].push_back(v);
    return m;
}

std::span<const Vertex> DistancePartition::cell(int i, int j) const {
    auto it = cells.find({i, j});
    if (it == cells.end()) return {};
    return it->second;
}

DistancePartition distance_partition(const Graph& g, Vertex x, Vertex y) {
    if (!g.contains(x) || !g.contains(y)) throw GraphError("vertex out of range");
    if (!g.adjacent(x, y)) throw GraphError("vertices " + g.label(x) + " and " + g.label(y) + " are not adjacent");
    auto mx = local_metric(g, x);
    auto dy = bfs_distances(g, y);

    DistancePartition p;
    p.x = x;
    p.y = y;
    p.ecc_x = mx.ecc;
    p.ecc_y = *std::max_element(dy.begin(), dy.end());
    for (int i = 0; i <= p.ecc_x; ++i)
        for (int j = std::max(0, i - 1); j <= std::min(p.ecc_y, i + 1); ++j) p.cells[{i, j}];
    for (Vertex v = 0; v < g.order(); ++v) {
        // Triangle inequality keeps every vertex inside the stored band.
        p.cells[{mx.dist[v], dy[v]}].push_back(v);
    }
    return p;
}

PartitionStructureReport structure_report(const Graph& g, Vertex x) {
    auto metric = local_metric(g, x);
    const int d = metric.ecc;

    PartitionStructureReport rep;
    rep.base = x;
    rep.ecc = d;
    rep.vacuous = g.degree(x) < 2;
    rep.tree = is_tree(g);

    for (Vertex y : g.neighbors(x)) {
        auto part = distance_partition(g, x, y);
        NeighborStructure ns;
        ns.y = y;
        ns.up.resize(d + 1);
        ns.flat.resize(d + 1);
        ns.down.resize(d + 1);
        for (int i = 0; i <= d; ++i) {
            ns.up[i] = part.nonempty(i, i + 1);
            ns.flat[i] = part.nonempty(i, i);
            ns.down[i] = part.nonempty(i, i - 1);
        }
        rep.neighbors.push_back(std::move(ns));
    }

    auto flat_anywhere = [&](int i) {
        return std::any_of(rep.neighbors.begin(), rep.neighbors.end(), [i](const auto& n) { return n.flat[i]; });
    };

    for (auto& ns : rep.neighbors) {
        int t = 0;
        while (t + 1 <= d && ns.up[t + 1] && !flat_anywhere(t + 1)) ++t;
        bool tail_empty = true;
        for (int i = t + 1; i <= d; ++i) tail_empty = tail_empty && !ns.up[i];
        if (tail_empty) ns.t = t;
    }

    for (const auto& ns : rep.neighbors) {
        for (int i = 1; i <= d; ++i) {
            if (!ns.down[i]) rep.down_cells_nonempty = false;
            if (ns.up[i]) {
                for (int j = 1; j <= i; ++j)
                    if (flat_anywhere(j)) rep.flat_cells_empty_below_up = false;
            }
        }
        if (!ns.t) {
            rep.thresholds_defined = false;
            continue;
        }
        int last_flat = 0;
        for (int j = 1; j <= d; ++j)
            if (ns.flat[j]) last_flat = j;
        for (int i = *ns.t + 1; i <= last_flat; ++i)
            if (!ns.flat[i]) rep.flat_run_after_threshold = false;
    }

    auto all_t = [&](auto pred) {
        return std::all_of(rep.neighbors.begin(), rep.neighbors.end(), [&](const auto& n) { return n.t && pred(*n.t); });
    };
    if (rep.tree) rep.tree_threshold_is_ecc = all_t([d](int t) { return t == d; });
    if (d >= 1 && flat_anywhere(1)) rep.d11_forces_zero = all_t([](int t) { return t == 0; });
    if (!rep.neighbors.empty()) {
        auto first = rep.neighbors.front().t;
        rep.threshold_constant = std::all_of(rep.neighbors.begin(), rep.neighbors.end(),
                                             [&](const auto& n) { return n.t == first; });
    }
    return rep;
}

}  // namespace tk
