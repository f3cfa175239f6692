#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "tk/graph.hpp"

namespace tk::testing {

/// Random connected graph: random spanning tree plus each other pair with probability p.
inline Graph random_connected(std::mt19937_64& rng, int n, double p) {
    std::vector<Edge> edges;
    std::vector<Vertex> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 1; k < n; ++k) {
        std::uniform_int_distribution<int> pick(0, k - 1);
        edges.emplace_back(order[pick(rng)], order[k]);
    }
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

/// Plain BFS distances, written out again so oracles do not share code with the library.
inline std::vector<int> distances(const Graph& g, Vertex s) {
    std::vector<int> d(g.order(), -1);
    std::vector<Vertex> queue{s};
    d[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
        for (Vertex w = 0; w < g.order(); ++w)
            if (g.adjacent(queue[h], w) && d[w] < 0) {
                d[w] = d[queue[h]] + 1;
                queue.push_back(w);
            }
    return d;
}

/// Walks from y to z whose steps change the distance to x by the given deltas (+1, 0, -1).
inline long count_walks(const Graph& g, const std::vector<int>& dx, const std::vector<int>& deltas, Vertex y,
                        Vertex z, std::size_t k = 0) {
    if (k == deltas.size()) return y == z ? 1 : 0;
    long total = 0;
    for (Vertex w = 0; w < g.order(); ++w)
        if (g.adjacent(y, w) && dx[w] - dx[y] == deltas[k]) total += count_walks(g, dx, deltas, w, z, k + 1);
    return total;
}

}  // namespace tk::testing
