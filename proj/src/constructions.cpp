#include "tk/constructions.hpp"

#include <array>
#include <algorithm>
#include <charconv>

namespace tk {

namespace {

std::vector<std::string> numbered_labels(int n, int first) {
    std::vector<std::string> out;
    for (int v = 0; v < n; ++v) out.push_back(std::to_string(v + first));
    return out;
}

void require_order(int n, int min) {
    if (n < min) throw GraphError("graph order " + std::to_string(n) + " below minimum " + std::to_string(min));
}

}  // namespace

std::pair<Graph, Vertex> example_graph() {
    const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {2, 5}};
    return {Graph(6, edges, numbered_labels(6, 1)), 0};
}

Graph empty_graph(int n) {
    require_order(n, 1);
    return Graph(n, {});
}

Graph complete_graph(int n) {
    require_order(n, 1);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    require_order(n, 1);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require_order(n, 3);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph star_graph(int leaves) {
    require_order(leaves, 1);
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
    return Graph(leaves + 1, edges);
}

Graph petersen_graph() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph rook_3x3() { return cartesian_product(complete_graph(3), complete_graph(3)); }

Graph hypercube(int dim) {
    require_order(dim, 1);
    const int n = 1 << dim;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < dim; ++b)
            if (int u = v ^ (1 << b); v < u) edges.emplace_back(v, u);
    return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& s) {
    const int ns = s.order();
    auto id = [ns](Vertex u, Vertex t) { return u * ns + t; };
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex t = 0; t < ns; ++t) labels.push_back("(" + g.label(u) + "," + s.label(t) + ")");
    for (Vertex u = 0; u < g.order(); ++u)
        for (auto [a, b] : s.edges()) edges.emplace_back(id(u, a), id(u, b));
    for (auto [a, b] : g.edges())
        for (Vertex t = 0; t < ns; ++t) edges.emplace_back(id(a, t), id(b, t));
    return Graph(g.order() * ns, edges, std::move(labels));
}

ApexResult apex_extension(const Graph& g, Vertex x, const Graph& sigma) {
    if (!g.contains(x)) throw GraphError("base vertex out of range");
    if (!is_connected(g)) throw GraphError("apex construction needs a connected graph");
    if (sigma.order() < 2) throw GraphError("Sigma must have at least 2 vertices");
    if (!regular_degree(sigma)) throw GraphError("Sigma must be regular");

    Graph prod = cartesian_product(g, sigma);
    const int ns = sigma.order();
    const Vertex apex = prod.order();
    auto edges = prod.edges();
    for (Vertex t = 0; t < ns; ++t) edges.emplace_back(apex, x * ns + t);
    auto labels = prod.labels();
    labels.push_back("w");

    ApexResult res;
    res.graph = Graph(prod.order() + 1, edges, std::move(labels));
    res.apex = apex;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex t = 0; t < ns; ++t) res.origin.emplace_back(std::pair{u, t});
    res.origin.emplace_back(std::nullopt);

    auto dg = bfs_distances(g, x);
    auto dh = bfs_distances(res.graph, apex);
    for (Vertex v = 0; v < apex; ++v)
        if (dh[v] != dg[res.origin[v]->first] + 1) throw GraphError("apex distance invariant violated");
    return res;
}

ScalarSequences predicted_profile(const PdrProfile& pdr, SigmaKind kind) {
    if (!pdr.ok) throw GraphError("predicted_profile needs a thin trivial module");
    ScalarSequences s;
    const bool complete = kind == SigmaKind::Complete;
    for (std::size_t i = 1; i <= pdr.alpha.size(); ++i) {
        s.kappa.push_back(pdr.alpha[i - 1]);
        s.mu.push_back(0);
        s.theta.push_back(complete ? Rational(pdr.beta[i - 1] - 1) : pdr.beta[i - 1]);
        s.rho.push_back(complete ? 1 : 0);
    }
    return s;
}

bool is_distance_regular_around(const Graph& g, Vertex x) {
    auto dist = bfs_distances(g, x);
    const int d = *std::max_element(dist.begin(), dist.end());
    for (int i = 0; i <= d; ++i) {
        std::optional<std::array<int, 3>> seen;
        for (Vertex z = 0; z < g.order(); ++z) {
            if (dist[z] != i) continue;
            std::array<int, 3> cab{0, 0, 0};
            for (Vertex w : g.neighbors(z)) ++cab[dist[w] - i + 1];
            if (seen && *seen != cab) return false;
            seen = cab;
        }
    }
    return true;
}

namespace {

std::optional<int> suffix_int(const std::string& name, std::string_view prefix) {
    if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
    int v = 0;
    auto tail = std::string_view(name).substr(prefix.size());
    auto [p, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), v);
    if (ec != std::errc{} || p != tail.data() + tail.size()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<Graph> builtin_graph(const std::string& name) {
    if (name == "example") return example_graph().first;
    if (name == "petersen") return petersen_graph();
    if (name == "rook3x3" || name == "rook") return rook_3x3();
    if (auto k = suffix_int(name, "star")) return star_graph(*k);
    if (auto k = suffix_int(name, "k")) return complete_graph(*k);
    if (auto k = suffix_int(name, "c")) return cycle_graph(*k);
    if (auto k = suffix_int(name, "p")) return path_graph(*k);
    if (auto k = suffix_int(name, "s")) return empty_graph(*k);
    if (auto k = suffix_int(name, "q")) return hypercube(*k);
    return std::nullopt;
}

}  // namespace tk
