#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tk/graph.hpp"
#include "tk/regularity.hpp"

namespace tk {

/// The six-vertex, seven-edge example graph with labels "1".."6"; base vertex is label "1".
std::pair<Graph, Vertex> example_graph();

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();
Graph rook_3x3();  ///< K_3 □ K_3
Graph hypercube(int dim);

/// Vertex (u, s) has index u * |S| + s and label "(label_u,label_s)".
Graph cartesian_product(const Graph& g, const Graph& s);

/// Gamma □ Sigma plus an apex w joined to the fiber {(x, s) : s in Sigma}.
struct ApexResult {
    Graph graph;
    Vertex apex = 0;
    std::vector<std::optional<std::pair<Vertex, Vertex>>> origin;  ///< H-vertex -> (Gamma vertex, Sigma vertex)
};

/// Requires g connected, |Sigma| >= 2 and Sigma regular; throws GraphError otherwise.
ApexResult apex_extension(const Graph& g, Vertex x, const Graph& sigma);

enum class SigmaKind { Empty, Complete };

/// Scalars expected at the apex for Sigma empty or complete, levels 1..d+1.
ScalarSequences predicted_profile(const PdrProfile& pdr, SigmaKind kind);

/// Intersection numbers c_i, a_i, b_i constant over every sphere around x.
bool is_distance_regular_around(const Graph& g, Vertex x);

/// Named graphs: example, petersen, rook3x3, k2, p3, and families like c6, k4, s3, p5, star3, q3.
std::optional<Graph> builtin_graph(const std::string& name);

}  // namespace tk
