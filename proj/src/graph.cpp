#include "tk/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>

namespace tk {

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0), nbrs_(n) {
    if (n < 0) throw GraphError("negative vertex count");
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(std::to_string(v));
    }
    if (static_cast<int>(labels.size()) != n) throw GraphError("label count does not match vertex count");
    labels_ = std::move(labels);

    for (auto [u, v] : edges) {
        if (!contains(u) || !contains(v)) throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("loop at vertex " + labels_[u]);
        if (adj_[index(u, v)]) continue;
        adj_[index(u, v)] = adj_[index(v, u)] = 1;
        nbrs_[u].push_back(v);
        nbrs_[v].push_back(u);
        ++edge_count_;
    }
    for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::optional<Vertex> Graph::find(std::string_view label) const {
    for (int v = 0; v < n_; ++v)
        if (labels_[v] == label) return v;
    return std::nullopt;
}

Vertex Graph::vertex(std::string_view token) const {
    if (auto v = find(token)) return *v;
    int idx = -1;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), idx);
    if (ec == std::errc{} && ptr == token.data() + token.size() && contains(idx)) return idx;
    throw GraphError("unknown vertex '" + std::string(token) + "'");
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (Vertex v : nbrs_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
    if (!g.contains(source)) throw GraphError("vertex out of range");
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] >= 0) continue;
            dist[v] = dist[u] + 1;
            queue.push_back(v);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_tree(const Graph& g) {
    return is_connected(g) && g.size() + 1 == static_cast<std::size_t>(g.order());
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (int s = 0; s < g.order(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            for (Vertex v : g.neighbors(u)) {
                if (side[v] < 0) {
                    side[v] = 1 - side[u];
                    queue.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> labels;
    std::map<std::string, Vertex, std::less<>> ids;
    std::vector<Edge> edges;
    auto intern = [&](std::string_view tok) {
        auto it = ids.find(tok);
        if (it != ids.end()) return it->second;
        Vertex v = static_cast<Vertex>(labels.size());
        labels.emplace_back(tok);
        ids.emplace(std::string(tok), v);
        return v;
    };

    auto lines = split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
        auto line = lines[ln];
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        auto toks = split_tokens(line);
        if (toks.size() != 2)
            throw GraphError("line " + std::to_string(ln + 1) + ": expected two vertex tokens");
        if (toks[0] == toks[1])
            throw GraphError("line " + std::to_string(ln + 1) + ": loop at vertex " + std::string(toks[0]));
        Vertex u = intern(toks[0]);
        Vertex v = intern(toks[1]);
        edges.emplace_back(u, v);
    }
    const int n = static_cast<int>(labels.size());
    return Graph(n, edges, std::move(labels));
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += g.label(u);
        out += ' ';
        out += g.label(v);
        out += '\n';
    }
    return out;
}

Graph parse_graph6(std::string_view bytes) {
    bytes = trim(bytes);
    if (bytes.starts_with(">>graph6<<")) bytes.remove_prefix(10);
    if (bytes.empty()) throw GraphError("graph6: empty input at byte 0");
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        auto c = static_cast<unsigned char>(bytes[i]);
        if (c < 63 || c > 126) throw GraphError("graph6: invalid byte at offset " + std::to_string(i));
    }

    std::size_t pos = 0;
    std::uint64_t n = 0;
    auto six = [&](std::size_t i) { return static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[i]) - 63); };
    if (static_cast<unsigned char>(bytes[0]) != 126) {
        n = six(0);
        pos = 1;
    } else if (bytes.size() >= 2 && static_cast<unsigned char>(bytes[1]) != 126) {
        if (bytes.size() < 4) throw GraphError("graph6: truncated size field at byte " + std::to_string(bytes.size()));
        n = (six(1) << 12) | (six(2) << 6) | six(3);
        pos = 4;
    } else {
        if (bytes.size() < 8) throw GraphError("graph6: truncated size field at byte " + std::to_string(bytes.size()));
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | six(i);
        pos = 8;
    }
    if (n > 100000) throw GraphError("graph6: vertex count too large");

    const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::uint64_t need = (bits + 5) / 6;
    if (bytes.size() - pos != need)
        throw GraphError("graph6: expected " + std::to_string(need) + " data bytes after offset " +
                         std::to_string(pos) + ", found " + std::to_string(bytes.size() - pos));

    std::vector<Edge> edges;
    std::uint64_t k = 0;
    for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
        for (Vertex u = 0; u < v; ++u, ++k) {
            auto byte = six(pos + k / 6);
            if ((byte >> (5 - k % 6)) & 1u) edges.emplace_back(u, v);
        }
    }
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        auto last = six(bytes.size() - 1);
        if (last & ((1u << (6 - bits % 6)) - 1u))
            throw GraphError("graph6: nonzero padding at byte " + std::to_string(bytes.size() - 1));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    const auto n = static_cast<std::uint64_t>(g.order());
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= 258047) {
        out.push_back(126);
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(63 + ((n >> s) & 63)));
    }
    unsigned acc = 0;
    int filled = 0;
    for (Vertex v = 1; v < g.order(); ++v) {
        for (Vertex u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

bool looks_like_graph6(std::string_view text) {
    bool any = false;
    for (auto line : split_lines(text)) {
        line = trim(line);
        if (line.empty()) continue;
        if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
        for (char c : line) {
            auto u = static_cast<unsigned char>(c);
            if (u < 63 || u > 126) return false;
        }
        any = true;
    }
    return any;
}

}  // namespace tk
