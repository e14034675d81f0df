#include "furl/stream.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "furl/rng.hpp"

namespace furl {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && is_space(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_space(line[i])) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

std::optional<Edge> parse_edge_line(std::string_view line, NodeInterner& interner,
                                    std::size_t line_number) {
    auto tokens = split_tokens(line);
    if (tokens.empty()) return std::nullopt;
    if (tokens.front().front() == '#') return std::nullopt;
    if (tokens.size() < 2) {
        throw ParseError("line " + std::to_string(line_number) +
                         ": expected 'u v [t]', got " + std::string(line));
    }
    NodeId u = interner.intern(tokens[0]);
    NodeId v = interner.intern(tokens[1]);
    return make_edge(u, v);
}

EdgeList read_edge_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    EdgeList out;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (auto e = parse_edge_line(line, out.interner, line_number)) {
            out.edges.push_back(*e);
        }
    }
    return out;
}

std::vector<Edge> preprocess_simple(const std::vector<Edge>& events) {
    std::vector<Edge> out;
    std::unordered_set<Edge> seen;
    for (Edge e : events) {
        if (is_self_loop(e)) continue;
        if (seen.insert(e).second) out.push_back(e);
    }
    return out;
}

std::vector<Edge> preprocess_multi(const std::vector<Edge>& events) {
    std::vector<Edge> out;
    out.reserve(events.size());
    for (Edge e : events) {
        if (!is_self_loop(e)) out.push_back(e);
    }
    return out;
}

std::vector<Edge> shuffle_stream(std::vector<Edge> events, std::uint64_t seed) {
    Rng rng(seed);
    for (std::size_t i = events.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, i - 1));
        std::swap(events[i - 1], events[j]);
    }
    return events;
}

std::size_t distinct_edge_count(const std::vector<Edge>& events) {
    std::unordered_set<Edge> seen(events.begin(), events.end());
    return seen.size();
}

StreamStats stream_stats(const std::vector<Edge>& events) {
    StreamStats s;
    s.events = events.size();
    s.distinct = distinct_edge_count(events);
    std::unordered_set<NodeId> nodes;
    for (Edge e : events) {
        nodes.insert(e.a);
        nodes.insert(e.b);
    }
    s.nodes = nodes.size();
    return s;
}

std::vector<std::size_t> stream_degrees(const std::vector<Edge>& events,
                                        std::size_t n_nodes) {
    std::vector<std::unordered_set<NodeId>> neighbors(n_nodes);
    for (Edge e : events) {
        if (is_self_loop(e)) continue;
        neighbors[e.a].insert(e.b);
        neighbors[e.b].insert(e.a);
    }
    std::vector<std::size_t> degrees(n_nodes);
    for (std::size_t u = 0; u < n_nodes; ++u) degrees[u] = neighbors[u].size();
    return degrees;
}

std::size_t node_count(const std::vector<Edge>& events) {
    std::size_t n = 0;
    for (Edge e : events) {
        n = std::max<std::size_t>(n, std::max(e.a, e.b) + 1);
    }
    return n;
}

}  // namespace furl
