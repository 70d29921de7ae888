/**
 * Simple graphs on at most 64 vertices: complements, chordality with a
 * perfect elimination ordering witness, maximal cliques and clique
 * complexes, and a seeded generator of random chordal graphs.
 */

#ifndef SRBETTI_GRAPHS_HPP
#define SRBETTI_GRAPHS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "simplicial.hpp"

namespace srbetti {

class Graph
{
  public:
    /// Edgeless graph with labels "1".."n".
    explicit Graph(int n = 0)
    {
        if (n < 0) throw InvalidArgument("negative vertex count");
        if (n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
        for (int i = 1; i <= n; ++i) labels_.push_back(std::to_string(i));
        adjacency_.assign(n, 0);
    }

    Graph(std::vector<std::string> labels, std::span<const std::pair<int, int>> edges)
    {
        const int n = static_cast<int>(labels.size());
        if (n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
        labels_ = std::move(labels);
        adjacency_.assign(n, 0);
        for (auto [u, v] : edges) add_edge(u, v);
    }

    int n() const { return static_cast<int>(adjacency_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    VertexSet neighbors(int v) const { return adjacency_.at(v); }
    bool has_edge(int u, int v) const { return adjacency_.at(u) >> v & 1; }

    void add_edge(int u, int v)
    {
        if (u < 0 || v < 0 || u >= n() || v >= n()) throw InvalidArgument("edge endpoint out of range");
        if (u == v) throw InvalidArgument("self-loop at vertex " + labels_[u]);
        adjacency_[u] |= VertexSet{1} << v;
        adjacency_[v] |= VertexSet{1} << u;
    }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const
    {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n(); ++u)
            for (int v : members(adjacency_[u] >> (u + 1)))
                out.emplace_back(u, u + 1 + v);
        return out;
    }

    bool is_clique(VertexSet s) const
    {
        for (int v : members(s))
            if (!is_subset(s & ~(VertexSet{1} << v), adjacency_[v])) return false;
        return true;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    std::vector<std::string> labels_;
    std::vector<VertexSet> adjacency_;
};

inline Graph complete_graph(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n)
{
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n)
{
    if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complement(const Graph& g)
{
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.labels(), edges);
}

/// True iff every vertex's neighbors later in `order` form a clique.
inline bool is_perfect_elimination_order(const Graph& g, std::span<const int> order)
{
    if (static_cast<int>(order.size()) != g.n()) return false;
    VertexSet later = g.n() ? full_set(g.n()) : 0;
    for (int v : order) {
        if (v < 0 || v >= g.n() || !(later >> v & 1)) return false;
        later &= ~(VertexSet{1} << v);
        if (!g.is_clique(g.neighbors(v) & later)) return false;
    }
    return true;
}

struct ChordalityResult
{
    bool chordal = false;
    std::optional<std::vector<int>> elimination_order;
};

/**
 * Maximum cardinality search, ties broken by smallest vertex index. The
 * reverse visiting order is a perfect elimination ordering exactly when the
 * graph is chordal, which is then checked directly.
 */
inline ChordalityResult is_chordal(const Graph& g)
{
    const int n = g.n();
    std::vector<int> weight(n, 0);
    std::vector<int> visit;
    visit.reserve(n);
    VertexSet unvisited = full_set(n);
    while (unvisited) {
        int best = -1;
        for (int v : members(unvisited))
            if (best < 0 || weight[v] > weight[best]) best = v;
        visit.push_back(best);
        unvisited &= ~(VertexSet{1} << best);
        for (int u : members(g.neighbors(best) & unvisited)) ++weight[u];
    }
    std::reverse(visit.begin(), visit.end());
    ChordalityResult r;
    if (is_perfect_elimination_order(g, visit)) {
        r.chordal = true;
        r.elimination_order = std::move(visit);
    }
    return r;
}

namespace detail {

inline void bron_kerbosch_pivot(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                                std::vector<VertexSet>& out)
{
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    // Pivot maximizing |P ∩ N(u)|.
    int pivot = -1, best = -1;
    for (int u : members(p | x)) {
        int c = cardinality(p & g.neighbors(u));
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (int v : members(p & ~g.neighbors(pivot))) {
        VertexSet bit = VertexSet{1} << v;
        bron_kerbosch_pivot(g, r | bit, p & g.neighbors(v), x & g.neighbors(v), out);
        p &= ~bit;
        x |= bit;
    }
}

/// Repeatedly remove a minimum-degree vertex (smallest index on ties).
inline std::vector<int> degeneracy_order(const Graph& g)
{
    std::vector<int> order;
    VertexSet remaining = full_set(g.n());
    while (remaining) {
        int best = -1, best_deg = 0;
        for (int v : members(remaining)) {
            int deg = cardinality(g.neighbors(v) & remaining);
            if (best < 0 || deg < best_deg) {
                best = v;
                best_deg = deg;
            }
        }
        order.push_back(best);
        remaining &= ~(VertexSet{1} << best);
    }
    return order;
}

} // namespace detail

/// Maximal cliques, Bron-Kerbosch with pivoting over a degeneracy ordering; sorted ascending.
inline std::vector<VertexSet> maximal_cliques(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet earlier = 0;
    for (int v : detail::degeneracy_order(g)) {
        VertexSet bit = VertexSet{1} << v;
        VertexSet later = full_set(g.n()) & ~earlier & ~bit;
        detail::bron_kerbosch_pivot(g, bit, g.neighbors(v) & later, g.neighbors(v) & earlier, out);
        earlier |= bit;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Flag complex whose faces are the cliques of g.
inline Complex clique_complex(const Graph& g)
{
    if (g.n() == 0) return Complex::empty();
    return Complex::from_masks(g.labels(), maximal_cliques(g));
}

/**
 * xorshift64* (Vigna): state ^= state >> 12; state ^= state << 25;
 * state ^= state >> 27; output state * 0x2545F4914F6CDD1D. The state is
 * seeded with one splitmix64 step of the user seed (increment
 * 0x9E3779B97F4A7C15, mixers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB,
 * shifts 30/27/31), replaced by the increment itself if that yields 0.
 */
class Xorshift64Star
{
  public:
    explicit Xorshift64Star(std::uint64_t seed)
    {
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        z ^= z >> 31;
        state_ = z ? z : 0x9E3779B97F4A7C15ULL;
    }

    std::uint64_t next()
    {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545F4914F6CDD1DULL;
    }

    /// next() mod bound; bound > 0.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Top 53 bits scaled into [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/**
 * Random chordal graph with labels "1".."n". Vertices are placed in index
 * order. The generator keeps the list of maximal cliques (in creation
 * order). Vertex v >= 1 picks a clique C = cliques[below(#cliques)], a size
 * k = max(1, lround(density * |C|)), and k members of C by a partial
 * Fisher-Yates shuffle of C's sorted members (position i swaps with
 * i + below(|C| - i)). v becomes adjacent to exactly those k vertices; if
 * k = |C| the clique C grows by v, otherwise the new clique is appended.
 * Each vertex is simplicial when added, so the result is chordal.
 */
inline Graph gen_chordal(int n, double density, std::uint64_t seed)
{
    if (n < 1) throw InvalidArgument("gen_chordal needs n >= 1");
    if (!(density >= 0.0 && density <= 1.0)) throw InvalidArgument("density must lie in [0, 1]");
    Graph g(n);
    Xorshift64Star rng(seed);
    std::vector<VertexSet> cliques{VertexSet{1}};
    for (int v = 1; v < n; ++v) {
        std::size_t ci = rng.below(cliques.size());
        std::vector<int> pool = members(cliques[ci]);
        const long size = static_cast<long>(pool.size());
        const long k = std::max(1L, std::lround(density * static_cast<double>(size)));
        VertexSet chosen = 0;
        for (long i = 0; i < k; ++i) {
            long j = i + static_cast<long>(rng.below(static_cast<std::uint64_t>(size - i)));
            std::swap(pool[i], pool[j]);
            chosen |= VertexSet{1} << pool[i];
        }
        for (int u : members(chosen)) g.add_edge(u, v);
        VertexSet bit = VertexSet{1} << v;
        if (k == size)
            cliques[ci] |= bit;
        else
            cliques.push_back(chosen | bit);
    }
    return g;
}

// .graph files: '#' comment lines; optional "vertices a b c ..." lines; all
// other non-blank lines are "u v" edges.

inline Graph read_graph(std::istream& in)
{
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream ts(line);
        std::vector<std::string> tokens;
        std::string t;
        while (ts >> t) tokens.push_back(t);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.front() == "vertices") {
            labels.insert(labels.end(), tokens.begin() + 1, tokens.end());
            continue;
        }
        if (tokens.size() != 2) throw ParseError(line_number, "expected \"u v\", got: " + line);
        if (tokens[0] == tokens[1]) throw ParseError(line_number, "self-loop at " + tokens[0]);
        labels.push_back(tokens[0]);
        labels.push_back(tokens[1]);
        raw_edges.emplace_back(tokens[0], tokens[1]);
    }
    for (const auto& l : labels)
        if (l.front() == '#') throw ParseError(line_number, "vertex token may not start with '#'");
    std::sort(labels.begin(), labels.end(), natural_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (labels.empty()) throw ParseError(line_number, "graph has no vertices");
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw TooManyVertices(static_cast<int>(labels.size()), kMaxVertices);
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : raw_edges) edges.emplace_back(index.at(a), index.at(b));
    return Graph(std::move(labels), edges);
}

inline Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_graph(in);
}

inline void write_graph(std::ostream& out, const Graph& g)
{
    out << "vertices";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
    for (auto [u, v] : g.edges()) out << g.labels()[u] << ' ' << g.labels()[v] << '\n';
}

} // namespace srbetti

#endif // SRBETTI_GRAPHS_HPP
