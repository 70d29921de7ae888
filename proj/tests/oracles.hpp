// Brute-force reference computations used only by the tests. None of these
// call into the algorithm under test; they enumerate or expand directly.

#ifndef SRBETTI_TESTS_ORACLES_HPP
#define SRBETTI_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "srbetti/graphs.hpp"
#include "srbetti/simplicial.hpp"

namespace oracle {

using srbetti::VertexSet;
using Poly = std::vector<long long>;

inline Poly poly_mul(const Poly& a, const Poly& b)
{
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly poly_pow(const Poly& a, int k)
{
    Poly r{1};
    for (int i = 0; i < k; ++i) r = poly_mul(r, a);
    return r;
}

/// h from f by expanding sum_i f_{i-1} t^i (1-t)^{d-i} with repeated multiplication.
inline std::vector<long long> h_by_expansion(const std::vector<long long>& f)
{
    const int d = static_cast<int>(f.size()) - 1;
    Poly total(d + 1, 0);
    for (int i = 0; i <= d; ++i) {
        Poly term(i + 1, 0);
        term[i] = f[i];
        term = poly_mul(term, poly_pow({1, -1}, d - i));
        for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
    }
    return total;
}

inline bool is_face(const std::vector<VertexSet>& facets, VertexSet s)
{
    for (VertexSet f : facets)
        if ((s & ~f) == 0) return true;
    return false;
}

/// Minimal non-faces by scanning all 2^n subsets.
inline std::vector<VertexSet> minimal_non_faces(const srbetti::Complex& c)
{
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s < (VertexSet{1} << c.n()); ++s) {
        if (is_face(c.facets(), s)) continue;
        bool minimal = true;
        for (int v = 0; v < c.n(); ++v)
            if ((s >> v & 1) && !is_face(c.facets(), s & ~(VertexSet{1} << v))) minimal = false;
        if (minimal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), srbetti::size_lex_less);
    return out;
}

/// Facets of the complex on n vertices whose minimal non-faces are `non_faces`.
inline std::vector<VertexSet> facets_avoiding(int n, const std::vector<VertexSet>& non_faces)
{
    std::vector<VertexSet> faces;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        bool ok = true;
        for (VertexSet nf : non_faces)
            if ((nf & ~s) == 0) ok = false;
        if (ok) faces.push_back(s);
    }
    std::vector<VertexSet> facets;
    for (VertexSet s : faces) {
        bool maximal = true;
        for (VertexSet t : faces)
            if (t != s && (s & ~t) == 0) maximal = false;
        if (maximal) facets.push_back(s);
    }
    return facets;
}

inline srbetti::Complex complex_avoiding(int n, const std::vector<VertexSet>& non_faces)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return srbetti::Complex::from_masks(labels, facets_avoiding(n, non_faces));
}

/// Does g contain an induced cycle of length >= 4? Scans every vertex subset.
inline bool has_chordless_cycle(const srbetti::Graph& g)
{
    const int n = g.n();
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        if (srbetti::cardinality(s) < 4) continue;
        bool two_regular = true;
        for (int v = 0; v < n && two_regular; ++v)
            if ((s >> v & 1) && srbetti::cardinality(g.neighbors(v) & s) != 2) two_regular = false;
        if (!two_regular) continue;
        // Connected check by flood fill.
        VertexSet seen = s & -s, frontier = seen;
        while (frontier) {
            VertexSet next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= g.neighbors(v) & s;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == s) return true;
    }
    return false;
}

/// Maximal cliques by scanning all subsets.
inline std::vector<VertexSet> maximal_cliques(const srbetti::Graph& g)
{
    std::vector<VertexSet> cliques;
    for (VertexSet s = 1; s < (VertexSet{1} << g.n()); ++s) {
        bool clique = true;
        for (int u = 0; u < g.n() && clique; ++u)
            for (int v = u + 1; v < g.n() && clique; ++v)
                if ((s >> u & 1) && (s >> v & 1) && !g.has_edge(u, v)) clique = false;
        if (clique) cliques.push_back(s);
    }
    std::vector<VertexSet> out;
    for (VertexSet s : cliques) {
        bool maximal = true;
        for (VertexSet t : cliques)
            if (t != s && (s & ~t) == 0) maximal = false;
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/**
 * Koszul complex Betti numbers of a complete intersection whose generators
 * have degrees `degs`: beta_{i,j} = #{i-subsets with degree sum j}.
 */
inline std::map<std::pair<int, int>, long long> koszul_betti(const std::vector<int>& degs)
{
    std::map<std::pair<int, int>, long long> out;
    const int r = static_cast<int>(degs.size());
    for (int mask = 0; mask < (1 << r); ++mask) {
        int i = 0, j = 0;
        for (int k = 0; k < r; ++k)
            if (mask >> k & 1) {
                ++i;
                j += degs[k];
            }
        out[{i, j}] += 1;
    }
    return out;
}

/// Number of degree-s monomials in n variables whose support is a face.
inline long long count_face_monomials(const srbetti::Complex& c, int s)
{
    const int n = c.n();
    long long count = 0;
    std::vector<int> exps(n, 0);
    // Enumerate compositions of s into n parts.
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == n - 1) {
            exps[pos] = left;
            VertexSet support = 0;
            for (int v = 0; v < n; ++v)
                if (exps[v] > 0) support |= VertexSet{1} << v;
            if (is_face(c.facets(), support)) ++count;
            return;
        }
        for (int e = 0; e <= left; ++e) {
            exps[pos] = e;
            self(self, pos + 1, left - e);
        }
    };
    if (n == 0) return s == 0 ? 1 : 0;
    rec(rec, 0, s);
    return count;
}

/// Dense Gaussian elimination over exact rationals.
inline int dense_rank(std::vector<std::vector<long long>> m)
{
    using Q = boost::multiprecision::cpp_rational;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<std::vector<Q>> a(rows, std::vector<Q>(cols));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) a[r][c] = m[r][c];
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        for (int r = rank + 1; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            Q factor = a[r][c] / a[rank][c];
            for (int k = c; k < cols; ++k) a[r][k] -= factor * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

/// Random facet family on n vertices that covers every vertex.
template <class Rng>
std::vector<VertexSet> random_facets(int n, int count, Rng& rng)
{
    std::vector<VertexSet> facets;
    for (int k = 0; k < count; ++k) {
        VertexSet f = 0;
        for (int v = 0; v < n; ++v)
            if (rng.below(3) == 0) f |= VertexSet{1} << v;
        facets.push_back(f);
    }
    for (int v = 0; v < n; ++v) facets.push_back(VertexSet{1} << v);
    return facets;
}

inline std::vector<std::string> numeric_labels(int n)
{
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return labels;
}

} // namespace oracle

#endif // SRBETTI_TESTS_ORACLES_HPP
