/**
 * Simplicial complexes on at most 64 labeled vertices.
 *
 * A complex is stored by its facets (an antichain of vertex bitsets); a set
 * is a face iff it lies inside some facet. Vertex labels are kept in natural
 * order (see `natural_less`), so the index of a vertex depends only on the
 * label set and never on input order.
 */

#ifndef SRBETTI_SIMPLICIAL_HPP
#define SRBETTI_SIMPLICIAL_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "common.hpp"

namespace srbetti {

/**
 * Natural token order: all-digit tokens come first and compare numerically,
 * everything else compares as plain strings. "2" < "10" < "a".
 */
inline bool natural_less(const std::string& a, const std::string& b)
{
    auto numeric = [](const std::string& s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    bool na = numeric(a), nb = numeric(b);
    if (na != nb) return na;
    if (na) {
        auto strip = [](const std::string& s) {
            auto p = s.find_first_not_of('0');
            return p == std::string::npos ? std::string("0") : s.substr(p);
        };
        std::string sa = strip(a), sb = strip(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
    }
    return a < b;
}

/// Reduce a family of sets to its inclusion-maximal members, sorted ascending.
inline std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets)
{
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        int ca = cardinality(a), cb = cardinality(b);
        return ca != cb ? ca > cb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet k : kept) {
            if (is_subset(s, k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

class Complex
{
  public:
    /**
     * Build a complex from vertex labels and facet bitsets over those labels.
     * Dominated facets are dropped. Every vertex must lie in some facet.
     */
    static Complex from_masks(std::vector<std::string> labels, std::vector<VertexSet> facets)
    {
        const int n = static_cast<int>(labels.size());
        if (n > kMaxVertices) throw TooManyVertices(n, kMaxVertices);
        {
            std::vector<std::string> sorted = labels;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw InvalidComplex("duplicate vertex label");
        }
        if (facets.empty()) throw EmptyInput("complex needs at least one facet");
        VertexSet cover = 0;
        for (VertexSet f : facets) {
            if (!is_subset(f, full_set(n))) throw InvalidComplex("facet references a vertex out of range");
            cover |= f;
        }
        if (cover != full_set(n))
            throw InvalidComplex("vertex " + labels[std::countr_zero(~cover & full_set(n))]
                                 + " is not a face");
        Complex c;
        c.labels_ = std::move(labels);
        c.facets_ = maximal_sets(std::move(facets));
        return c;
    }

    /// The complex {∅} on no vertices.
    static Complex empty()
    {
        Complex c;
        c.facets_ = {0};
        return c;
    }

    int n() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<VertexSet>& facets() const { return facets_; }
    VertexSet vertex_set() const { return full_set(n()); }

    bool is_empty_complex() const { return labels_.empty(); }

    bool is_face(VertexSet s) const
    {
        for (VertexSet f : facets_)
            if (is_subset(s, f)) return true;
        return false;
    }

    /// Largest face cardinality minus one; -1 for {∅}.
    int dimension() const
    {
        int d = 0;
        for (VertexSet f : facets_) d = std::max(d, cardinality(f));
        return d - 1;
    }

    bool is_simplex() const { return facets_.size() == 1 && facets_[0] == vertex_set(); }

    friend bool operator==(const Complex&, const Complex&) = default;

  private:
    Complex() = default;

    std::vector<std::string> labels_;
    std::vector<VertexSet> facets_;
};

/**
 * Build a complex from facets given as token lists. The vertex set is the
 * union of the tokens in natural order.
 */
inline Complex complex_from_facets(const std::vector<std::vector<std::string>>& facets)
{
    if (facets.empty()) throw EmptyInput("facet list is empty");
    std::vector<std::string> labels;
    for (const auto& facet : facets) {
        for (const auto& token : facet) {
            if (token.empty()) throw InvalidArgument("empty vertex token");
            if (token.front() == '#') throw InvalidArgument("vertex token may not start with '#': " + token);
            if (std::any_of(token.begin(), token.end(), [](unsigned char ch) { return std::isspace(ch); }))
                throw InvalidArgument("vertex token contains whitespace: " + token);
            labels.push_back(token);
        }
    }
    if (labels.empty()) throw EmptyInput("facets contain no vertices");
    std::sort(labels.begin(), labels.end(), natural_less);
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (static_cast<int>(labels.size()) > kMaxVertices)
        throw TooManyVertices(static_cast<int>(labels.size()), kMaxVertices);

    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
    std::vector<VertexSet> masks;
    masks.reserve(facets.size());
    for (const auto& facet : facets) {
        VertexSet m = 0;
        for (const auto& token : facet) m |= VertexSet{1} << index.at(token);
        masks.push_back(m);
    }
    return Complex::from_masks(std::move(labels), std::move(masks));
}

/**
 * All faces of the complex generated by `facets`, bucketed by dimension:
 * result[k] holds the faces of cardinality k, sorted by bitset value.
 */
inline std::vector<std::vector<VertexSet>> faces_by_dimension(std::span<const VertexSet> facets)
{
    int top = 0;
    for (VertexSet f : facets) top = std::max(top, cardinality(f));
    std::vector<std::vector<VertexSet>> out(top + 1);
    std::unordered_set<VertexSet> seen;
    for (VertexSet f : facets) {
        // Walk all submasks of f, including f and 0.
        VertexSet s = f;
        while (true) {
            if (seen.insert(s).second) out[cardinality(s)].push_back(s);
            if (s == 0) break;
            s = (s - 1) & f;
        }
    }
    for (auto& bucket : out) std::sort(bucket.begin(), bucket.end());
    return out;
}

inline std::vector<std::vector<VertexSet>> faces_by_dimension(const Complex& c)
{
    return faces_by_dimension(std::span<const VertexSet>(c.facets()));
}

/// (f_{-1}, f_0, ..., f_{d-1}); entries[k] counts faces with k vertices.
struct FVector
{
    std::vector<std::int64_t> entries;

    /// Dimension plus one.
    int d() const { return static_cast<int>(entries.size()) - 1; }

    /// f_i for i >= -1; zero outside the stored range.
    std::int64_t at(int i) const
    {
        int k = i + 1;
        return (k < 0 || k >= static_cast<int>(entries.size())) ? 0 : entries[k];
    }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_d). Indices outside 0..d read as zero.
struct HVector
{
    std::vector<std::int64_t> entries;

    int d() const { return static_cast<int>(entries.size()) - 1; }

    std::int64_t operator[](std::int64_t i) const
    {
        return (i < 0 || i >= static_cast<std::int64_t>(entries.size())) ? 0 : entries[i];
    }

    friend bool operator==(const HVector&, const HVector&) = default;
};

inline FVector f_vector(const Complex& c)
{
    FVector f;
    for (const auto& bucket : faces_by_dimension(c))
        f.entries.push_back(static_cast<std::int64_t>(bucket.size()));
    return f;
}

/// h_j = sum_{i<=j} (-1)^{j-i} C(d-i, j-i) f_{i-1}.
inline HVector h_vector(const FVector& f)
{
    const int d = f.d();
    HVector h;
    h.entries.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i) {
            std::int64_t term = checked_mul(binomial(d - i, j - i), f.at(i - 1));
            acc = ((j - i) % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
        }
        h.entries[j] = acc;
    }
    return h;
}

/// Inverse transform: f_{j-1} = sum_{i<=j} C(d-i, j-i) h_i.
inline FVector f_from_h(const HVector& h)
{
    const int d = h.d();
    FVector f;
    f.entries.resize(d + 1);
    for (int j = 0; j <= d; ++j) {
        std::int64_t acc = 0;
        for (int i = 0; i <= j; ++i) acc = checked_add(acc, checked_mul(binomial(d - i, j - i), h[i]));
        f.entries[j] = acc;
    }
    return f;
}

/**
 * Restriction to the vertex subset `w`. Result vertices are the members of
 * `w` in their original order; restricting to the empty set gives {∅}.
 */
inline Complex induced_subcomplex(const Complex& c, VertexSet w)
{
    if (!is_subset(w, c.vertex_set())) throw InvalidArgument("vertex subset out of range");
    if (w == 0) return Complex::empty();
    const std::vector<int> keep = members(w);
    std::vector<std::string> labels;
    labels.reserve(keep.size());
    for (int v : keep) labels.push_back(c.labels()[v]);

    std::vector<VertexSet> restricted;
    for (VertexSet f : c.facets()) {
        VertexSet r = f & w, compact = 0;
        for (std::size_t k = 0; k < keep.size(); ++k)
            if (r >> keep[k] & 1) compact |= VertexSet{1} << k;
        restricted.push_back(compact);
    }
    return Complex::from_masks(std::move(labels), std::move(restricted));
}

/**
 * Inclusion-minimal non-faces, i.e. the minimal monomial generators of the
 * Stanley-Reisner ideal, sorted by (cardinality, lexicographic).
 *
 * Level-wise search: a candidate of size k+1 is a face of size k extended by
 * a larger vertex, and it is a minimal non-face iff it is not a face while
 * all of its k-subsets are.
 */
inline std::vector<VertexSet> minimal_non_faces(const Complex& c)
{
    const int n = c.n();
    auto faces = faces_by_dimension(c);
    std::unordered_set<VertexSet> face_set;
    for (const auto& bucket : faces) face_set.insert(bucket.begin(), bucket.end());

    std::vector<VertexSet> out;
    for (const auto& bucket : faces) {
        for (VertexSet f : bucket) {
            int start = f ? 64 - std::countl_zero(f) : 0;
            for (int v = start; v < n; ++v) {
                VertexSet cand = f | (VertexSet{1} << v);
                if (face_set.count(cand)) continue;
                bool minimal = true;
                for (VertexSet rest = cand; rest; rest &= rest - 1) {
                    VertexSet sub = cand & ~(rest & -rest);
                    if (!face_set.count(sub)) {
                        minimal = false;
                        break;
                    }
                }
                if (minimal) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end(), size_lex_less);
    return out;
}

/// Labels of a face joined by single spaces.
inline std::string format_face(const Complex& c, VertexSet face)
{
    std::string s;
    for (int v : members(face)) {
        if (!s.empty()) s += ' ';
        s += c.labels()[v];
    }
    return s;
}

// .cplx files: '#' starts a comment line; every other non-blank line is one
// facet given as whitespace-separated vertex tokens.

inline Complex read_complex(std::istream& in)
{
    std::vector<std::vector<std::string>> facets;
    std::string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream tokens(line);
        std::vector<std::string> facet;
        std::string token;
        while (tokens >> token) facet.push_back(token);
        if (facet.empty() || facet.front().front() == '#') continue;
        for (const auto& t : facet)
            if (t.front() == '#') throw ParseError(line_number, "stray '#' inside facet line");
        facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw ParseError(line_number, "no facets found");
    return complex_from_facets(facets);
}

inline Complex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_complex(in);
}

inline void write_complex(std::ostream& out, const Complex& c)
{
    out << "# " << c.n() << " vertices, " << c.facets().size() << " facets\n";
    for (VertexSet f : c.facets()) out << format_face(c, f) << '\n';
}

} // namespace srbetti

#endif // SRBETTI_SIMPLICIAL_HPP
