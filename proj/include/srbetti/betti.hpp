/**
 * Graded Betti numbers of Stanley-Reisner rings by Hochster's formula,
 *
 *     beta_{i,j}(k[Δ]) = sum over |W| = j of dim H~_{j-i-1}(Δ|_W; k),
 *
 * plus classification of the resulting resolution as pure, linear or
 * neither.
 *
 * Tables use standard indexing: position 0 is the free module R itself, so
 * beta_{0,0} = 1. `pure_resolution` re-indexes a pure table with R shown
 * separately and the remaining terms numbered from 0, which is the form the
 * h-vector formulas consume.
 */

#ifndef SRBETTI_BETTI_HPP
#define SRBETTI_BETTI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "common.hpp"
#include "exactla.hpp"
#include "homology.hpp"
#include "simplicial.hpp"

namespace srbetti {

struct BettiTable
{
    int n = 0;
    FieldSpec field = FieldSpec::prime(kDefaultPrime);
    /// (i, j) -> beta_{i,j}; only nonzero entries are stored.
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    /// Projective dimension of k[Δ].
    int pdim() const
    {
        int p = 0;
        for (const auto& [key, v] : entries) p = std::max(p, key.first);
        return p;
    }

    std::vector<std::int64_t> totals() const
    {
        std::vector<std::int64_t> out(pdim() + 1, 0);
        for (const auto& [key, v] : entries) out[key.first] += v;
        return out;
    }

    /// Nonzero internal degrees in homological position i, ascending.
    std::vector<int> degrees_at(int i) const
    {
        std::vector<int> out;
        for (const auto& [key, v] : entries)
            if (key.first == i) out.push_back(key.second);
        return out;
    }

    /// Same numbers, ignoring which field produced them.
    bool same_numbers(const BettiTable& other) const { return n == other.n && entries == other.entries; }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

struct BettiOptions
{
    int vertex_cap = 20;
    /// Worker threads for the subset sweep; 0 means hardware concurrency.
    unsigned threads = 1;
};

namespace detail {

/// True iff the complex generated by `facets` is a cone (all maximal faces share a vertex).
inline bool is_cone(const std::vector<VertexSet>& facets)
{
    VertexSet common = ~VertexSet{0};
    for (VertexSet f : facets) common &= f;
    return common != 0;
}

inline void accumulate_subset(const Complex& c, VertexSet w, const FieldSpec& field,
                              std::map<std::pair<int, int>, std::int64_t>& out)
{
    if (w == 0) {
        out[{0, 0}] += 1;
        return;
    }
    std::vector<VertexSet> restricted;
    restricted.reserve(c.facets().size());
    for (VertexSet f : c.facets()) restricted.push_back(f & w);
    restricted = maximal_sets(std::move(restricted));
    if (is_cone(restricted)) return;
    const int j = cardinality(w);
    ReducedBetti h = reduced_homology_from_faces(faces_by_dimension(std::span<const VertexSet>(restricted)), field);
    for (int k = 0; k < static_cast<int>(h.dims.size()); ++k) {
        if (h.dims[k] == 0) continue;
        const int dim = k - 1;
        out[{j - dim - 1, j}] += h.dims[k];
    }
}

} // namespace detail

/**
 * Hochster sweep over all 2^n vertex subsets. Subsets whose restriction is a
 * cone are skipped. With several threads the subset range is split into
 * contiguous blocks whose partial tables are summed, so the result never
 * depends on the thread count.
 */
inline BettiTable graded_betti(const Complex& c, const FieldSpec& field, const BettiOptions& options = {})
{
    const int n = c.n();
    if (n > options.vertex_cap || n > 63) throw TooManyVertices(n, std::min(options.vertex_cap, 63));
    BettiTable table;
    table.n = n;
    table.field = field;

    const std::uint64_t total = std::uint64_t{1} << n;
    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(workers);
    auto run = [&](unsigned worker) {
        const std::uint64_t begin = total * worker / workers, end = total * (worker + 1) / workers;
        for (std::uint64_t w = begin; w < end; ++w) detail::accumulate_subset(c, w, field, partial[worker]);
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(run, t);
    }
    for (const auto& part : partial)
        for (const auto& [key, v] : part) table.entries[key] += v;
    std::erase_if(table.entries, [](const auto& kv) { return kv.second == 0; });
    return table;
}

enum class ResolutionKind { zero_ideal, general, pure, linear };

inline std::string to_string(ResolutionKind k)
{
    switch (k) {
    case ResolutionKind::zero_ideal: return "zero_ideal";
    case ResolutionKind::general: return "general";
    case ResolutionKind::pure: return "pure";
    case ResolutionKind::linear: return "linear";
    }
    return "?";
}

/**
 * Shape of a resolution. For pure (and linear) shapes `degrees` holds
 * d_0 < ... < d_top where d_i is the single degree of homological position
 * i + 1, and top = pdim - 1. For linear shapes d_i = t + i.
 */
struct ResolutionShape
{
    ResolutionKind kind = ResolutionKind::general;
    std::vector<int> degrees;
    int t = 0;
    int top = -1;

    bool is_pure() const { return kind == ResolutionKind::pure || kind == ResolutionKind::linear; }
    bool is_linear() const { return kind == ResolutionKind::linear; }

    friend bool operator==(const ResolutionShape&, const ResolutionShape&) = default;
};

inline ResolutionShape classify(const BettiTable& table)
{
    ResolutionShape shape;
    const int pdim = table.pdim();
    if (pdim == 0) {
        shape.kind = ResolutionKind::zero_ideal;
        return shape;
    }
    shape.top = pdim - 1;
    std::vector<int> degrees;
    for (int i = 1; i <= pdim; ++i) {
        auto ds = table.degrees_at(i);
        if (ds.size() != 1) return shape;
        if (!degrees.empty() && ds[0] <= degrees.back()) return shape;
        degrees.push_back(ds[0]);
    }
    shape.degrees = degrees;
    shape.t = degrees.front();
    bool linear = true;
    for (std::size_t i = 0; i < degrees.size(); ++i)
        if (degrees[i] != degrees.front() + static_cast<int>(i)) linear = false;
    shape.kind = linear ? ResolutionKind::linear : ResolutionKind::pure;
    return shape;
}

/// A pure resolution with R shown separately: betti[i] = beta_{i+1, degrees[i]}.
struct PureResolution
{
    int top = 0;
    std::vector<int> degrees;
    std::vector<std::int64_t> betti;

    friend bool operator==(const PureResolution&, const PureResolution&) = default;
};

inline PureResolution pure_resolution(const BettiTable& table, const ResolutionShape& shape)
{
    if (!shape.is_pure()) throw NotPure("resolution is " + to_string(shape.kind) + ", not pure");
    PureResolution out;
    out.top = shape.top;
    out.degrees = shape.degrees;
    for (int i = 0; i <= shape.top; ++i) out.betti.push_back(table.at(i + 1, shape.degrees[i]));
    return out;
}

} // namespace srbetti

#endif // SRBETTI_BETTI_HPP
