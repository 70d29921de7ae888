/**
 * Reduced simplicial homology over a field through ranks of the augmented
 * boundary matrices.
 */

#ifndef SRBETTI_HOMOLOGY_HPP
#define SRBETTI_HOMOLOGY_HPP

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "common.hpp"
#include "exactla.hpp"
#include "simplicial.hpp"

namespace srbetti {

/// dims[k] holds the reduced Betti number in dimension k - 1.
struct ReducedBetti
{
    std::vector<std::int64_t> dims;

    /// Reduced Betti number in dimension i >= -1; zero outside the stored range.
    std::int64_t at(int i) const
    {
        int k = i + 1;
        return (k < 0 || k >= static_cast<int>(dims.size())) ? 0 : dims[k];
    }

    bool acyclic() const
    {
        return std::all_of(dims.begin(), dims.end(), [](std::int64_t v) { return v == 0; });
    }

    friend bool operator==(const ReducedBetti&, const ReducedBetti&) = default;
};

/**
 * Boundary map from faces in `upper` (columns) to faces in `lower` (rows).
 * Both lists are sorted by bitset value. For a face with members
 * v_0 < ... < v_k, removing v_m carries sign (-1)^m.
 */
inline SparseMatrix boundary_between(std::span<const VertexSet> lower, std::span<const VertexSet> upper)
{
    std::vector<MatrixEntry> entries;
    for (int col = 0; col < static_cast<int>(upper.size()); ++col) {
        VertexSet face = upper[col];
        int position = 0;
        for (VertexSet rest = face; rest; rest &= rest - 1, ++position) {
            VertexSet sub = face & ~(rest & -rest);
            auto it = std::lower_bound(lower.begin(), lower.end(), sub);
            if (it == lower.end() || *it != sub) throw InvalidComplex("face list is not closed under subsets");
            entries.push_back({static_cast<int>(it - lower.begin()), col, position % 2 == 0 ? 1 : -1});
        }
    }
    return SparseMatrix(static_cast<int>(lower.size()), static_cast<int>(upper.size()), std::move(entries));
}

/**
 * ∂_i of the augmented chain complex: rows are (i-1)-faces, columns are
 * i-faces, both ordered by bitset value. ∂_0 sends every vertex to the
 * empty face with coefficient +1; ∂_{-1} is the 0 x 1 map out of the empty face.
 */
inline SparseMatrix boundary_matrix(const Complex& c, int i)
{
    if (i < -1 || i > c.dimension())
        throw DimensionOutOfRange("boundary dimension " + std::to_string(i) + " outside [-1, "
                                  + std::to_string(c.dimension()) + "]");
    auto faces = faces_by_dimension(c);
    if (i == -1) return SparseMatrix(0, 1);
    return boundary_between(faces[i], faces[i + 1]);
}

/// b~_i = f_i - rank ∂_i - rank ∂_{i+1}, from faces bucketed by cardinality.
inline ReducedBetti reduced_homology_from_faces(const std::vector<std::vector<VertexSet>>& faces,
                                                const FieldSpec& field)
{
    const int buckets = static_cast<int>(faces.size());
    // ranks[k] = rank of the map from cardinality-k faces to cardinality-(k-1) faces.
    std::vector<std::int64_t> ranks(buckets + 1, 0);
    for (int k = 1; k < buckets; ++k)
        ranks[k] = static_cast<std::int64_t>(rank(boundary_between(faces[k - 1], faces[k]), field));
    ReducedBetti out;
    out.dims.resize(buckets);
    for (int k = 0; k < buckets; ++k)
        out.dims[k] = static_cast<std::int64_t>(faces[k].size()) - ranks[k] - ranks[k + 1];
    return out;
}

inline ReducedBetti reduced_homology_dims(const Complex& c, const FieldSpec& field)
{
    return reduced_homology_from_faces(faces_by_dimension(c), field);
}

/// ∂_i ∘ ∂_{i+1} = 0 over the integers for every i.
inline bool boundary_squares_to_zero(const Complex& c)
{
    auto faces = faces_by_dimension(c);
    for (std::size_t k = 1; k + 1 < faces.size(); ++k) {
        SparseMatrix lower = boundary_between(faces[k - 1], faces[k]);
        SparseMatrix upper = boundary_between(faces[k], faces[k + 1]);
        // Columns of `upper` map to combinations of cardinality-k faces; push each through `lower`.
        std::vector<std::vector<std::pair<int, std::int64_t>>> lower_cols(lower.cols());
        for (const auto& e : lower.entries()) lower_cols[e.col].emplace_back(e.row, e.value);
        std::vector<std::vector<std::pair<int, std::int64_t>>> upper_cols(upper.cols());
        for (const auto& e : upper.entries()) upper_cols[e.col].emplace_back(e.row, e.value);
        std::vector<std::int64_t> acc(lower.rows());
        for (const auto& col : upper_cols) {
            std::fill(acc.begin(), acc.end(), 0);
            for (auto [mid, a] : col)
                for (auto [row, b] : lower_cols[mid]) acc[row] += a * b;
            if (std::any_of(acc.begin(), acc.end(), [](std::int64_t v) { return v != 0; })) return false;
        }
    }
    return true;
}

} // namespace srbetti

#endif // SRBETTI_HOMOLOGY_HPP
