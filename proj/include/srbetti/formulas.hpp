/**
 * Closed forms for the Betti numbers of Stanley-Reisner rings with pure or
 * linear resolutions in terms of the h-vector, the linear relations the
 * h-vector satisfies in the linear case, and the binomial lower bound.
 *
 * Throughout, m = n - d is the codimension and the resolution is indexed
 * with R shown separately (see PureResolution): for a pure resolution with
 * degrees d_0 < ... < d_top,
 *
 *     beta_i = sum_{l=0}^{d_i} (-1)^{l+i+1} C(m, l) h_{d_i - l}.
 */

#ifndef SRBETTI_FORMULAS_HPP
#define SRBETTI_FORMULAS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "betti.hpp"
#include "common.hpp"
#include "graphs.hpp"
#include "simplicial.hpp"

namespace srbetti {

struct FormulaInput
{
    HVector h;
    int n = 0;
    int d = 0;
    ResolutionShape shape;
};

namespace detail {

/// sum_{l=0}^{degree} (-1)^l C(m, l) h_{degree - l}: the z^degree coefficient of (1 - z)^m h(z).
inline std::int64_t alternating_h_sum(const HVector& h, int m, int degree)
{
    std::int64_t acc = 0;
    for (int l = 0; l <= degree; ++l) {
        std::int64_t term = checked_mul(binomial(m, l), h[degree - l]);
        acc = (l % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
    }
    return acc;
}

inline std::vector<std::int64_t> betti_from_degrees(const HVector& h, int n, int d, std::span<const int> degrees)
{
    if (d < 1 || n < d) throw InvalidArgument("need n >= d >= 1");
    std::vector<std::int64_t> out;
    for (int i = 0; i < static_cast<int>(degrees.size()); ++i) {
        std::int64_t v = alternating_h_sum(h, n - d, degrees[i]);
        // The (-1)^{i+1} factor pulled out of the sum.
        if (i % 2 == 0) v = checked_sub(0, v);
        if (v <= 0) throw NonPositiveResult(i, v);
        out.push_back(v);
    }
    return out;
}

} // namespace detail

/// Betti numbers beta_0..beta_top of a pure resolution from h, n, d and the degree sequence.
inline std::vector<std::int64_t> betti_from_h(const FormulaInput& input)
{
    if (!input.shape.is_pure()) throw NotPure("betti_from_h needs a pure resolution shape");
    return detail::betti_from_degrees(input.h, input.n, input.d, input.shape.degrees);
}

/// Linear case d_i = t + i, i = 0..top.
inline std::vector<std::int64_t> betti_from_h_linear(const HVector& h, int t, int top, int n, int d)
{
    if (top < 0) throw InvalidArgument("top index must be nonnegative");
    if (d < 1 || n < d) throw InvalidArgument("need n >= d >= 1");
    std::vector<std::int64_t> out;
    for (int i = 0; i <= top; ++i) {
        // sum_{l=0}^{t+i} (-1)^{l+i+1} h_{t+i-l} C(n-d, l)
        std::int64_t acc = 0;
        for (int l = 0; l <= t + i; ++l) {
            std::int64_t term = checked_mul(h[t + i - l], binomial(n - d, l));
            acc = ((l + i + 1) % 2 == 0) ? checked_add(acc, term) : checked_sub(acc, term);
        }
        if (acc <= 0) throw NonPositiveResult(i, acc);
        out.push_back(acc);
    }
    return out;
}

struct Relation
{
    int j;
    std::int64_t residual;

    friend bool operator==(const Relation&, const Relation&) = default;
};

/**
 * Residuals sum_{l=0}^{j} (-1)^l h_{j-l} C(n-d, l) for top + t < j <= n.
 * All vanish when the ring has a t-linear resolution of top index `top`.
 */
inline std::vector<Relation> h_relations(const HVector& h, int n, int d, int top, int t)
{
    if (d < 0 || n < d) throw InvalidArgument("need n >= d >= 0");
    std::vector<Relation> out;
    for (int j = top + t + 1; j <= n; ++j) out.push_back({j, detail::alternating_h_sum(h, n - d, j)});
    return out;
}

struct ChordalRelations
{
    /// Set when the graph is complete: the ideal is zero and no relations apply.
    bool zero_ideal = false;
    int top = -1;
    std::vector<Relation> residuals;
};

/// Relations for the clique complex of a chordal graph, t = 2, top read off the Betti table.
inline ChordalRelations chordal_h_relations(const Graph& g, const FieldSpec& field, const BettiOptions& options = {})
{
    if (!is_chordal(g).chordal) throw NotChordal("graph is not chordal");
    Complex delta = clique_complex(g);
    ChordalRelations out;
    ResolutionShape shape = classify(graded_betti(delta, field, options));
    if (shape.kind == ResolutionKind::zero_ideal) {
        out.zero_ideal = true;
        return out;
    }
    FVector f = f_vector(delta);
    out.top = shape.top;
    out.residuals = h_relations(h_vector(f), delta.n(), f.d(), shape.top, 2);
    return out;
}

/// verdict_i = (betti_i >= C(top, i)).
inline std::vector<bool> check_lower_bound(std::span<const std::int64_t> betti, int top)
{
    if (static_cast<int>(betti.size()) != top + 1) throw InvalidArgument("expected top + 1 Betti numbers");
    std::vector<bool> out;
    for (int i = 0; i <= top; ++i) out.push_back(betti[i] >= binomial(top, i));
    return out;
}

} // namespace srbetti

#endif // SRBETTI_FORMULAS_HPP
