/**
 * Exact Hilbert series, Hilbert polynomials and multiplicities of
 * Stanley-Reisner rings, and the polynomial identity tying a pure
 * resolution to the h-vector.
 */

#ifndef SRBETTI_HILBERT_HPP
#define SRBETTI_HILBERT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "betti.hpp"
#include "common.hpp"
#include "simplicial.hpp"

namespace srbetti {

/// Integer polynomial in z; coefficients from degree 0, trailing zeros trimmed.
class IntPolynomial
{
  public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

    static IntPolynomial monomial(std::int64_t coefficient, int degree)
    {
        std::vector<std::int64_t> c(degree + 1, 0);
        c[degree] = coefficient;
        return IntPolynomial(std::move(c));
    }

    /// (1 - z)^k.
    static IntPolynomial one_minus_z_pow(int k)
    {
        std::vector<std::int64_t> c(k + 1);
        for (int j = 0; j <= k; ++j) c[j] = (j % 2 == 0) ? binomial(k, j) : -binomial(k, j);
        return IntPolynomial(std::move(c));
    }

    const std::vector<std::int64_t>& coefficients() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 stands for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    std::int64_t operator[](std::int64_t k) const
    {
        return (k < 0 || k >= static_cast<std::int64_t>(c_.size())) ? 0 : c_[k];
    }

    std::int64_t evaluate(std::int64_t z) const
    {
        std::int64_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, z), *it);
        return acc;
    }

    /// Exact division by (1 - z); throws if (1 - z) does not divide.
    IntPolynomial divide_by_one_minus_z() const
    {
        if (is_zero()) return {};
        // If p = (1 - z) q then the partial sums of p's coefficients are q's.
        std::vector<std::int64_t> q(c_.size() - 1);
        std::int64_t acc = 0;
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
            acc = checked_add(acc, c_[k]);
            q[k] = acc;
        }
        if (checked_add(acc, c_.back()) != 0) throw InvalidArgument("polynomial is not divisible by (1 - z)");
        return IntPolynomial(std::move(q));
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_add(a[k], b[k]);
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] = checked_sub(a[k], b[k]);
        return IntPolynomial(std::move(r));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
        return IntPolynomial(std::move(r));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// "1 - 2z^2 + z^4"; "0" for the zero polynomial.
    std::string to_string() const
    {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            std::int64_t v = c_[k];
            if (v == 0) continue;
            std::uint64_t mag = v < 0 ? 0 - static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
            if (s.empty())
                s += v < 0 ? "-" : "";
            else
                s += v < 0 ? " - " : " + ";
            if (mag != 1 || k == 0) s += std::to_string(mag);
            if (k >= 1) s += "z";
            if (k >= 2) s += "^" + std::to_string(k);
        }
        return s;
    }

  private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<std::int64_t> c_;
};

/// numerator / (1 - z)^pole_order, with numerator(1) != 0 unless the series is zero.
struct HilbertSeries
{
    IntPolynomial numerator;
    int pole_order = 0;

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

/**
 * Sum of f_{i-1} z^i / (1 - z)^i over i = 0..d, brought over the common
 * denominator (1 - z)^d and reduced in (1 - z).
 */
inline HilbertSeries series_from_f(const FVector& f)
{
    const int d = f.d();
    IntPolynomial numerator;
    for (int i = 0; i <= d; ++i)
        numerator = numerator + IntPolynomial::monomial(f.at(i - 1), i) * IntPolynomial::one_minus_z_pow(d - i);
    HilbertSeries s{numerator, d};
    while (s.pole_order > 0 && !s.numerator.is_zero() && s.numerator.evaluate(1) == 0) {
        s.numerator = s.numerator.divide_by_one_minus_z();
        --s.pole_order;
    }
    return s;
}

/// Sum of the h-vector, which is the multiplicity e(k[Δ]).
inline std::int64_t multiplicity(const HVector& h)
{
    std::int64_t acc = 0;
    for (std::int64_t v : h.entries) acc = checked_add(acc, v);
    return acc;
}

/**
 * Hilbert polynomial in the binomial basis:
 * P(s) = m_0 C(s, d-1) + m_1 C(s, d-2) + ... + m_{d-1}.
 */
struct HilbertPolynomial
{
    std::vector<std::int64_t> binom_coeffs;

    std::int64_t evaluate(std::int64_t s) const
    {
        const int d = static_cast<int>(binom_coeffs.size());
        std::int64_t acc = 0;
        for (int k = 0; k < d; ++k) acc = checked_add(acc, checked_mul(binom_coeffs[k], binomial(s, d - 1 - k)));
        return acc;
    }
};

/**
 * Expands sum h_i z^i / (1 - z)^d into the binomial basis. The coefficient
 * of z^s is sum_i h_i C(s - i + d - 1, d - 1), and Vandermonde's identity
 * splits C(s + a, d - 1) = sum_k C(a, k) C(s, d - 1 - k) with a = d - 1 - i
 * (a may be negative), giving m_k = sum_i h_i C(d - 1 - i, k).
 * For d = 0 the polynomial is zero and the result is empty.
 */
inline HilbertPolynomial hilbert_polynomial(const HVector& h, int d)
{
    HilbertPolynomial out;
    if (d <= 0) return out;
    out.binom_coeffs.resize(d);
    for (int k = 0; k < d; ++k) {
        std::int64_t acc = 0;
        for (int i = 0; i < static_cast<int>(h.entries.size()); ++i)
            acc = checked_add(acc, checked_mul(h[i], binomial(d - 1 - i, k)));
        out.binom_coeffs[k] = acc;
    }
    return out;
}

/// 1 + sum_i (-1)^{i+1} betti_i z^{degrees_i}.
inline IntPolynomial numerator_from_resolution(std::span<const int> degrees, std::span<const std::int64_t> betti)
{
    if (degrees.size() != betti.size()) throw InvalidArgument("degree and Betti sequences differ in length");
    IntPolynomial p = IntPolynomial::monomial(1, 0);
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i > 0 && degrees[i] <= degrees[i - 1]) throw InvalidArgument("degrees must increase strictly");
        if (degrees[i] < 0) throw InvalidArgument("negative degree");
        p = p + IntPolynomial::monomial(i % 2 == 0 ? -betti[i] : betti[i], degrees[i]);
    }
    return p;
}

inline IntPolynomial numerator_from_resolution(const PureResolution& r)
{
    return numerator_from_resolution(r.degrees, r.betti);
}

/// Sum over the whole table of (-1)^i beta_{i,j} z^j; valid for any shape.
inline IntPolynomial numerator_from_table(const BettiTable& table)
{
    IntPolynomial p;
    for (const auto& [key, v] : table.entries) p = p + IntPolynomial::monomial(key.first % 2 == 0 ? v : -v, key.second);
    return p;
}

/// (1 - z)^{n-d} h(z) - (1 + sum_i (-1)^{i+1} betti_i z^{degrees_i}); zero iff the identity holds.
inline IntPolynomial verify_series_identity(const HVector& h, int n, int d, std::span<const int> degrees,
                                            std::span<const std::int64_t> betti)
{
    if (n < d || d < 0) throw InvalidArgument("need n >= d >= 0");
    IntPolynomial lhs = IntPolynomial::one_minus_z_pow(n - d) * IntPolynomial(h.entries);
    return lhs - numerator_from_resolution(degrees, betti);
}

inline IntPolynomial verify_series_identity(const HVector& h, int n, int d, const PureResolution& r)
{
    return verify_series_identity(h, n, d, r.degrees, r.betti);
}

} // namespace srbetti

#endif // SRBETTI_HILBERT_HPP
