/**
 * Exact matrix rank over prime fields GF(p) and over the rationals.
 */

#ifndef SRBETTI_EXACTLA_HPP
#define SRBETTI_EXACTLA_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "common.hpp"

namespace srbetti {

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// GF(p) for a prime p < 2^31, or the rationals.
class FieldSpec
{
  public:
    static FieldSpec prime(std::uint64_t p)
    {
        if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
            throw InvalidArgument("field characteristic must be a prime below 2^31, got " + std::to_string(p));
        return FieldSpec(static_cast<std::uint32_t>(p));
    }
    static FieldSpec rationals() { return FieldSpec(0); }

    /// "Q" (or "0") selects the rationals; a decimal prime selects GF(p).
    static FieldSpec parse(const std::string& s)
    {
        if (s == "Q" || s == "q" || s == "0") return rationals();
        if (s.empty() || s.size() > 10 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidArgument("field must be a prime or Q, got '" + s + "'");
        return prime(std::stoull(s));
    }

    bool is_rational() const { return characteristic_ == 0; }
    std::uint32_t characteristic() const { return characteristic_; }

    std::string name() const { return is_rational() ? "Q" : "GF(" + std::to_string(characteristic_) + ")"; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

  private:
    explicit FieldSpec(std::uint32_t c) : characteristic_(c) {}
    std::uint32_t characteristic_;
};

struct MatrixEntry
{
    int row;
    int col;
    std::int64_t value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

class SparseMatrix
{
  public:
    SparseMatrix(int rows, int cols, std::vector<MatrixEntry> entries = {})
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (rows < 0 || cols < 0) throw InvalidArgument("negative matrix dimension");
        for (const auto& e : entries_)
            if (e.row < 0 || e.row >= rows || e.col < 0 || e.col >= cols)
                throw InvalidArgument("matrix entry index out of range");
        std::sort(entries_.begin(), entries_.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
            return std::pair(a.row, a.col) < std::pair(b.row, b.col);
        });
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i - 1].row == entries_[i].row && entries_[i - 1].col == entries_[i].col)
                throw InvalidArgument("duplicate matrix entry");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    /// Sorted by (row, col).
    const std::vector<MatrixEntry>& entries() const { return entries_; }

    std::int64_t at(int r, int c) const
    {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair(r, c),
                                   [](const MatrixEntry& e, const std::pair<int, int>& key) {
                                       return std::pair(e.row, e.col) < key;
                                   });
        return (it != entries_.end() && it->row == r && it->col == c) ? it->value : 0;
    }

    SparseMatrix transpose() const
    {
        std::vector<MatrixEntry> t;
        t.reserve(entries_.size());
        for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
        return SparseMatrix(cols_, rows_, std::move(t));
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

  private:
    int rows_;
    int cols_;
    std::vector<MatrixEntry> entries_;
};

struct PrimeField
{
    using value_type = std::uint32_t;
    std::uint32_t p;

    value_type from_int(std::int64_t v) const
    {
        std::int64_t r = v % static_cast<std::int64_t>(p);
        return static_cast<value_type>(r < 0 ? r + p : r);
    }
    static bool is_zero(value_type a) { return a == 0; }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type mul(value_type a, value_type b) const
    {
        return static_cast<value_type>(std::uint64_t{a} * b % p);
    }
    value_type inv(value_type a) const
    {
        // a^(p-2) by square-and-multiply.
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<value_type>(result);
    }
};

struct RationalField
{
    using value_type = boost::multiprecision::mpq_rational;

    static value_type from_int(std::int64_t v) { return value_type(v); }
    static bool is_zero(const value_type& a) { return a == 0; }
    static value_type sub(const value_type& a, const value_type& b) { return a - b; }
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type inv(const value_type& a) { return 1 / a; }
};

/**
 * Row reduction over `field`. Rows are processed sparsest first; each row is
 * reduced against stored pivot rows (keyed by leading column, normalized to
 * a leading 1) until it vanishes or hits a free leading column, where it is
 * stored. The rank is the number of stored pivots.
 */
template <class Field>
std::size_t rank_over(const SparseMatrix& m, const Field& field)
{
    using Value = typename Field::value_type;
    using Row = std::vector<std::pair<int, Value>>;

    std::vector<Row> rows(m.rows());
    for (const auto& e : m.entries()) {
        Value v = field.from_int(e.value);
        if (!Field::is_zero(v)) rows[e.row].emplace_back(e.col, std::move(v));
    }
    std::vector<int> order(m.rows());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return rows[a].size() < rows[b].size(); });

    std::vector<Row> pivots(m.cols());
    std::vector<char> has_pivot(m.cols(), 0);
    std::size_t rank = 0;
    Row scratch;
    for (int r : order) {
        Row row = std::move(rows[r]);
        while (!row.empty()) {
            const int lead = row.front().first;
            if (!has_pivot[lead]) {
                Value scale = field.inv(row.front().second);
                for (auto& [c, v] : row) v = field.mul(v, scale);
                pivots[lead] = std::move(row);
                has_pivot[lead] = 1;
                ++rank;
                break;
            }
            // row -= row[lead] * pivot
            const Row& piv = pivots[lead];
            const Value factor = row.front().second;
            scratch.clear();
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < piv.size()) {
                if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                    scratch.push_back(std::move(row[i++]));
                } else if (i == row.size() || piv[j].first < row[i].first) {
                    scratch.emplace_back(piv[j].first, field.sub(field.from_int(0), field.mul(factor, piv[j].second)));
                    ++j;
                } else {
                    Value v = field.sub(row[i].second, field.mul(factor, piv[j].second));
                    if (!Field::is_zero(v)) scratch.emplace_back(row[i].first, std::move(v));
                    ++i;
                    ++j;
                }
            }
            std::swap(row, scratch);
        }
    }
    return rank;
}

inline std::size_t rank(const SparseMatrix& m, const FieldSpec& field)
{
    if (field.is_rational()) return rank_over(m, RationalField{});
    return rank_over(m, PrimeField{field.characteristic()});
}

} // namespace srbetti

#endif // SRBETTI_EXACTLA_HPP
