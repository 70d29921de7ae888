/**
 * Shared vocabulary for the srbetti headers: vertex bitsets, the exception
 * hierarchy, and overflow-checked integer helpers.
 */

#ifndef SRBETTI_COMMON_HPP
#define SRBETTI_COMMON_HPP

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace srbetti {

/// A set of vertices 0..63, bit i standing for vertex i.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public Error
{
  public:
    using Error::Error;
};

class TooManyVertices : public Error
{
  public:
    TooManyVertices(int n, int cap)
        : Error("vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(cap)),
          count(n), limit(cap)
    {
    }
    int count;
    int limit;
};

class InvalidComplex : public Error
{
  public:
    using Error::Error;
};

class InvalidArgument : public Error
{
  public:
    using Error::Error;
};

class ParseError : public Error
{
  public:
    ParseError(int line_number, const std::string& what)
        : Error("line " + std::to_string(line_number) + ": " + what), line(line_number)
    {
    }
    int line;
};

class DimensionOutOfRange : public Error
{
  public:
    using Error::Error;
};

class NotPure : public Error
{
  public:
    using Error::Error;
};

class NonPositiveResult : public Error
{
  public:
    NonPositiveResult(int index, std::int64_t value)
        : Error("Betti number at index " + std::to_string(index) + " evaluates to "
                + std::to_string(value)),
          index(index), value(value)
    {
    }
    int index;
    std::int64_t value;
};

class NotChordal : public Error
{
  public:
    using Error::Error;
};

class OverflowError : public Error
{
  public:
    using Error::Error;
};

inline int cardinality(VertexSet s) { return std::popcount(s); }

inline bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }

inline VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }

/// Members in increasing order.
inline std::vector<int> members(VertexSet s)
{
    std::vector<int> out;
    out.reserve(cardinality(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

/// Lexicographic comparison of the sorted member lists.
inline bool lex_less(VertexSet a, VertexSet b)
{
    while (a && b) {
        int x = std::countr_zero(a), y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

/// Order by (cardinality, lexicographic member list).
inline bool size_lex_less(VertexSet a, VertexSet b)
{
    int ca = cardinality(a), cb = cardinality(b);
    if (ca != cb) return ca < cb;
    return lex_less(a, b);
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/**
 * Binomial coefficient C(top, k) extended to negative `top` through
 * C(top, k) = (-1)^k C(k - top - 1, k). Zero for k < 0, and for
 * 0 <= top < k.
 */
inline std::int64_t binomial(std::int64_t top, std::int64_t k)
{
    if (k < 0) return 0;
    if (top < 0) {
        std::int64_t v = binomial(k - top - 1, k);
        return (k % 2 == 0) ? v : -v;
    }
    if (k > top) return 0;
    if (k > top - k) k = top - k;
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (top - k + i) / i;
        if (r > std::numeric_limits<std::int64_t>::max())
            throw OverflowError("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

} // namespace srbetti

#endif // SRBETTI_COMMON_HPP
