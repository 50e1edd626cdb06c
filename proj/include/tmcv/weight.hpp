#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>

namespace tmcv {

// Integer vectors in fundamental-weight coordinates. Rank is at most 3, so the
// storage is inline.
template <class Scalar>
using WeightT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1, Eigen::ColMajor, 3, 1>;

template <class Scalar>
using SquareT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, 3, 3>;

using Int = std::int64_t;
using Weight = WeightT<Int>;
using IntMatrix = SquareT<Int>;

inline Weight make_weight(std::initializer_list<Int> xs)
{
    Weight w(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (Int x : xs) w(i++) = x;
    return w;
}

template <class Scalar>
Weight zero_weight(Eigen::Index rank) { return Weight::Zero(rank); }

// Lexicographic order on coordinates; shorter vectors first.
struct WeightLess {
    template <class A, class B>
    bool operator()(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) const
    {
        if (a.size() != b.size()) return a.size() < b.size();
        for (Eigen::Index i = 0; i < a.size(); ++i) {
            if (a(i) != b(i)) return a(i) < b(i);
        }
        return false;
    }
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(w.size());
        for (Eigen::Index i = 0; i < w.size(); ++i)
            h = h * 1000003u ^ std::hash<Int>{}(w(i));
        return h;
    }
};

struct WeightEq {
    bool operator()(const Weight& a, const Weight& b) const noexcept
    {
        return a.size() == b.size() && (a.size() == 0 || a == b);
    }
};

inline bool same(const Weight& a, const Weight& b) { return WeightEq{}(a, b); }

// "(a,b,c)"
std::string to_string(const Weight& w);

// Accepts "a,b,c" with optional surrounding parentheses and blanks.
Weight parse_weight(std::string_view text);

// Floor division and modulus with nonnegative remainder.
inline Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_mod(Int a, Int b) { return a - floor_div(a, b) * b; }

} // namespace tmcv
