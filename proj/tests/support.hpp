#pragma once

#include "tmcv/bundle.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>

namespace tmcv::test {

inline std::filesystem::path data_dir() { return TMCV_TEST_DATA; }

// One validated bundle shared by every test case in the process.
inline const DatasetBundle& bundle()
{
    static const DatasetBundle b(data_dir());
    return b;
}

inline Weight w(std::initializer_list<Int> xs) { return make_weight(xs); }

inline const RootSystem& rs(Kind k) { return root_system(k); }

inline constexpr Kind kAllKinds[] = {Kind::A1, Kind::A2, Kind::A3, Kind::B2, Kind::G2};

inline Weight random_weight(std::mt19937_64& g, int rank, Int lo, Int hi)
{
    std::uniform_int_distribution<Int> d(lo, hi);
    Weight x(rank);
    for (int i = 0; i < rank; ++i) x(i) = d(g);
    return x;
}

} // namespace tmcv::test

#define CHECK_W(a, b) CHECK_MESSAGE(tmcv::same((a), (b)), tmcv::to_string(a), " vs ", tmcv::to_string(b))

namespace doctest {
template <>
struct StringMaker<tmcv::Weight> {
    static String convert(const tmcv::Weight& x) { return tmcv::to_string(x).c_str(); }
};
} // namespace doctest
