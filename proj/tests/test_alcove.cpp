#include "support.hpp"

#include <Eigen/LU>

#include <cmath>
#include <set>

using namespace tmcv;
using namespace tmcv::test;

namespace {

// Signed count of walls crossed on the straight path from x to y.
Int crossings(const RootSystem& r, Int p, const Weight& x, const Weight& y)
{
    Int total = 0;
    for (std::size_t b = 0; b < r.positive_roots.size(); ++b) {
        Int a = r.pair(x + r.rho(), b), c = r.pair(y + r.rho(), b);
        for (Int v = std::min(a, c) + 1; v < std::max(a, c); ++v)
            if (floor_mod(v, p) == 0) total += c > a ? 1 : -1;
    }
    return total;
}

std::vector<Weight> box_weights(const RootSystem& r, Int p, const SpecialPoint& nu)
{
    std::vector<Weight> out;
    Weight off = Weight::Ones(r.rank);
    for (;;) {
        out.push_back(nu.nu + off);
        int i = 0;
        while (i < r.rank && off(i) == p - 1) off(i++) = 1;
        if (i == r.rank) break;
        ++off(i);
    }
    return out;
}

// The published alcove table over the box of -rho: label, lambda, d(A, C).
struct LabelRow {
    int label;
    Weight lambda;
    Int d;
};
const std::vector<LabelRow>& label_rows()
{
    static const std::vector<LabelRow> rows{
        {1, w({0, 0}), 0},  {2, w({2, 0}), 1},  {3, w({1, 1}), 2},  {4, w({1, 2}), 3},
        {5, w({2, 2}), 4},  {6, w({0, 4}), 5},  {7, w({5, 1}), 5},  {8, w({3, 3}), 6},
        {11, w({4, 3}), 7}, {13, w({4, 4}), 8}, {15, w({3, 5}), 9}, {16, w({5, 5}), 10}};
    return rows;
}

} // namespace

TEST_SUITE("alcove")
{
TEST_CASE("affine reflections")
{
    const RootSystem& g = rs(Kind::G2);
    CHECK_W(affine_reflect(g, g.highest_short_root, 1, 7, g.zero()), w({2, 0}));
    CHECK_W(affine_reflect(g, g.highest_short_root, 1, 7, g.zero()), 2 * g.highest_short_root);
    const RootSystem& a = rs(Kind::A3);
    CHECK_W(affine_reflect(a, a.highest_short_root, 1, 5, a.zero()), w({2, 0, 2}));
    // a weight on the wall is fixed: <(3,0,0) + rho, alpha_0^vee> = 6 = 2 * 3
    CHECK_W(affine_reflect(a, a.highest_short_root, 2, 3, w({3, 0, 0})), w({3, 0, 0}));
}

TEST_CASE("affine reflections are involutions")
{
    std::mt19937_64 gen(7);
    for (Kind k : kAllKinds) {
        const RootSystem& r = rs(k);
        for (Int p : {2, 3, 5, 7})
            for (std::size_t b = 0; b < r.positive_roots.size(); ++b)
                for (int t = 0; t < 20; ++t) {
                    Weight x = random_weight(gen, r.rank, -20, 20);
                    Int n = std::uniform_int_distribution<Int>(-4, 4)(gen);
                    Weight y = affine_reflect(r, b, n, p, x);
                    CHECK_W(affine_reflect(r, b, n, p, y), x);
                    // the reflection negates the shifted pairing about np
                    CHECK(r.pair(y + r.rho(), b) - n * p == -(r.pair(x + r.rho(), b) - n * p));
                }
    }
}

TEST_CASE("alcove_of")
{
    const RootSystem& g = rs(Kind::G2);
    AlcoveId low = alcove_of(g, w({0, 0}), 7);
    CHECK(low == lowest_alcove(g, 7));
    for (Int l : low.levels) CHECK(l == 0);
    AlcoveId top = alcove_of(g, w({5, 5}), 7);
    CHECK(top.levels[static_cast<std::size_t>(g.alpha0_index)] == 4);
    const RootSystem& a = rs(Kind::A3);
    CHECK_FALSE(is_p_regular(a, w({1, 0, 1}), 5));
    CHECK_THROWS_AS(alcove_of(a, w({1, 0, 1}), 5), Error);
    try {
        alcove_of(a, w({1, 0, 1}), 5);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::OnWall);
    }
}

TEST_CASE("strong linkage: A3, p = 5, pairing 10")
{
    const RootSystem& a = rs(Kind::A3);
    const Weight top = 2 * 4 * a.rho() - a.highest_short_root;
    CHECK_W(top, w({7, 8, 7}));
    std::vector<Weight> linked;
    for (Int x = 0; x <= 10; ++x)
        for (Int y = 0; x + y <= 10; ++y) {
            Weight lambda = w({x, y, 10 - x - y});
            if (strongly_linked(a, 5, 4 * a.rho() + lambda, top)) linked.push_back(lambda);
        }
    REQUIRE(linked.size() == 1);
    CHECK_W(linked[0], w({3, 4, 3}));
    CHECK(strongly_linked(a, 5, top, top));
}

TEST_CASE("linked weights lie below and in the orbit")
{
    for (auto [k, p, top] : {std::tuple{Kind::A3, Int(5), w({7, 8, 7})}, std::tuple{Kind::B2, Int(5), w({8, 8})},
                             std::tuple{Kind::G2, Int(7), w({12, 12})}, std::tuple{Kind::A2, Int(3), w({6, 4})}}) {
        const RootSystem& r = rs(k);
        auto below = linked_below(r, p, top, -r.rho());
        CHECK(below.size() > 1);
        for (const Weight& x : below) {
            CHECK(dominance_leq(r, x, top));
            CHECK(in_dot_orbit(r, p, x, top));
            if (is_dominant(x)) CHECK(strongly_linked(r, p, x, top));
        }
    }
}

TEST_CASE("boxes")
{
    const RootSystem& g = rs(Kind::G2);
    SpecialPoint base = special_point(g, 7, g.zero());
    CHECK_W(base.nu, -g.rho());
    CHECK(box_alcoves(g, 7, base).size() == 12);
    CHECK_W(w_nu_dot(base, w({0, 0})), w({-2, -2}));
    CHECK_W(w_nu_dot(base, w({5, 5})), w({-7, -7}));
    CHECK_W(box_of(g, 7, w({3, 4})).nu, base.nu);
    CHECK_W(box_of(g, 7, w({9, 1})).nu, w({6, -1}));
    CHECK_W(box_index(g, 7, box_of(g, 7, w({9, 1}))), w({1, 0}));
    CHECK_THROWS_AS(box_of(g, 7, w({6, 2})), Error);
    CHECK_THROWS_AS(box_of(g, 7, w({-1, 2})), Error);

    // a box holds |W| / [X : ZPhi] alcoves
    CHECK(box_alcoves(rs(Kind::B2), 5, special_point(rs(Kind::B2), 5, w({1, 2}))).size() == 4);
    CHECK(box_alcoves(rs(Kind::A2), 5, special_point(rs(Kind::A2), 5, w({0, 0}))).size() == 2);
    CHECK(box_alcoves(rs(Kind::A3), 5, special_point(rs(Kind::A3), 5, w({0, 0, 0}))).size() == 6);
}

TEST_CASE("w_nu is an involution preserving regularity and alcoves")
{
    for (auto [k, p] : {std::pair{Kind::G2, Int(7)}, std::pair{Kind::B2, Int(5)}, std::pair{Kind::A3, Int(5)}}) {
        const RootSystem& r = rs(k);
        SpecialPoint nu = special_point(r, p, Weight::Ones(r.rank));
        std::set<std::vector<Int>> alcoves, images;
        for (const Weight& x : box_weights(r, p, nu)) {
            CHECK_W(w_nu_dot(nu, w_nu_dot(nu, x)), x);
            if (!is_p_regular(r, x, p)) continue;
            Weight y = w_nu_dot(nu, x);
            REQUIRE(is_p_regular(r, y, p));
            // the image lies in the opposite box, nu - (x - nu)
            for (int i = 0; i < r.rank; ++i) CHECK((nu.nu(i) - p < y(i) && y(i) < nu.nu(i)));
            alcoves.insert(alcove_of(r, x, p).levels);
            images.insert(alcove_of(r, y, p).levels);
        }
        const auto index = static_cast<std::size_t>(std::llround(r.cartan.cast<double>().determinant()));
        CHECK(alcoves.size() == r.weyl_group.size() / index);
        CHECK(alcoves.size() == box_alcoves(r, p, nu).size());
        CHECK(images.size() == alcoves.size());
    }
}

TEST_CASE("distance examples")
{
    const RootSystem& g = rs(Kind::G2);
    AlcoveId a = alcove_of(g, w({0, 0}), 7);
    CHECK(distance(a, a) == 0);
    CHECK(distance(a, alcove_of(g, w({5, 5}), 7)) == 10);
    CHECK(distance(a, alcove_of(g, w({4, 3}), 7)) == 7);
    for (const LabelRow& row : label_rows()) {
        CAPTURE(row.label);
        CHECK(distance(a, alcove_of(g, row.lambda, 7)) == row.d);
    }
}

TEST_CASE("distance counts separating walls, additive and antisymmetric")
{
    for (auto [k, p] : {std::pair{Kind::G2, Int(7)}, std::pair{Kind::B2, Int(5)}, std::pair{Kind::A3, Int(5)}}) {
        const RootSystem& r = rs(k);
        for (const Weight& tilde : {r.zero(), Weight(Weight::Ones(r.rank)), Weight(-Weight::Unit(r.rank, 0))}) {
            auto alcoves = box_alcoves(r, p, special_point(r, p, tilde));
            std::vector<Weight> points;
            for (const AlcoveId& c : alcoves) {
                auto x = alcove_weight(r, c);
                REQUIRE(x.has_value());
                points.push_back(*x);
            }
            for (std::size_t i = 0; i < alcoves.size(); ++i)
                for (std::size_t j = 0; j < alcoves.size(); ++j) {
                    CHECK(distance(alcoves[i], alcoves[j]) == crossings(r, p, points[i], points[j]));
                    CHECK(distance(alcoves[i], alcoves[j]) == -distance(alcoves[j], alcoves[i]));
                    for (std::size_t l = 0; l < alcoves.size(); ++l)
                        CHECK(distance(alcoves[i], alcoves[j]) + distance(alcoves[j], alcoves[l]) ==
                              distance(alcoves[i], alcoves[l]));
                }
        }
    }
}

TEST_CASE("G2 alcove labels")
{
    const RootSystem& g = rs(Kind::G2);
    const G2AlcoveLabels labels = bundle().alcove_labels().labels();
    CHECK(labels.label(alcove_of(g, w({0, 0}), 7)) == 1);
    CHECK(labels.label(alcove_of(g, w({2, 2}), 7)) == 5);
    CHECK(labels.label(alcove_of(g, w({3, 5}), 7)) == 15);
    std::set<int> seen;
    for (const LabelRow& row : label_rows()) {
        CAPTURE(row.label);
        CHECK_W(labels.reference().at(row.label), row.lambda);
        CHECK(labels.label(labels.alcove(row.label, 7)) == row.label);
        CHECK(labels.alcove(row.label, 7) == alcove_of(g, row.lambda, 7));
        // labels are invariant under box translation
        CHECK(labels.label(alcove_of(g, row.lambda + 7 * w({1, 2}), 7)) == row.label);
        seen.insert(row.label);
    }
    CHECK(seen.size() == 12);
    CHECK(labels.reference().size() == 12);
    // every alcove of the restricted box carries one of the twelve labels
    int unlabeled = 0;
    for (const AlcoveId& c : box_alcoves(g, 7, special_point(g, 7, g.zero()))) {
        try {
            labels.label(c);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnlabeledAlcove);
            ++unlabeled;
        }
    }
    CHECK(unlabeled == 0);
    CHECK_THROWS_AS(labels.alcove(9, 7), Error);
}

TEST_CASE("smallest nonzero dominant weight linked to 0")
{
    // Brute force over the dot orbit of 0: every nonzero dominant weight linked to 0
    // with small alpha_0 pairing lies above (p - h + 1) alpha_0.
    const std::vector<std::pair<Kind, Int>> cases{{Kind::A1, 2}, {Kind::A1, 3}, {Kind::A1, 5}, {Kind::A2, 3},
                                                  {Kind::A2, 5}, {Kind::A3, 5}, {Kind::A3, 7}, {Kind::B2, 5}, {Kind::B2, 7},
                                                  {Kind::G2, 7}, {Kind::G2, 11}};
    for (auto [k, p] : cases) {
        const RootSystem& r = rs(k);
        CAPTURE(kind_name(k));
        CAPTURE(p);
        const Int h = r.coxeter_number;
        const Weight expected = (p - h + 1) * r.highest_short_root;
        const Int cap = 4 * h;
        std::vector<Weight> found;
        Weight x = r.zero();
        // enumerate the dominant weights with <x, alpha_0^vee> <= cap
        std::function<void(int, Int)> rec = [&](int i, Int budget) {
            if (i == r.rank) {
                if (!x.isZero() && in_dot_orbit(r, p, x, r.zero())) found.push_back(x);
                return;
            }
            const Int c = pairing(r, Weight::Unit(r.rank, i), r.highest_short_root);
            for (Int v = 0; v * c <= budget; ++v) {
                x(i) = v;
                rec(i + 1, budget - v * c);
            }
            x(i) = 0;
        };
        rec(0, cap);
        REQUIRE_FALSE(found.empty());
        bool has_expected = false;
        for (const Weight& y : found) {
            has_expected = has_expected || same(y, expected);
            CHECK_MESSAGE(dominance_leq(r, expected, y), to_string(y));
        }
        CHECK(has_expected);
    }
}
}
