#include "support.hpp"

#include "tmcv/baby_verma.hpp"
#include "tmcv/io.hpp"

#include <set>
#include <sstream>

using namespace tmcv;
using namespace tmcv::test;

namespace {

// prod over positive roots of (1 + e(-a) + ... + e(-(p-1)a)), by repeated convolution.
Character zhat_oracle(const RootSystem& r, Int p, const Weight& mu)
{
    Character c(mu);
    for (const Weight& a : r.positive_roots) {
        Character f;
        for (Int i = 0; i < p; ++i) f.add(Weight(-i * a), 1);
        c = tensor(c, f);
    }
    return c;
}

const RadicalTable& table(int alcove)
{
    for (const RadicalTable& t : bundle().radical_tables())
        if (t.alcove == alcove) return t;
    throw std::out_of_range("no table for alcove " + std::to_string(alcove));
}

using Key = std::tuple<std::vector<Int>, int, std::vector<Int>>;
Key key(const Weight& s0, int j, const Weight& s1) { return {{s0(0), s0(1)}, j, {s1(0), s1(1)}}; }

// The alcove 1 table, base column, one "sigma0 j : sigma1 ..." group per line;
// "xk" marks multiplicity k.
const char* kAlcove1 = R"(
5,5 0 : -1,-1
3,5 1 : -1,-1
3,5 5 : 0,-1
4,4 2 : -1,-1
4,4 4 : 0,-1 -2,0
4,3 3 : -1,-1 0,-1 1,-2 -2,0
3,3 2 : -1,-1 0,-1 1,-2 -2,0 -3,0
5,1 3 : -1,-1 0,-1 1,-2 -2,0 -3,0
5,1 5 : -1,0
0,4 1 : -1,-1 0,-1 0,-2 1,-2 -2,0 -3,0
2,2 2 : -1,-1 0,-1 0,-2 1,-2 -2,0 -3,0
2,2 4 : -1,-1 0,-1 -1,0 1,-2 -2,0 2,-2
1,2 1 : -1,-1 0,-1 0,-2 1,-2 -2,0 -2,-1 -3,0
1,2 3 : -1,-1x2 0,-1x2 -1,0 1,-2 -2,0x2 2,-2 -3,0 -4,1
1,1 2 : -1,-1x3 0,-1x2 -1,0 0,-2 1,-2x2 -2,0x2 -2,-1 2,-2 -3,0 2,-3 -4,1
1,1 4 : 0,-1
2,0 1 : -1,-1x3 0,-1 -1,0 0,-2 1,-2 -2,0 -2,-1 2,-2 -3,0 2,-3 -4,0 -4,1
2,0 3 : 0,-1 -2,0
0,0 2 : -1,-1x3 0,-1 -1,0 0,-2 1,-2 -2,0 -2,-1 2,-2 -3,0 2,-3 -4,0 -4,1
0,0 4 : -1,-1 0,-1x3 -1,0 1,-1 0,-2 1,-2 -2,0x2 2,-2 -3,0 -3,1 3,-3
0,0 6 : 0,0
)";

std::map<Key, Int> parse_alcove1()
{
    std::map<Key, Int> out;
    std::istringstream in(kAlcove1);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string s0, colon, tok;
        int j = 0;
        ls >> s0 >> j >> colon;
        while (ls >> tok) {
            Int m = 1;
            if (auto x = tok.find('x'); x != std::string::npos) {
                m = std::stoll(tok.substr(x + 1));
                tok = tok.substr(0, x);
            }
            out[key(parse_weight(s0), j, parse_weight(tok))] += m;
        }
    }
    return out;
}

struct QRow {
    int label;
    Weight lambda, w_lambda, sigma0;
    std::map<Int, Int> q;
    Int d;
    std::vector<std::pair<int, Int>> layers;
};

const std::vector<QRow>& q_rows()
{
    static const std::vector<QRow> rows{
        {1, w({0, 0}), w({-2, -2}), w({5, 5}), {{0, 1}}, 0, {{0, 1}}},
        {2, w({2, 0}), w({-4, -2}), w({3, 5}), {{0, 1}}, 1, {{1, 1}}},
        {3, w({1, 1}), w({-3, -3}), w({4, 4}), {{0, 1}}, 2, {{2, 1}}},
        {4, w({1, 2}), w({-3, -4}), w({4, 3}), {{0, 1}}, 3, {{3, 1}}},
        {5, w({2, 2}), w({-4, -4}), w({3, 3}), {{1, 1}}, 4, {{2, 1}}},
        {6, w({0, 4}), w({-2, -6}), w({5, 1}), {{1, 1}}, 5, {{3, 1}}},
        {7, w({5, 1}), w({-7, -3}), w({0, 4}), {{2, 1}}, 5, {{1, 1}}},
        {8, w({3, 3}), w({-5, -5}), w({2, 2}), {{1, 1}, {2, 1}}, 6, {{2, 1}, {4, 1}}},
        {11, w({4, 3}), w({-6, -5}), w({1, 2}), {{2, 2}, {3, 1}}, 7, {{1, 1}, {3, 2}}},
        {13, w({4, 4}), w({-6, -6}), w({1, 1}), {{3, 3}}, 8, {{2, 3}}},
        {15, w({3, 5}), w({-5, -7}), w({2, 0}), {{4, 3}}, 9, {{1, 3}}},
        {16, w({5, 5}), w({-7, -7}), w({0, 0}), {{3, 1}, {4, 3}}, 10, {{2, 3}, {4, 1}}}};
    return rows;
}

} // namespace

TEST_SUITE("baby_verma")
{
TEST_CASE("baby Verma characters")
{
    const RootSystem& g = rs(Kind::G2);
    CHECK(zhat_character(g, 7, g.zero()).dim() == 117649);
    std::mt19937_64 gen(47);
    for (Kind k : kAllKinds)
        for (Int p : {2, 3, 5}) {
            const RootSystem& r = rs(k);
            const Weight mu = random_weight(gen, r.rank, -5, 5);
            CHECK(zhat_character(r, p, mu) == zhat_oracle(r, p, mu));
            CHECK(zhat_character(r, p, mu).dim() == ipow(p, static_cast<int>(r.positive_roots.size())));
        }
    // Zhat(mu0 + p mu1) is Zhat(mu0) shifted by p mu1
    CHECK(zhat_character(g, 7, w({7, 7})) == zhat_character(g, 7, w({0, 0})).shifted(w({7, 7})));
    for (int t = 0; t < 10; ++t) {
        Weight m0 = random_weight(gen, 2, 0, 6), m1 = random_weight(gen, 2, -3, 3);
        CHECK(zhat_character(g, 7, m0 + 7 * m1) == zhat_character(g, 7, m0).shifted(7 * m1));
    }
}

TEST_CASE("support of Zhat((p-1) rho + mu) is the Steinberg support shifted by mu")
{
    for (auto [k, p] : {std::pair{Kind::A2, Int(3)}, std::pair{Kind::B2, Int(5)}, std::pair{Kind::G2, Int(5)}}) {
        const RootSystem& r = rs(k);
        const Character st = weyl_character(r, (p - 1) * r.rho());
        for (const Weight& mu : {r.zero(), Weight(Weight::Ones(r.rank)), Weight(Weight::Unit(r.rank, 0))}) {
            const Character z = zhat_character(r, p, (p - 1) * r.rho() + mu);
            std::set<Weight, WeightLess> a, b;
            for (const auto& [x, m] : z) a.insert(x);
            for (const auto& [x, m] : st) b.insert(x + mu);
            CHECK(a == b);
        }
    }
}

TEST_CASE("G_1T factors")
{
    for (auto [k, p] : {std::pair{Kind::A2, Int(3)}, std::pair{Kind::B2, Int(5)}, std::pair{Kind::G2, Int(7)}}) {
        const RootSystem& r = rs(k);
        auto f = g1t_factors(r, p, (p - 1) * r.rho(), bundle().simples(k, p));
        REQUIRE(f.size() == 1);
        CHECK_W(f[0].sigma0, (p - 1) * r.rho());
        CHECK_W(f[0].sigma1, r.zero());
        CHECK(f[0].mult == 1);
    }
    const SimpleCharacters& s = bundle().simples(Kind::G2, 7);
    const RootSystem& g = rs(Kind::G2);
    auto base = g1t_factors(g, 7, g.zero(), s);
    auto shifted = g1t_factors(g, 7, w({7, 7}), s);
    auto find = [](const std::vector<G1TFactor>& fs, const Weight& a, const Weight& b) -> Int {
        for (const G1TFactor& f : fs)
            if (same(f.sigma0, a) && same(f.sigma1, b)) return f.mult;
        return 0;
    };
    CHECK(find(base, w({5, 5}), w({-1, -1})) == 1);
    CHECK(find(base, w({0, 0}), w({-1, -1})) == 4);
    CHECK(find(shifted, w({0, 0}), w({0, 0})) == 4);
    CHECK(find(base, w({0, 0}), w({0, 0})) == 1);
    // recomposition
    Character c;
    for (const G1TFactor& f : base) c.add(s.character(f.sigma0).shifted(7 * f.sigma1), f.mult);
    CHECK(c == zhat_character(g, 7, g.zero()));
}

TEST_CASE("radical tables: layer sums agree with G_1T peeling")
{
    const RootSystem& g = rs(Kind::G2);
    const SimpleCharacters& s = bundle().simples(Kind::G2, 7);
    for (const RadicalTable& t : bundle().radical_tables()) {
        CAPTURE(t.alcove);
        std::map<std::pair<std::vector<Int>, std::vector<Int>>, Int> from_table, peeled;
        for (const RadicalEntry& e : t.entries) from_table[{{e.sigma0(0), e.sigma0(1)}, {e.sigma1(0), e.sigma1(1)}}] += e.mult;
        for (const G1TFactor& f : g1t_factors(g, 7, t.base, s))
            peeled[{{f.sigma0(0), f.sigma0(1)}, {f.sigma1(0), f.sigma1(1)}}] += f.mult;
        CHECK(from_table == peeled);
    }
}

TEST_CASE("radical tables: the baby Verma identity")
{
    REQUIRE(bundle().radical_tables().size() == 12);
    std::set<int> labels;
    for (const RadicalTable& t : bundle().radical_tables()) {
        CAPTURE(t.alcove);
        labels.insert(t.alcove);
        OracleStats st = validate_table(t, bundle().simples(Kind::G2, 7));
        CHECK(st.dimension == 117649);
        CHECK(st.weights == 901);
        CHECK_NOTHROW(check_table_structure(t));
    }
    CHECK(labels == std::set<int>{1, 2, 3, 4, 5, 6, 7, 8, 11, 13, 15, 16});
}

TEST_CASE("radical tables: structure")
{
    for (const RadicalTable& t : bundle().radical_tables()) {
        CAPTURE(t.alcove);
        int heads = 0, max_layer = 0;
        for (const RadicalEntry& e : t.entries) {
            CHECK(e.layer >= 0);
            CHECK(e.layer <= 12);
            CHECK(e.mult > 0);
            CHECK(is_restricted(e.sigma0, 7));
            max_layer = std::max(max_layer, e.layer);
            if (e.layer == 0) {
                ++heads;
                CHECK(e.mult == 1);
            }
        }
        CHECK(heads == 1);
        int socle = 0;
        for (const RadicalEntry& e : t.entries)
            if (e.layer == max_layer) {
                ++socle;
                CHECK_W(e.sigma0, t.base);
                CHECK_W(e.sigma1, w({0, 0}));
            }
        CHECK(socle == 1);
        CHECK_W(t.shifted_base(), t.base + w({7, 7}));
    }
}

TEST_CASE("alcove 1 table against an independent transcription")
{
    std::map<Key, Int> bundled;
    for (const RadicalEntry& e : table(1).entries) bundled[key(e.sigma0, e.layer, e.sigma1)] += e.mult;
    CHECK(bundled == parse_alcove1());
    CHECK_W(table(1).base, w({0, 0}));
}

TEST_CASE("the shifted column is sigma1 + rho")
{
    const Json j = read_json(data_dir() / "radical" / "alcove_01.json");
    for (const Json& e : j.at("entries")) {
        Weight s1 = weight_from_json(e.at("sigma1"), 2, "test");
        Weight sh = weight_from_json(e.at("shifted_sigma1"), 2, "test");
        CHECK_W(sh, s1 + w({1, 1}));
    }
    Json bad = j;
    bad["entries"][3]["shifted_sigma1"][0] = bad["entries"][3]["shifted_sigma1"][0].get<Int>() + 1;
    CHECK_THROWS_AS(radical_from_json(bad, "mutated"), Error);
}

TEST_CASE("structure checks reject malformed tables")
{
    RadicalTable t = table(5);
    t.entries.push_back({w({1, 1}), 0, w({0, 0}), 1});
    CHECK_THROWS_AS(check_table_structure(t), Error);
    t = table(5);
    t.entries[1].layer = 13;
    CHECK_THROWS_AS(check_table_structure(t), Error);
    t = table(5);
    t.entries[2].sigma1 = w({9, 9});
    CHECK_THROWS_AS(check_table_structure(t), Error);
}

TEST_CASE("recovering Q over the box of -rho")
{
    const RootSystem& g = rs(Kind::G2);
    const SpecialPoint nu{-g.rho()};
    for (const QRow& row : q_rows()) {
        CAPTURE(row.label);
        RecoveredQ q = recover_Q(table(1), nu, alcove_of(g, row.lambda, 7));
        CHECK_W(q.lambda, row.lambda);
        CHECK_W(q.w_lambda, row.w_lambda);
        CHECK_W(q.sigma0, row.sigma0);
        CHECK_W(q.sigma1, -g.rho());
        CHECK(q.q.coeffs == row.q);
        CHECK(q.d == row.d);
        CHECK(q.layers == row.layers);
    }
    CHECK(recover_Q(table(1), nu, alcove_of(g, w({3, 3}), 7)).q.to_string() == "q+q^2");
    CHECK(recover_Q(table(1), nu, alcove_of(g, w({4, 3}), 7)).q.to_string() == "2q^2+q^3");
    CHECK(recover_Q(table(1), nu, alcove_of(g, w({0, 0}), 7)).q.to_string() == "1");
}

TEST_CASE("parity and positivity at every special point of every table")
{
    const RootSystem& g = rs(Kind::G2);
    int points = 0;
    for (const RadicalTable& t : bundle().radical_tables()) {
        std::set<Key> done;
        for (const RadicalEntry& e : t.entries) {
            if (!done.insert(key(e.sigma0, 0, e.sigma1)).second) continue;
            SpecialPoint nu = special_point(g, 7, e.sigma1 + g.rho());
            Weight lambda = w_nu_dot(nu, e.sigma0 + 7 * e.sigma1);
            RecoveredQ q = recover_Q(t, nu, alcove_of(g, lambda, 7));
            ++points;
            CHECK(!q.q.empty());
            for (const auto& [exp, c] : q.q.coeffs) {
                CHECK(exp >= 0);
                CHECK(c > 0);
            }
            for (const auto& [j, m] : q.layers) CHECK((q.d - j) % 2 == 0);
        }
    }
    CHECK(points > 100);
}

TEST_CASE("a parity violation is reported")
{
    const RootSystem& g = rs(Kind::G2);
    RadicalTable t = table(1);
    for (RadicalEntry& e : t.entries)
        if (same(e.sigma0, w({3, 3}))) e.layer = 3;
    CHECK_THROWS_AS(recover_Q(t, SpecialPoint{-g.rho()}, alcove_of(g, w({2, 2}), 7)), Error);
}

TEST_CASE("the twelve simple characters solved from the tables")
{
    auto derived = derive_simple_characters(bundle().radical_tables());
    CHECK(derived.size() == 12);
    const SimpleCharacters& s = bundle().simples(Kind::G2, 7);
    for (const auto& [mu, ch] : derived) {
        CAPTURE(to_string(mu));
        CHECK(ch == s.dominant(mu));
    }
}

TEST_CASE("Laurent polynomials")
{
    LaurentPoly a;
    a.add(2, 1);
    a.add(1, 1);
    CHECK(a.to_string() == "q+q^2");
    a.add(1, -1);
    CHECK(a.to_string() == "q^2");
    LaurentPoly z;
    CHECK(z.to_string() == "0");
    z.add(-1, 3);
    z.add(0, -2);
    CHECK(z.to_string() == "3q^-1-2");
}
}
