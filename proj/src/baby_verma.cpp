#include "tmcv/baby_verma.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

namespace tmcv {

void LaurentPoly::add(Int e, Int c)
{
    if (c == 0) return;
    Int& v = coeffs[e];
    v = checked_add(v, c);
    if (v == 0) coeffs.erase(e);
}

std::string LaurentPoly::to_string() const
{
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : coeffs) {
        if (!s.empty()) s += c < 0 ? "-" : "+";
        else if (c < 0) s += "-";
        Int a = c < 0 ? -c : c;
        if (e == 0) {
            s += std::to_string(a);
            continue;
        }
        if (a != 1) s += std::to_string(a);
        s += "q";
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

namespace {

const Character& zhat_zero(const RootSystem& rs, Int p)
{
    static std::mutex m;
    static std::map<std::pair<int, Int>, Character> cache;
    std::pair<int, Int> key{static_cast<int>(rs.kind), p};
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Character c(rs.zero());
    for (const auto& beta : rs.positive_roots) {
        Character f;
        for (Int k = 0; k < p; ++k) f.add(-k * beta, 1);
        c = tensor(c, f);
    }
    std::lock_guard<std::mutex> lock(m);
    return cache.emplace(key, std::move(c)).first->second;
}

std::pair<Weight, Weight> split_mod(const Weight& w, Int p)
{
    Weight s0(w.size()), s1(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) {
        s0(i) = floor_mod(w(i), p);
        s1(i) = floor_div(w(i), p);
    }
    return {s0, s1};
}

} // namespace

Character zhat_character(const RootSystem& rs, Int p, const Weight& mu)
{
    return zhat_zero(rs, p).shifted(mu);
}

std::vector<G1TFactor> g1t_factors(const RootSystem& rs, Int p, const Weight& mu, const SimpleCharacters& simples)
{
    Character r = zhat_character(rs, p, mu);
    std::map<std::pair<Weight, Weight>, Int, std::function<bool(const std::pair<Weight, Weight>&, const std::pair<Weight, Weight>&)>>
        acc([](const auto& a, const auto& b) {
            if (!same(a.first, b.first)) return WeightLess{}(a.first, b.first);
            return WeightLess{}(a.second, b.second);
        });
    while (!r.empty()) {
        Weight t = top_weight(rs, r);
        auto [s0, s1] = split_mod(t, p);
        Int m = r[t];
        if (m < 0) throw Error(ErrorCode::NegativeResidue, "baby Verma residue negative at " + to_string(t));
        acc[{s0, s1}] += m;
        r.add(simples.character(s0).shifted(p * s1), -m);
    }
    std::vector<G1TFactor> out;
    for (const auto& [k, m] : acc) out.push_back({k.first, k.second, m});
    return out;
}

void check_table_structure(const RadicalTable& t)
{
    const RootSystem& rs = root_system(Kind::G2);
    const Int p = 7;
    const std::string where = "alcove " + std::to_string(t.alcove) + " table";
    if (t.base.size() != 2 || !is_restricted(t.base, p) || !is_p_regular(rs, t.base, p))
        throw Error(ErrorCode::SchemaError, where + ": base weight " + to_string(t.base) + " is not restricted and 7-regular");
    int heads = 0, max_layer = -1;
    const Character& z = zhat_zero(rs, p);
    for (const auto& e : t.entries) {
        if (e.sigma0.size() != 2 || e.sigma1.size() != 2)
            throw Error(ErrorCode::SchemaError, where + ": weight of wrong rank");
        if (e.layer < 0 || e.layer > 2 * static_cast<int>(rs.positive_roots.size()))
            throw Error(ErrorCode::SchemaError, where + ": layer " + std::to_string(e.layer) + " out of range");
        if (e.mult <= 0) throw Error(ErrorCode::SchemaError, where + ": nonpositive multiplicity");
        Weight w = e.sigma0 + p * e.sigma1;
        auto [s0, s1] = split_mod(w, p);
        if (!same(s0, e.sigma0) || !same(s1, e.sigma1))
            throw Error(ErrorCode::SchemaError, where + ": entry " + to_string(e.sigma0) + " + 7" + to_string(e.sigma1) + " does not split back");
        if (!is_p_regular(rs, e.sigma0, p))
            throw Error(ErrorCode::SchemaError, where + ": sigma0 " + to_string(e.sigma0) + " is 7-singular");
        if (z[w - t.base] == 0)
            throw Error(ErrorCode::SchemaError, where + ": weight " + to_string(w) + " = " + to_string(e.sigma0) + " + 7" +
                                                    to_string(e.sigma1) + " is not a weight of the baby Verma module");
        if (e.layer == 0) {
            ++heads;
            if (e.mult != 1) throw Error(ErrorCode::SchemaError, where + ": head multiplicity must be 1");
        }
        max_layer = std::max(max_layer, e.layer);
    }
    if (heads != 1) throw Error(ErrorCode::SchemaError, where + ": expected exactly one entry in layer 0");
    int socles = 0;
    for (const auto& e : t.entries)
        if (e.layer == max_layer) {
            ++socles;
            if (!same(e.sigma0, t.base) || !same(e.sigma1, rs.zero()) || e.mult != 1)
                throw Error(ErrorCode::SchemaError, where + ": bottom layer must be L" + to_string(t.base) + " alone");
        }
    if (socles != 1) throw Error(ErrorCode::SchemaError, where + ": bottom layer must be a single entry");
}

OracleStats validate_table(const RadicalTable& t, const SimpleCharacters& simples)
{
    const RootSystem& rs = root_system(Kind::G2);
    const Int p = 7;
    Character sum;
    for (const auto& e : t.entries) sum.add(simples.character(e.sigma0).shifted(p * e.sigma1), e.mult);
    Character z = zhat_character(rs, p, t.base);
    Character diff = sum - z;
    if (!diff.empty()) {
        Weight w = top_weight(rs, diff);
        auto [s0, s1] = split_mod(w, p);
        throw Error(ErrorCode::OracleMismatch,
                    "alcove " + std::to_string(t.alcove) + " table, weight " + to_string(w) + " = " + to_string(s0) + " + 7" +
                        to_string(s1) + ": tables give " + std::to_string(sum[w]) + ", baby Verma has " + std::to_string(z[w]));
    }
    return {z.size(), z.dim()};
}

RecoveredQ recover_Q(const RadicalTable& t, const SpecialPoint& nu, const AlcoveId& c)
{
    const RootSystem& rs = root_system(Kind::G2);
    const Int p = 7;
    RecoveredQ r;
    auto lam = alcove_weight(rs, c);
    if (!lam) throw Error(ErrorCode::UnlabeledAlcove, "alcove has no integral weight");
    if (!same(box_of(rs, p, *lam).nu, nu.nu)) throw Error(ErrorCode::OnBoxWall, "alcove is not in the box of the special point");
    r.lambda = *lam;
    r.w_lambda = w_nu_dot(nu, r.lambda);
    auto [s0, s1] = split_mod(r.w_lambda, p);
    r.sigma0 = s0;
    r.sigma1 = s1;
    r.d = distance(alcove_of(rs, t.base, p), c);
    std::map<int, Int> layers;
    for (const auto& e : t.entries)
        if (same(e.sigma0, s0) && same(e.sigma1, s1)) layers[e.layer] += e.mult;
    for (const auto& [j, m] : layers) {
        if ((r.d - j) % 2 != 0)
            throw Error(ErrorCode::ParityViolation, "alcove " + std::to_string(t.alcove) + " table, layer " + std::to_string(j) +
                                                        " against d=" + std::to_string(r.d) + " at " + to_string(r.w_lambda));
        r.q.add((r.d - j) / 2, m);
        r.layers.emplace_back(j, m);
    }
    return r;
}

std::map<Weight, Character, WeightLess> derive_simple_characters(const std::vector<RadicalTable>& tables)
{
    const RootSystem& rs = root_system(Kind::G2);
    const Int p = 7;
    std::map<Weight, const RadicalTable*, WeightLess> by_base;
    for (const auto& t : tables) by_base[t.base] = &t;
    const Character& z = zhat_zero(rs, p);
    std::map<std::pair<Weight, Weight>, Int, std::function<bool(const std::pair<Weight, Weight>&, const std::pair<Weight, Weight>&)>>
        memo([](const auto& a, const auto& b) {
            if (!same(a.first, b.first)) return WeightLess{}(a.first, b.first);
            return WeightLess{}(a.second, b.second);
        });
    // f(s, x) = dim L(s)_x for dominant x.
    std::function<Int(const Weight&, const Weight&)> f = [&](const Weight& s, const Weight& x) -> Int {
        if (!dominance_leq(rs, x, s)) return 0;
        auto key = std::make_pair(s, x);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        auto tb = by_base.find(s);
        if (tb == by_base.end()) throw Error(ErrorCode::MissingKey, "no table with base " + to_string(s));
        Int v = z[x - s];
        for (const auto& e : tb->second->entries) {
            if (same(e.sigma0, s) && same(e.sigma1, rs.zero())) continue;
            v -= e.mult * f(e.sigma0, dominant_conjugate(rs, x - p * e.sigma1));
        }
        memo.emplace(key, v);
        return v;
    };
    std::map<Weight, Character, WeightLess> out;
    for (const auto& [s, t] : by_base) {
        Character d;
        for (const Weight& x : dominant_weights_below(rs, s)) d.add(x, f(s, x));
        out.emplace(s, std::move(d));
    }
    return out;
}

} // namespace tmcv
