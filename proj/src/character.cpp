#include "tmcv/character.hpp"

#include <algorithm>
#include <mutex>

namespace tmcv {

Character tensor(const Character& a, const Character& b)
{
    Character r;
    for (const auto& [x, m] : a)
        for (const auto& [y, n] : b) r.add(x + y, checked_mul(m, n));
    return r;
}

Character twist(const Character& c, Int factor)
{
    return c.reindexed([factor](const Weight& w) -> Weight { return factor * w; });
}

Character g2_half_twist(const RootSystem& rs, const Character& c)
{
    if (rs.kind != Kind::G2) throw Error(ErrorCode::WrongSystem, "half twist exists only for G2");
    return c.reindexed([](const Weight& w) -> Weight { return make_weight({3 * w(1), w(0)}); });
}

Character dominant_part(const Character& c)
{
    Character r;
    for (const auto& [w, m] : c)
        if (is_dominant(w)) r.add(w, m);
    return r;
}

Character expand_orbits(const RootSystem& rs, const Character& dominant)
{
    Character r;
    for (const auto& [w, m] : dominant)
        for (const Weight& x : orbit(rs, w)) r.add(x, m);
    return r;
}

bool is_w_invariant(const RootSystem& rs, const Character& c)
{
    for (const auto& [w, m] : c)
        for (int i = 0; i < rs.rank; ++i)
            if (c[rs.simple_reflect(i, w)] != m) return false;
    return true;
}

namespace {

// q with q * (1 - e(-beta)) = f; throws if the division is not exact.
Character divide_by_denominator_factor(const Character& f, const Weight& beta)
{
    Eigen::Index j = 0;
    while (beta(j) == 0) ++j;
    struct Entry {
        Int t;
        Int m;
    };
    std::map<Weight, std::vector<Entry>, WeightLess> strings;
    for (const auto& [w, m] : f) {
        Int t = floor_div(w(j), beta(j));
        strings[w - t * beta].push_back({t, m});
    }
    Character q;
    for (auto& [base, es] : strings) {
        std::sort(es.begin(), es.end(), [](const Entry& a, const Entry& b) { return a.t > b.t; });
        Int s = 0;
        std::size_t idx = 0;
        for (Int t = es.front().t; t >= es.back().t; --t) {
            if (idx < es.size() && es[idx].t == t) s = checked_add(s, es[idx++].m);
            q.add(base + t * beta, s);
        }
        if (s != 0) throw Error(ErrorCode::NegativeResidue, "Weyl denominator division is not exact");
    }
    return q;
}

struct CacheKey {
    int kind;
    Weight w;
};

struct CacheLess {
    bool operator()(const CacheKey& a, const CacheKey& b) const
    {
        if (a.kind != b.kind) return a.kind < b.kind;
        return WeightLess{}(a.w, b.w);
    }
};

std::mutex& cache_mutex()
{
    static std::mutex m;
    return m;
}

std::map<CacheKey, Character, CacheLess>& full_cache()
{
    static std::map<CacheKey, Character, CacheLess> c;
    return c;
}

std::map<CacheKey, Character, CacheLess>& dominant_cache()
{
    static std::map<CacheKey, Character, CacheLess> c;
    return c;
}

const Character& weyl_dominant_cached(const RootSystem& rs, const Weight& lambda)
{
    CacheKey key{static_cast<int>(rs.kind), lambda};
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = dominant_cache().find(key);
        if (it != dominant_cache().end()) return it->second;
    }
    Character d = dominant_part(weyl_character_cached(rs, lambda));
    std::lock_guard<std::mutex> lock(cache_mutex());
    return dominant_cache().emplace(key, std::move(d)).first->second;
}

} // namespace

Character weyl_character(const RootSystem& rs, const Weight& lambda)
{
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    Weight x = lambda + rs.rho();
    Character f;
    for (const auto& w : rs.weyl_group) f.add(apply(w, x) - rs.rho(), (w.length % 2) ? -1 : 1);
    for (const auto& beta : rs.positive_roots) f = divide_by_denominator_factor(f, beta);
    return f;
}

Character weyl_character_freudenthal(const RootSystem& rs, const Weight& lambda)
{
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    auto form = [&](const Weight& a, const Weight& b) -> Int { return a.dot(rs.form_scaled * b); };
    std::vector<Weight> dom = dominant_weights_below(rs, lambda);
    std::map<Weight, Int, WeightLess> mult;
    for (const auto& mu : dom) mult.emplace(mu, 0);
    const Weight lr = lambda + rs.rho();
    const Int top = form(lr, lr);
    mult[lambda] = 1;
    for (const auto& mu : dom) {
        if (same(mu, lambda)) continue;
        Int num = 0;
        for (const auto& beta : rs.positive_roots) {
            for (Int k = 1;; ++k) {
                Weight y = mu + k * beta;
                auto it = mult.find(dominant_conjugate(rs, y));
                if (it == mult.end()) break;
                num = checked_add(num, checked_mul(it->second, form(y, beta)));
            }
        }
        num = checked_mul(num, 2);
        Weight mr = mu + rs.rho();
        Int den = top - form(mr, mr);
        if (den <= 0 || num % den != 0) throw Error(ErrorCode::NegativeResidue, "Freudenthal recursion is not integral");
        mult[mu] = num / den;
    }
    Character d;
    for (const auto& [w, m] : mult) d.add(w, m);
    return expand_orbits(rs, d);
}

Int weyl_dim(const RootSystem& rs, const Weight& lambda)
{
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    __int128 num = 1, den = 1;
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        num *= rs.pair(lambda + rs.rho(), k);
        den *= rs.pair(rs.rho(), k);
    }
    return static_cast<Int>(num / den);
}

const Character& weyl_character_cached(const RootSystem& rs, const Weight& lambda)
{
    CacheKey key{static_cast<int>(rs.kind), lambda};
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = full_cache().find(key);
        if (it != full_cache().end()) return it->second;
    }
    Character c = weyl_character(rs, lambda);
    std::lock_guard<std::mutex> lock(cache_mutex());
    return full_cache().emplace(key, std::move(c)).first->second;
}

Character chi(const RootSystem& rs, const Weight& lambda)
{
    DotDominant d = dot_dominant(rs, lambda);
    if (d.sign == 0) return {};
    return Int(d.sign) * weyl_character_cached(rs, d.weight);
}

void add_term(WeylBasis& b, const Weight& mu, Int c)
{
    if (c == 0) return;
    auto [it, fresh] = b.try_emplace(mu, c);
    if (!fresh) {
        it->second = checked_add(it->second, c);
        if (it->second == 0) b.erase(it);
    }
}

Character dominant_character(const RootSystem& rs, const WeylBasis& b)
{
    Character r;
    for (const auto& [mu, c] : b) r.add(weyl_dominant_cached(rs, mu), c);
    return r;
}

Weight top_weight(const RootSystem& rs, const Character& c)
{
    const Weight* best = nullptr;
    Int bh = 0;
    for (const auto& [w, m] : c) {
        Int h = rs.scaled_height(w);
        if (!best || h > bh || (h == bh && WeightLess{}(*best, w))) {
            best = &w;
            bh = h;
        }
    }
    if (!best) throw Error(ErrorCode::MissingKey, "empty character has no top weight");
    return *best;
}

WeylBasis to_weyl_basis(const RootSystem& rs, const Character& c)
{
    WeylBasis b;
    Character r = dominant_part(c);
    while (!r.empty()) {
        Weight t = top_weight(rs, r);
        Int m = r[t];
        add_term(b, t, m);
        r.add(weyl_dominant_cached(rs, t), -m);
    }
    return b;
}

WeylBasis jantzen_sum_weyl(const RootSystem& rs, Int p, const Weight& lambda)
{
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    WeylBasis sf;
    const Weight lr = lambda + rs.rho();
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        Int v = rs.pair(lr, k);
        for (Int m = 1; m * p < v; ++m) {
            Int nu = 0;
            for (Int q = m * p; q % p == 0; q /= p) ++nu;
            Weight y = lambda - (v - m * p) * rs.positive_roots[k];
            DotDominant d = dot_dominant(rs, y);
            if (d.sign != 0) add_term(sf, d.weight, nu * d.sign);
        }
    }
    return sf;
}

Character jantzen_sum(const RootSystem& rs, Int p, const Weight& lambda)
{
    Character r;
    for (const auto& [mu, c] : jantzen_sum_weyl(rs, p, lambda)) r.add(weyl_character_cached(rs, mu), c);
    return r;
}

} // namespace tmcv
