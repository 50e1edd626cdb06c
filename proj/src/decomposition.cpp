#include "tmcv/decomposition.hpp"

#include "tmcv/alcove.hpp"

#include <algorithm>

namespace tmcv {

const Multiset& DecompositionTable::row(const Weight& lambda) const
{
    auto it = rows.find(lambda);
    if (it == rows.end())
        throw Error(ErrorCode::MissingKey, kind_name(kind) + " p=" + std::to_string(p) + " weight " + to_string(lambda));
    return it->second;
}

void check_structure(const DecompositionTable& t)
{
    const RootSystem& rs = root_system(t.kind);
    const std::string where = kind_name(t.kind) + " p=" + std::to_string(t.p);
    for (const auto& [lambda, row] : t.rows) {
        if (lambda.size() != rs.rank || !is_dominant(lambda))
            throw Error(ErrorCode::SchemaError, where + ": key " + to_string(lambda) + " is not a dominant weight");
        if (multiplicity(row, lambda) != 1)
            throw Error(ErrorCode::SchemaError, where + ": [nabla" + to_string(lambda) + ":L" + to_string(lambda) + "] must be 1");
        for (const auto& [mu, m] : row) {
            if (m <= 0)
                throw Error(ErrorCode::SchemaError, where + ": nonpositive multiplicity at " + to_string(lambda) + " / " + to_string(mu));
            if (!t.has(mu))
                throw Error(ErrorCode::MissingKey, where + ": weight " + to_string(mu) + " (factor of " + to_string(lambda) + ") is not a key");
            if (same(mu, lambda)) continue;
            if (!dominance_leq(rs, mu, lambda) || !in_dot_orbit(rs, t.p, mu, lambda))
                throw Error(ErrorCode::SchemaError, where + ": factor " + to_string(mu) + " of " + to_string(lambda) +
                                                        " is not below and linked");
        }
    }
}

SimpleCharacters::SimpleCharacters(const DecompositionTable& t) : rs_(root_system(t.kind)), table_(t) {}

const WeylBasis& SimpleCharacters::weyl_basis(const Weight& lambda) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = basis_.find(lambda);
        if (it != basis_.end()) return it->second;
    }
    const Multiset& row = table_.row(lambda);
    WeylBasis b;
    add_term(b, lambda, 1);
    for (const auto& [mu, m] : row) {
        if (same(mu, lambda)) continue;
        for (const auto& [nu, c] : weyl_basis(mu)) add_term(b, nu, checked_mul(-m, c));
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return basis_.emplace(lambda, std::move(b)).first->second;
}

const Character& SimpleCharacters::dominant(const Weight& lambda) const
{
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = dominant_.find(lambda);
        if (it != dominant_.end()) return it->second;
    }
    Character d = dominant_character(rs_, weyl_basis(lambda));
    std::lock_guard<std::mutex> lock(mutex_);
    return dominant_.emplace(lambda, std::move(d)).first->second;
}

Character SimpleCharacters::character(const Weight& lambda) const { return expand_orbits(rs_, dominant(lambda)); }

Character simple_character(const RootSystem& rs, Int p, const Weight& lambda, const DecompositionTable& t)
{
    if (t.kind != rs.kind || t.p != p) throw Error(ErrorCode::WrongSystem, "decomposition table does not match");
    SimpleCharacters s(t);
    return s.character(lambda);
}

Multiset decompose_weyl(const WeylBasis& c, const SimpleCharacters& simples)
{
    const RootSystem& rs = simples.rs();
    WeylBasis r = c;
    std::map<Weight, Int, WeightLess> out;
    while (!r.empty()) {
        // The chi basis is unitriangular, so peel at a maximal chi term.
        const Weight* best = nullptr;
        Int bh = 0;
        for (const auto& [w, m] : r) {
            Int h = rs.scaled_height(w);
            if (!best || h > bh || (h == bh && WeightLess{}(*best, w))) {
                best = &w;
                bh = h;
            }
        }
        Weight t = *best;
        Int m = r[t];
        if (m < 0) throw Error(ErrorCode::NegativeResidue, "negative residue at " + to_string(t));
        out[t] = m;
        for (const auto& [nu, a] : simples.weyl_basis(t)) add_term(r, nu, checked_mul(-m, a));
    }
    return {out.begin(), out.end()};
}

Multiset decompose(const Character& c, const SimpleCharacters& simples)
{
    return decompose_weyl(to_weyl_basis(simples.rs(), c), simples);
}

Int multiplicity(const Multiset& m, const Weight& w)
{
    for (const auto& [x, k] : m)
        if (same(x, w)) return k;
    return 0;
}

} // namespace tmcv
