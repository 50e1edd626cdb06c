#pragma once

#include "tmcv/errors.hpp"
#include "tmcv/root_system.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace tmcv {

inline Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplicity overflow");
    return r;
}

inline Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "multiplicity overflow");
    return r;
}

template <class T>
T checked_add(T a, T b) { return a + b; }
template <class T>
T checked_mul(T a, T b) { return a * b; }

// Finite formal sum of weights with coefficients in C; zero terms are never stored.
template <class C>
class BasicCharacter {
public:
    using Map = std::map<Weight, C, WeightLess>;
    using const_iterator = typename Map::const_iterator;

    BasicCharacter() = default;
    BasicCharacter(const Weight& w, C c = C(1)) { add(w, c); }

    C operator[](const Weight& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add(const Weight& w, C c)
    {
        if (c == C(0)) return;
        auto [it, fresh] = terms_.try_emplace(w, c);
        if (!fresh) {
            it->second = checked_add(it->second, c);
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    // this += c * other
    void add(const BasicCharacter& other, C c = C(1))
    {
        if (c == C(0)) return;
        for (const auto& [w, m] : other.terms_) add(w, checked_mul(m, c));
    }

    BasicCharacter& operator+=(const BasicCharacter& o) { add(o, C(1)); return *this; }
    BasicCharacter& operator-=(const BasicCharacter& o) { add(o, C(-1)); return *this; }
    friend BasicCharacter operator+(BasicCharacter a, const BasicCharacter& b) { return a += b; }
    friend BasicCharacter operator-(BasicCharacter a, const BasicCharacter& b) { return a -= b; }
    friend BasicCharacter operator*(C c, const BasicCharacter& a)
    {
        BasicCharacter r;
        r.add(a, c);
        return r;
    }

    friend bool operator==(const BasicCharacter& a, const BasicCharacter& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto i = a.terms_.begin();
        auto j = b.terms_.begin();
        for (; i != a.terms_.end(); ++i, ++j)
            if (!same(i->first, j->first) || i->second != j->second) return false;
        return true;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const Map& terms() const { return terms_; }

    C dim() const
    {
        C s(0);
        for (const auto& t : terms_) s = checked_add(s, t.second);
        return s;
    }

    bool nonnegative() const
    {
        for (const auto& t : terms_)
            if (t.second < C(0)) return false;
        return true;
    }

    // Support re-indexings.
    BasicCharacter shifted(const Weight& by) const
    {
        BasicCharacter r;
        for (const auto& [w, m] : terms_) r.terms_.emplace_hint(r.terms_.end(), w + by, m);
        return r;
    }

    template <class F>
    BasicCharacter reindexed(F&& f) const
    {
        BasicCharacter r;
        for (const auto& [w, m] : terms_) r.add(f(w), m);
        return r;
    }

private:
    Map terms_;
};

using Character = BasicCharacter<Int>;

Character tensor(const Character& a, const Character& b);
Character twist(const Character& c, Int factor);
Character g2_half_twist(const RootSystem& rs, const Character& c);

// Restriction to dominant weights.
Character dominant_part(const Character& c);
// Inverse of dominant_part for W-invariant characters.
Character expand_orbits(const RootSystem& rs, const Character& dominant);
bool is_w_invariant(const RootSystem& rs, const Character& c);

// Weyl character by exact division of the alternating sum by the Weyl denominator.
Character weyl_character(const RootSystem& rs, const Weight& lambda);
// Weyl character by Freudenthal's recursion.
Character weyl_character_freudenthal(const RootSystem& rs, const Weight& lambda);
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Memoised weyl_character; thread-safe, returned reference stays valid.
const Character& weyl_character_cached(const RootSystem& rs, const Weight& lambda);

// chi(lambda) for arbitrary lambda: sign * chi(dominant dot-conjugate), zero on walls.
Character chi(const RootSystem& rs, const Weight& lambda);

// Virtual characters in the basis chi(mu), mu dominant.
using WeylBasis = std::map<Weight, Int, WeightLess>;

void add_term(WeylBasis& b, const Weight& mu, Int c);
// sum_mu b_mu * dominant_part(chi(mu))
Character dominant_character(const RootSystem& rs, const WeylBasis& b);
// Rewrites a W-invariant character in the chi basis by highest-weight peeling.
WeylBasis to_weyl_basis(const RootSystem& rs, const Character& c);

// Jantzen sum formula, sum over positive roots beta and 0 < mp < <lambda+rho, beta^vee>
// of nu_p(mp) chi(s_{beta,mp} . lambda).
WeylBasis jantzen_sum_weyl(const RootSystem& rs, Int p, const Weight& lambda);
Character jantzen_sum(const RootSystem& rs, Int p, const Weight& lambda);

// Maximal weight of the support: largest height, ties broken lexicographically.
Weight top_weight(const RootSystem& rs, const Character& c);

} // namespace tmcv
