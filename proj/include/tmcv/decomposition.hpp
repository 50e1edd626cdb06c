#pragma once

#include "tmcv/character.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace tmcv {

using Multiset = std::vector<std::pair<Weight, Int>>;

// [nabla(lambda) : L(mu)] for every key lambda.
struct DecompositionTable {
    Kind kind = Kind::A1;
    Int p = 0;
    std::map<Weight, Multiset, WeightLess> rows;
    std::string provenance;

    bool has(const Weight& lambda) const { return rows.count(lambda) != 0; }
    const Multiset& row(const Weight& lambda) const;
};

// Head multiplicity one, lower factors strictly below and linked, closed downward.
void check_structure(const DecompositionTable& t);

// ch L(lambda) assembled from the table rows; memoised and thread-safe.
class SimpleCharacters {
public:
    explicit SimpleCharacters(const DecompositionTable& t);

    const RootSystem& rs() const { return rs_; }
    const DecompositionTable& table() const { return table_; }

    const WeylBasis& weyl_basis(const Weight& lambda) const;
    const Character& dominant(const Weight& lambda) const;
    Character character(const Weight& lambda) const;

private:
    const RootSystem& rs_;
    const DecompositionTable& table_;
    mutable std::mutex mutex_;
    mutable std::map<Weight, WeylBasis, WeightLess> basis_;
    mutable std::map<Weight, Character, WeightLess> dominant_;
};

Character simple_character(const RootSystem& rs, Int p, const Weight& lambda, const DecompositionTable& t);

// c = sum m_i ch L(mu_i), m_i > 0, sorted by weight.
Multiset decompose(const Character& c, const SimpleCharacters& simples);
Multiset decompose_weyl(const WeylBasis& c, const SimpleCharacters& simples);

Int multiplicity(const Multiset& m, const Weight& w);

} // namespace tmcv
