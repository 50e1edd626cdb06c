#pragma once

#include "tmcv/alcove.hpp"
#include "tmcv/decomposition.hpp"

#include <map>
#include <string>
#include <vector>

namespace tmcv {

struct RadicalEntry {
    Weight sigma0;
    int layer = 0;
    Weight sigma1;
    Int mult = 1;
};

// Radical layers of the G2, p = 7 baby Verma module with base weight mu. The
// shifted column (base mu + 7 rho) is sigma1 + rho entrywise.
struct RadicalTable {
    int alcove = 0;
    Weight base;
    std::vector<RadicalEntry> entries;
    std::string provenance;

    Weight shifted_base() const { return base + 7 * Weight::Ones(base.size()); }
};

struct LaurentPoly {
    std::map<Int, Int> coeffs;

    void add(Int e, Int c);
    bool empty() const { return coeffs.empty(); }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
    std::string to_string() const; // "q+q^2", "1", "3q^3"
};

Character zhat_character(const RootSystem& rs, Int p, const Weight& mu);

struct G1TFactor {
    Weight sigma0;
    Weight sigma1;
    Int mult = 0;
};
std::vector<G1TFactor> g1t_factors(const RootSystem& rs, Int p, const Weight& mu, const SimpleCharacters& simples);

// Structural checks: layers in [0, 12], single head at j = 0 with multiplicity 1,
// single socle entry (mu, 0) at the maximal layer, sigma0 restricted and 7-regular,
// every sigma0 + 7 sigma1 a weight of the baby Verma module.
void check_table_structure(const RadicalTable& t);

struct OracleStats {
    std::size_t weights = 0;
    Int dimension = 0;
};

// sum mult ch L(sigma0) e(7 sigma1) == ch Zhat'(mu); throws OracleMismatch.
OracleStats validate_table(const RadicalTable& t, const SimpleCharacters& simples);

struct RecoveredQ {
    LaurentPoly q;
    Int d = 0;
    Weight lambda;     // p-regular weight of C
    Weight w_lambda;   // w_nu . lambda
    Weight sigma0, sigma1;
    std::vector<std::pair<int, Int>> layers; // (j, multiplicity)
};

RecoveredQ recover_Q(const RadicalTable& t, const SpecialPoint& nu, const AlcoveId& c);

// Solves the tables for the twelve characters ch L(mu) (dominant parts), one
// table per unknown, by recursion on the height of mu - x.
std::map<Weight, Character, WeightLess> derive_simple_characters(const std::vector<RadicalTable>& tables);

} // namespace tmcv
