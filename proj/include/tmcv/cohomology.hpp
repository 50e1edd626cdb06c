#pragma once

#include "tmcv/root_system.hpp"

#include <string>

namespace tmcv {

struct CohomologyResult {
    enum class Value { Zero, Costandard, Unknown };
    int degree = 0;
    Value value = Value::Unknown;
    Weight weight; // highest weight of nabla when value == Costandard

    bool is_zero() const { return value == Value::Zero; }
    bool is_unknown() const { return value == Value::Unknown; }
    std::string describe() const;
};

// Decidable fragment of R^i ind_B^G sigma for i in {0, 1, 2}.
CohomologyResult r_ind(const RootSystem& rs, const Weight& sigma, int degree);

// False means R^1 ind sigma = 0.
bool r1_nonvanishing_possible(const RootSystem& rs, const Weight& sigma);

} // namespace tmcv
