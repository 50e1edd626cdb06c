#include "tmcv/cohomology.hpp"

namespace tmcv {

std::string CohomologyResult::describe() const
{
    switch (value) {
    case Value::Zero: return "0";
    case Value::Costandard: return "nabla" + to_string(weight);
    case Value::Unknown: return "unknown";
    }
    return "?";
}

CohomologyResult r_ind(const RootSystem& rs, const Weight& sigma, int degree)
{
    using V = CohomologyResult::Value;
    CohomologyResult r;
    r.degree = degree;
    if (is_dominant(sigma)) {
        if (degree == 0) {
            r.value = V::Costandard;
            r.weight = sigma;
        } else {
            r.value = V::Zero;
        }
        return r;
    }
    for (int i = 0; i < rs.rank; ++i)
        if (sigma(i) == -1) {
            r.value = V::Zero;
            return r;
        }
    int low = -1, count = 0;
    for (int i = 0; i < rs.rank; ++i)
        if (sigma(i) <= -2) {
            low = i;
            ++count;
        }
    if (count != 1) return r;
    Weight t = rs.simple_reflect(low, sigma + rs.rho()) - rs.rho();
    if (is_dominant(t)) {
        if (degree == 1) {
            r.value = V::Costandard;
            r.weight = t;
        } else {
            r.value = V::Zero;
        }
        return r;
    }
    for (int i = 0; i < rs.rank; ++i)
        if (t(i) == -1) {
            r.value = V::Zero;
            return r;
        }
    return r;
}

bool r1_nonvanishing_possible(const RootSystem& rs, const Weight& sigma)
{
    for (int i = 0; i < rs.rank; ++i)
        if (sigma(i) <= -2) return true;
    return false;
}

} // namespace tmcv
