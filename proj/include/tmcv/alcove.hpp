#pragma once

#include "tmcv/root_system.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tmcv {

// Levels n_beta, indexed like rs.positive_roots:
// n_beta p < <x + rho, beta^vee> < (n_beta + 1) p on the interior.
struct AlcoveId {
    std::vector<Int> levels;
    Int p = 0;

    friend bool operator==(const AlcoveId&, const AlcoveId&) = default;
    friend auto operator<=>(const AlcoveId&, const AlcoveId&) = default;
};

struct SpecialPoint {
    Weight nu;
};

Weight affine_reflect(const RootSystem& rs, const Weight& alpha, Int n, Int p, const Weight& lambda);
Weight affine_reflect(const RootSystem& rs, std::size_t root_index, Int n, Int p, const Weight& lambda);

bool is_p_regular(const RootSystem& rs, const Weight& lambda, Int p);
AlcoveId alcove_of(const RootSystem& rs, const Weight& lambda, Int p);
AlcoveId lowest_alcove(const RootSystem& rs, Int p);

// lambda is linked to mu under the dot action of W_p.
bool in_dot_orbit(const RootSystem& rs, Int p, const Weight& lambda, const Weight& mu);

// lambda ^ mu: a chain of strictly decreasing affine dot-reflections from mu to lambda.
bool strongly_linked(const RootSystem& rs, Int p, const Weight& lambda, const Weight& mu);

// Every weight reachable from top by strictly decreasing affine dot-reflections
// and satisfying floor <=_Q weight (floor included), sorted.
std::vector<Weight> linked_below(const RootSystem& rs, Int p, const Weight& top, const Weight& floor);

// nu = -rho + p * tilde; tilde indexes the box.
SpecialPoint special_point(const RootSystem& rs, Int p, const Weight& tilde);
Weight box_index(const RootSystem& rs, Int p, const SpecialPoint& nu);
SpecialPoint box_of(const RootSystem& rs, Int p, const Weight& lambda);
std::vector<AlcoveId> box_alcoves(const RootSystem& rs, Int p, const SpecialPoint& nu);
inline Weight w_nu_dot(const SpecialPoint& nu, const Weight& lambda) { return -lambda + 2 * nu.nu; }

// Signed count of separating hyperplanes; positive when C lies above A.
Int distance(const AlcoveId& a, const AlcoveId& c);

// Integer weight in the alcove closest to the origin of its box (for p >= h the
// alcove of a box contains at least one integer weight once p is large enough).
std::optional<Weight> alcove_weight(const RootSystem& rs, const AlcoveId& a);

// The twelve labelled G2 alcoves of the restricted box, keyed by label.
class G2AlcoveLabels {
public:
    G2AlcoveLabels() = default;
    // label -> the 7-regular weight of that alcove at p = 7.
    explicit G2AlcoveLabels(std::map<int, Weight> reference);

    int label(const AlcoveId& a) const;
    AlcoveId alcove(int label, Int p) const;
    const std::map<int, Weight>& reference() const { return reference_; }

private:
    std::map<int, Weight> reference_;
    std::map<std::vector<Int>, int> by_levels_;
};

} // namespace tmcv
