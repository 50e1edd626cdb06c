#pragma once

#include "tmcv/weight.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tmcv {

enum class Kind { A1, A2, A3, B2, G2 };

std::string kind_name(Kind k);
Kind parse_kind(std::string_view s);

struct WeylElement {
    IntMatrix matrix; // acts on fundamental-weight coordinates
    int length = 0;
    std::vector<int> word; // reduced word in simple reflections (0-based)
};

// Exact rational vector: numerators over a common positive denominator.
struct RationalVector {
    Weight num;
    Int den = 1;
};

class RootSystem {
public:
    Kind kind;
    int rank = 0;
    std::vector<Weight> simple_roots;
    std::vector<Weight> positive_roots;
    IntMatrix cartan; // cartan(i, j) = <alpha_i, alpha_j^vee>
    int coxeter_number = 0;
    Weight highest_short_root; // alpha_0
    Weight highest_long_root;  // alpha tilde
    std::vector<WeylElement> weyl_group;
    int w0_index = 0;

    // coroots[k](i) = <omega_i, beta_k^vee> for the k-th positive root.
    std::vector<Weight> coroots;
    std::vector<bool> is_long;
    // W-invariant form: (x, y) = x^T form_scaled y / form_den.
    IntMatrix form_scaled;
    Int form_den = 1;
    int alpha0_index = 0;
    int alpha_tilde_index = 0;

    Weight rho() const { return Weight::Ones(rank); }
    Weight zero() const { return Weight::Zero(rank); }

    const WeylElement& w0() const { return weyl_group[static_cast<std::size_t>(w0_index)]; }

    // <lambda, beta_k^vee> for the k-th positive root.
    Int pair(const Weight& lambda, std::size_t k) const { return coroots[k].dot(lambda); }

    // Index of a positive root, or -1.
    int positive_index(const Weight& beta) const;

    // Coordinates of x in the basis of simple roots.
    RationalVector root_coords(const Weight& x) const;

    // Sum of root coordinates scaled by the denominator; strictly decreases along
    // the dominance order.
    Int scaled_height(const Weight& x) const;

    Weight simple_reflect(int i, const Weight& lambda) const
    {
        return lambda - lambda(i) * simple_roots[static_cast<std::size_t>(i)];
    }

private:
    IntMatrix root_coord_adj_; // adjugate of cartan^T
    Int root_coord_det_ = 1;
    friend const RootSystem& root_system(Kind);
    friend RootSystem build_root_system(Kind);
};

// Shared immutable instances.
const RootSystem& root_system(Kind k);

// <lambda, alpha^vee> for alpha in the root set; throws NotARoot.
Int pairing(const RootSystem& rs, const Weight& lambda, const Weight& alpha);

inline Weight apply(const WeylElement& w, const Weight& lambda) { return w.matrix * lambda; }

Weight dot_apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda);

bool dominance_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu);
bool leq_Q(const RootSystem& rs, const Weight& lambda, const Weight& mu);

bool is_dominant(const Weight& lambda);
bool is_restricted(const Weight& lambda, Int p, int r = 1);
Int ipow(Int p, int r);

// lambda = lambda0 + p^r lambda1 with lambda0 in X_r.
std::pair<Weight, Weight> restricted_split(const Weight& lambda, Int p, int r = 1);

// Dominant W-conjugate of lambda under the linear action.
Weight dominant_conjugate(const RootSystem& rs, const Weight& lambda);

// Dominant representative of the dot orbit together with the sign (-1)^{l(w)}.
// Returns sign 0 when lambda + rho lies on a reflecting hyperplane.
struct DotDominant {
    Weight weight;
    int sign = 0;
};
DotDominant dot_dominant(const RootSystem& rs, const Weight& lambda);

// All weights in the W-orbit of lambda, sorted.
std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda);

// Dominant weights mu with mu <= lambda (same coset of the root lattice), sorted
// by decreasing height.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda);

} // namespace tmcv
