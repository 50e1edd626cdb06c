#pragma once

#include "tmcv/baby_verma.hpp"
#include "tmcv/cohomology.hpp"
#include "tmcv/decomposition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tmcv {

// lambda-hat = 2(p^r - 1) rho + w0 lambda, for lambda in X_r.
Weight hat(const RootSystem& rs, Int p, int r, const Weight& lambda);

// (p^{r-1} - 1) rho + p^{r-1} hat_1(lambda) == hat_r((p^{r-1} - 1) rho + p^{r-1} lambda).
bool r_reduction_identity(const RootSystem& rs, Int p, int r, const Weight& lambda);

// Smallest <eta, alpha_0^vee> over dominant eta with Ext^1_G(k, L(eta)) != 0.
struct ExtGapDatum {
    Kind kind = Kind::A1;
    Int p = 0;
    Int d = 0;
    std::optional<Weight> witness;
    std::string provenance;
};

// p d > 2 (p - 1)(h - 1).
bool jantzen_bound_check(const ExtGapDatum& datum);
// The datum with d = 2(p - h + 1), the general lower bound for p >= h.
ExtGapDatum generic_ext_gap(const RootSystem& rs, Int p);

struct ScanViolation {
    Weight gamma;
    int simple = 0;
    Weight mu;
    Weight sigma0;
    Weight sigma1;
    Weight reflected; // s_i . sigma1
    Weight target;    // (p - 1) rho + mu
};

// Weights gamma of St_1 and restricted mu with gamma + mu = p sigma1 and
// <gamma, alpha_i^vee> <= -2p - <mu, alpha_i^vee>. For p >= h only mu with
// (p - 1) rho + mu in the principal block are scanned.
std::vector<ScanViolation> steinberg_weight_scan(const RootSystem& rs, Int p);

// Minimum of <mu, alpha_0^vee> over nonzero dominant mu in W_p . 0 with the
// pairing at most 4h.
struct LinkedMinimum {
    Int pairing = 0;
    Weight witness;
};
LinkedMinimum min_linked_pairing(const RootSystem& rs, Int p);

// A3, p = 5: all dominant lambda with (p-1) rho + lambda strongly linked below
// 2(p-1) rho - alpha_0.
struct LinkageReport {
    std::vector<std::pair<Weight, Int>> linked; // (lambda, <lambda, alpha_0^vee>)
    Weight exceptional;                         // (p-1) rho - alpha_0
    Int bound = 0;                              // p (h - 2)
};
LinkageReport a3p5_linkage_check();

// G2, p = 3: ch L(a,b) = ch L(a,0) * half_twist(ch L(b,0)) for 0 <= a,b <= 2.
struct IsogenyReport {
    std::vector<std::pair<Weight, Int>> factorizations; // (a,b), dim L(a,b)
    std::vector<Weight> weyl_simple;                    // lambda with L = nabla
    Int steinberg_dim = 0;
};
IsogenyReport g2p3_isogeny_checks(const SimpleCharacters& simples);

// sigma1 (from the shifted columns) with possible nonvanishing R^1 ind, and those
// with nabla(sigma1) not simple.
struct Sigma1Classification {
    std::vector<Weight> occurring;
    std::vector<std::pair<Weight, CohomologyResult>> r1_candidates;
    std::vector<Weight> r1_nonzero;
    std::vector<Weight> nabla_nonsimple;
};
Sigma1Classification g2p7_sigma1_classification(const std::vector<RadicalTable>& tables, const SimpleCharacters& simples);

// G2, p = 7: the restricted lambda whose hat is the shifted base of each table.
struct HatPair {
    int alcove = 0;
    Weight lambda;
    Weight hat;
};
std::vector<HatPair> g2p7_hat_table(const std::vector<RadicalTable>& tables);

enum class Resolution { HigherLayer, SameLayerChainAbsent, Unresolved };
std::string resolution_name(Resolution r);

struct CaseFinding {
    int case_id = 0;
    int alcove = 0;
    Weight sigma0;
    Weight sigma1;
    Weight sigma1_tilde;
    int layer_sigma1 = 0;
    int layer_tilde = 0;
    Resolution resolution = Resolution::Unresolved;
    std::vector<Weight> chain_checked;
};

// Pairs (sigma1, sigma1~) sharing a sigma0 component where nabla(sigma1) has a
// proper factor L(b) and R^1 ind sigma1~ = nabla(b). Throws UnresolvedCase.
std::vector<CaseFinding> g2p7_case_analysis(const std::vector<RadicalTable>& tables, const SimpleCharacters& simples);

// ch nabla(hat lambda) - ch L(lambda); throws NegativityDetected.
Character residual_character(const RootSystem& rs, Int p, const Weight& lambda, const SimpleCharacters& simples);

// One G_1B composition factor L(mu) (x) p sigma. Factors with a larger layer lie
// lower in the module; factors in the same layer are unordered.
struct FiltrationFactor {
    Weight mu;
    Weight sigma;
    int layer = 0;
};
enum class FiltrationVerdict { CondA, CondB, CondCCandidate, Inconclusive };
std::string verdict_name(FiltrationVerdict v);

FiltrationVerdict filtration_condition_check(const RootSystem& rs, const std::vector<FiltrationFactor>& factors,
                                             const SimpleCharacters* simples);
// Composition series listed from the bottom.
FiltrationVerdict filtration_condition_check(const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& series,
                                             const SimpleCharacters* simples);

// Factor list of a radical table read through the shifted column.
std::vector<FiltrationFactor> radical_factors(const RadicalTable& t);
// G_1T factors of Zhat'((p-1) rho + mu), all in one unordered layer.
std::vector<FiltrationFactor> steinberg_factors(const RootSystem& rs, Int p, const Weight& mu, const SimpleCharacters& simples);

} // namespace tmcv
