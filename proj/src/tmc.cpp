#include "tmcv/tmc.hpp"

#include "tmcv/alcove.hpp"

#include <algorithm>
#include <set>

namespace tmcv {

namespace {

std::vector<Weight> restricted_region(const RootSystem& rs, Int p)
{
    std::vector<Weight> out;
    Weight w = Weight::Zero(rs.rank);
    for (;;) {
        out.push_back(w);
        int i = rs.rank - 1;
        while (i >= 0 && w(i) == p - 1) w(i--) = 0;
        if (i < 0) break;
        ++w(i);
    }
    return out; // lexicographic
}

Weight simple_dot_reflect(const RootSystem& rs, int i, const Weight& w)
{
    return w - (w(i) + 1) * rs.simple_roots[static_cast<std::size_t>(i)];
}

CohomologyResult decided(const RootSystem& rs, const Weight& sigma, int degree)
{
    CohomologyResult r = r_ind(rs, sigma, degree);
    if (r.is_unknown())
        throw Error(ErrorCode::UnknownCohomology, "R^" + std::to_string(degree) + " ind " + to_string(sigma));
    return r;
}

} // namespace

Weight hat(const RootSystem& rs, Int p, int r, const Weight& lambda)
{
    if (lambda.size() != rs.rank || !is_restricted(lambda, p, r))
        throw Error(ErrorCode::NotRestricted, to_string(lambda) + " is not " + std::to_string(p) + "^" + std::to_string(r) + "-restricted");
    return 2 * (ipow(p, r) - 1) * rs.rho() + apply(rs.w0(), lambda);
}

bool r_reduction_identity(const RootSystem& rs, Int p, int r, const Weight& lambda)
{
    if (r < 2) throw Error(ErrorCode::UnsupportedCase, "r must be at least 2");
    const Int q = ipow(p, r - 1);
    Weight lhs = (q - 1) * rs.rho() + q * hat(rs, p, 1, lambda);
    Weight rhs = hat(rs, p, r, (q - 1) * rs.rho() + q * lambda);
    return same(lhs, rhs);
}

bool jantzen_bound_check(const ExtGapDatum& datum)
{
    const Int h = root_system(datum.kind).coxeter_number;
    return datum.p * datum.d > 2 * (datum.p - 1) * (h - 1);
}

ExtGapDatum generic_ext_gap(const RootSystem& rs, Int p)
{
    ExtGapDatum d;
    d.kind = rs.kind;
    d.p = p;
    d.d = 2 * (p - rs.coxeter_number + 1);
    d.provenance = "general bound 2(p - h + 1)";
    return d;
}

std::vector<ScanViolation> steinberg_weight_scan(const RootSystem& rs, Int p)
{
    const Weight st = (p - 1) * rs.rho();
    const Character& steinberg = weyl_character_cached(rs, st);
    const bool principal_only = p >= rs.coxeter_number;
    std::vector<ScanViolation> out;
    for (const Weight& mu : restricted_region(rs, p)) {
        if (principal_only && !in_dot_orbit(rs, p, st + mu, rs.zero())) continue;
        for (const auto& [gamma, m] : steinberg) {
            if (m <= 0) continue;
            Weight sum = gamma + mu;
            bool divisible = true;
            for (int k = 0; k < rs.rank; ++k) divisible = divisible && floor_mod(sum(k), p) == 0;
            if (!divisible) continue;
            for (int i = 0; i < rs.rank; ++i) {
                if (gamma(i) > -2 * p - mu(i)) continue;
                ScanViolation v;
                v.gamma = gamma;
                v.simple = i;
                v.mu = mu;
                v.sigma0 = rs.zero();
                v.sigma1 = sum / p;
                v.reflected = simple_dot_reflect(rs, i, v.sigma1);
                v.target = st + mu;
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

LinkedMinimum min_linked_pairing(const RootSystem& rs, Int p)
{
    const Weight& a0 = rs.coroots[static_cast<std::size_t>(rs.alpha0_index)];
    const Int limit = 4 * rs.coxeter_number;
    std::optional<LinkedMinimum> best;
    Weight w = Weight::Zero(rs.rank);
    for (;;) {
        const Int pr = a0.dot(w);
        if (pr <= limit && !w.isZero() && in_dot_orbit(rs, p, w, rs.zero()) && (!best || pr < best->pairing))
            best = LinkedMinimum{pr, w};
        int i = rs.rank - 1;
        for (; i >= 0; --i) {
            ++w(i);
            if (a0.dot(w) <= limit) break;
            w(i) = 0;
        }
        if (i < 0) break;
    }
    if (!best) throw Error(ErrorCode::SearchExhausted, "no nonzero dominant weight linked to 0 with pairing <= 4h");
    return *best;
}

LinkageReport a3p5_linkage_check()
{
    const RootSystem& rs = root_system(Kind::A3);
    const Int p = 5;
    const Weight a0 = rs.highest_short_root;
    const Weight& a0v = rs.coroots[static_cast<std::size_t>(rs.alpha0_index)];
    const Weight base = (p - 1) * rs.rho();
    const Weight top = 2 * base - a0;
    LinkageReport rep;
    rep.exceptional = base - a0;
    rep.bound = p * (rs.coxeter_number - 2);
    for (const Weight& y : linked_below(rs, p, top, base)) {
        Weight lambda = y - base;
        if (!is_dominant(lambda)) continue;
        const Int pr = a0v.dot(lambda);
        rep.linked.emplace_back(lambda, pr);
        if (!same(lambda, rep.exceptional) && pr >= rep.bound)
            throw Error(ErrorCode::CounterexampleFound, to_string(lambda) + " has pairing " + std::to_string(pr));
    }
    return rep;
}

IsogenyReport g2p3_isogeny_checks(const SimpleCharacters& simples)
{
    const RootSystem& rs = simples.rs();
    if (rs.kind != Kind::G2 || simples.table().p != 3) throw Error(ErrorCode::WrongSystem, "isogeny checks need G2, p = 3");
    IsogenyReport rep;
    for (Int a = 0; a <= 2; ++a)
        for (Int b = 0; b <= 2; ++b) {
            Character lhs = simples.character(make_weight({a, b}));
            Character rhs = tensor(simples.character(make_weight({a, 0})), g2_half_twist(rs, simples.character(make_weight({b, 0}))));
            if (!(lhs == rhs))
                throw Error(ErrorCode::CharacterMismatch, "ch L" + to_string(make_weight({a, b})) + " does not factor");
            rep.factorizations.emplace_back(make_weight({a, b}), lhs.dim());
        }
    for (Int a = 0; a <= 2; ++a) {
        Weight w = make_weight({a, 0});
        if (!(simples.character(w) == weyl_character(rs, w)))
            throw Error(ErrorCode::CharacterMismatch, "L" + to_string(w) + " differs from nabla" + to_string(w));
        rep.weyl_simple.push_back(w);
    }
    rep.steinberg_dim = simples.character(make_weight({2, 2})).dim();
    if (rep.steinberg_dim != 729) throw Error(ErrorCode::CharacterMismatch, "dim L(2,2) is not 729");
    return rep;
}

Sigma1Classification g2p7_sigma1_classification(const std::vector<RadicalTable>& tables, const SimpleCharacters& simples)
{
    const RootSystem& rs = root_system(Kind::G2);
    std::set<Weight, WeightLess> seen;
    for (const RadicalTable& t : tables)
        for (const RadicalEntry& e : t.entries) seen.insert(e.sigma1 + rs.rho());
    Sigma1Classification c;
    c.occurring.assign(seen.begin(), seen.end());
    for (const Weight& s : c.occurring) {
        decided(rs, s, 2);
        if (r1_nonvanishing_possible(rs, s)) {
            CohomologyResult r = decided(rs, s, 1);
            c.r1_candidates.emplace_back(s, r);
            if (!r.is_zero()) c.r1_nonzero.push_back(s);
        }
        if (is_dominant(s)) {
            WeylBasis b;
            add_term(b, s, 1);
            if (decompose_weyl(b, simples).size() > 1) c.nabla_nonsimple.push_back(s);
        }
    }
    return c;
}

std::vector<HatPair> g2p7_hat_table(const std::vector<RadicalTable>& tables)
{
    const RootSystem& rs = root_system(Kind::G2);
    const Int p = 7;
    std::vector<HatPair> out;
    for (const RadicalTable& t : tables) {
        // w0 = -1, so hat is invertible on X_1 by lambda = 2(p-1) rho - hat.
        Weight lambda = 2 * (p - 1) * rs.rho() - t.shifted_base();
        if (!is_restricted(lambda, p))
            throw Error(ErrorCode::NotRestricted, "alcove " + std::to_string(t.alcove) + ": " + to_string(t.shifted_base()) +
                                                      " is not the hat of a restricted weight");
        if (!same(hat(rs, p, 1, lambda), t.shifted_base()))
            throw Error(ErrorCode::OracleMismatch, "hat" + to_string(lambda) + " differs from " + to_string(t.shifted_base()));
        out.push_back({t.alcove, lambda, t.shifted_base()});
    }
    std::sort(out.begin(), out.end(), [](const HatPair& a, const HatPair& b) { return a.alcove < b.alcove; });
    return out;
}

std::string resolution_name(Resolution r)
{
    switch (r) {
    case Resolution::HigherLayer: return "HigherLayer";
    case Resolution::SameLayerChainAbsent: return "SameLayerChainAbsent";
    case Resolution::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

struct CasePattern {
    int id;
    Weight sigma1, tilde;
    std::vector<Weight> chain; // weights whose absence closes the same-layer case
};

const std::vector<CasePattern>& case_patterns()
{
    static const std::vector<CasePattern> patterns = {
        {1, make_weight({2, 0}), make_weight({3, -2}), {}},
        {2, make_weight({2, 0}), make_weight({-2, 1}), {make_weight({-5, 3})}},
        {3, make_weight({1, 1}), make_weight({-4, 3}), {make_weight({-7, 5}), make_weight({-5, 4}), make_weight({-3, 3})}},
        {4, make_weight({1, 1}), make_weight({5, -2}), {make_weight({7, -3})}},
    };
    return patterns;
}

} // namespace

std::vector<CaseFinding> g2p7_case_analysis(const std::vector<RadicalTable>& tables, const SimpleCharacters& simples)
{
    const RootSystem& rs = root_system(Kind::G2);
    Sigma1Classification cls = g2p7_sigma1_classification(tables, simples);

    // Proper composition factors of the nonsimple nabla(sigma1).
    std::map<Weight, std::vector<Weight>, WeightLess> proper;
    for (const Weight& s : cls.nabla_nonsimple) {
        WeylBasis b;
        add_term(b, s, 1);
        for (const auto& [mu, m] : decompose_weyl(b, simples))
            if (!same(mu, s)) proper[s].push_back(mu);
    }
    std::map<Weight, Weight, WeightLess> r1;
    for (const auto& [s, r] : cls.r1_candidates)
        if (r.value == CohomologyResult::Value::Costandard) r1.emplace(s, r.weight);

    std::vector<const RadicalTable*> order;
    for (const RadicalTable& t : tables) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->alcove < b->alcove; });

    std::vector<CaseFinding> out;
    for (const RadicalTable* t : order) {
        std::map<Weight, std::vector<std::pair<Weight, int>>, WeightLess> component;
        for (const RadicalEntry& e : t->entries) component[e.sigma0].emplace_back(e.sigma1 + rs.rho(), e.layer);
        for (const auto& [s0, entries] : component) {
            auto present = [&](const Weight& w) {
                return std::any_of(entries.begin(), entries.end(), [&](const auto& x) { return same(x.first, w); });
            };
            for (const auto& [s1, l1] : entries) {
                auto pit = proper.find(s1);
                if (pit == proper.end()) continue;
                for (const auto& [st, lt] : entries) {
                    auto rit = r1.find(st);
                    if (rit == r1.end()) continue;
                    const auto& factors = pit->second;
                    if (std::none_of(factors.begin(), factors.end(), [&](const Weight& b) { return same(b, rit->second); }))
                        continue;
                    const CasePattern* pat = nullptr;
                    for (const CasePattern& c : case_patterns())
                        if (same(c.sigma1, s1) && same(c.tilde, st)) pat = &c;
                    const std::string where = "alcove " + std::to_string(t->alcove) + ", sigma0 " + to_string(s0) + ": " +
                                              to_string(s1) + " with " + to_string(st);
                    if (!pat) throw Error(ErrorCode::UnresolvedCase, where + " matches no known pattern");
                    CaseFinding f;
                    f.case_id = pat->id;
                    f.alcove = t->alcove;
                    f.sigma0 = s0;
                    f.sigma1 = s1;
                    f.sigma1_tilde = st;
                    f.layer_sigma1 = l1;
                    f.layer_tilde = lt;
                    if (lt < l1) {
                        f.resolution = Resolution::HigherLayer;
                    } else if (lt == l1 && !pat->chain.empty()) {
                        for (const Weight& c : pat->chain) {
                            if (present(c)) throw Error(ErrorCode::UnresolvedCase, where + ": chain weight " + to_string(c) + " occurs");
                            f.chain_checked.push_back(c);
                        }
                        f.resolution = Resolution::SameLayerChainAbsent;
                    } else {
                        f.resolution = Resolution::Unresolved;
                    }
                    out.push_back(std::move(f));
                }
            }
        }
    }
    return out;
}

Character residual_character(const RootSystem& rs, Int p, const Weight& lambda, const SimpleCharacters& simples)
{
    Character r = weyl_character(rs, hat(rs, p, 1, lambda)) - simples.character(lambda);
    for (const auto& [w, m] : r)
        if (m < 0)
            throw Error(ErrorCode::NegativityDetected, "ch nabla(hat " + to_string(lambda) + ") - ch L" + to_string(lambda) +
                                                           " is negative at " + to_string(w));
    return r;
}

std::string verdict_name(FiltrationVerdict v)
{
    switch (v) {
    case FiltrationVerdict::CondA: return "CondA";
    case FiltrationVerdict::CondB: return "CondB";
    case FiltrationVerdict::CondCCandidate: return "CondC_candidate";
    case FiltrationVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

FiltrationVerdict filtration_condition_check(const RootSystem& rs, const std::vector<FiltrationFactor>& factors,
                                             const SimpleCharacters* simples)
{
    std::vector<CohomologyResult> r1;
    bool cond_a = true;
    for (const FiltrationFactor& f : factors) {
        r1.push_back(decided(rs, f.sigma, 1));
        cond_a = cond_a && r1.back().is_zero();
    }
    if (cond_a) return FiltrationVerdict::CondA;

    // Composition factors of nabla(sigma); nullopt when the data cannot say.
    std::map<Weight, std::optional<Multiset>, WeightLess> factors_of;
    auto nabla_factors = [&](const Weight& s) -> const std::optional<Multiset>& {
        auto it = factors_of.find(s);
        if (it != factors_of.end()) return it->second;
        std::optional<Multiset> m;
        if (!is_dominant(s)) {
            m = Multiset{};
        } else if (simples) {
            try {
                WeylBasis b;
                add_term(b, s, 1);
                m = decompose_weyl(b, *simples);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::MissingKey) throw;
            }
        }
        return factors_of.emplace(s, std::move(m)).first->second;
    };

    bool cond_b = true, cond_c = true;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        if (r1[j].is_zero()) continue;
        const Weight& b = r1[j].weight;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i == j || factors[i].layer > factors[j].layer || !same(factors[i].mu, factors[j].mu)) continue;
            const Weight& s = factors[i].sigma;
            const auto& m = nabla_factors(s);
            bool possible = !m || multiplicity(*m, b) > 0;
            if (!possible) continue;
            cond_b = false;
            // End(nabla(b)) = k, so a nonzero map nabla(b) -> nabla(b) is an isomorphism.
            if (!(m && same(s, b))) cond_c = false;
        }
    }
    if (cond_b) return FiltrationVerdict::CondB;
    for (const FiltrationFactor& f : factors)
        if (!decided(rs, f.sigma, 2).is_zero()) cond_c = false;
    return cond_c ? FiltrationVerdict::CondCCandidate : FiltrationVerdict::Inconclusive;
}

FiltrationVerdict filtration_condition_check(const RootSystem& rs, const std::vector<std::pair<Weight, Weight>>& series,
                                             const SimpleCharacters* simples)
{
    std::vector<FiltrationFactor> f;
    const int n = static_cast<int>(series.size());
    for (int k = 0; k < n; ++k) f.push_back({series[static_cast<std::size_t>(k)].first, series[static_cast<std::size_t>(k)].second, n - k});
    return filtration_condition_check(rs, f, simples);
}

std::vector<FiltrationFactor> radical_factors(const RadicalTable& t)
{
    std::vector<FiltrationFactor> out;
    for (const RadicalEntry& e : t.entries)
        for (Int k = 0; k < e.mult; ++k) out.push_back({e.sigma0, e.sigma1 + Weight::Ones(2), e.layer});
    return out;
}

std::vector<FiltrationFactor> steinberg_factors(const RootSystem& rs, Int p, const Weight& mu, const SimpleCharacters& simples)
{
    std::vector<FiltrationFactor> out;
    for (const G1TFactor& f : g1t_factors(rs, p, (p - 1) * rs.rho() + mu, simples)) out.push_back({f.sigma0, f.sigma1, 0});
    return out;
}

} // namespace tmcv
