#include "tmcv/report.hpp"

#include "tmcv/tmc.hpp"

#include <functional>
#include <set>
#include <sstream>

namespace tmcv {

std::string status_name(Status s)
{
    switch (s) {
    case Status::Verified: return "Verified";
    case Status::DataValidated: return "DataValidated";
    case Status::OutOfScope: return "OutOfScope";
    case Status::Failed: return "Failed";
    }
    return "?";
}

int Report::exit_status() const
{
    for (const ReportSection& s : sections)
        if (s.status == Status::Failed) return 1;
    return 0;
}

bool is_prime(Int p)
{
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

using Lines = std::vector<std::string>;

std::string multiset_string(const Multiset& m)
{
    std::string s;
    for (const auto& [w, k] : m) {
        if (!s.empty()) s += " ";
        s += to_string(w);
        if (k != 1) s += "x" + std::to_string(k);
    }
    return s.empty() ? "(none)" : s;
}

std::string weights_string(const std::vector<Weight>& ws)
{
    std::string s;
    for (const Weight& w : ws) s += (s.empty() ? "" : " ") + to_string(w);
    return s.empty() ? "(none)" : s;
}

std::vector<Weight> restricted(const RootSystem& rs, Int p)
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
    return out;
}

const Weight& alpha0_coroot(const RootSystem& rs) { return rs.coroots[static_cast<std::size_t>(rs.alpha0_index)]; }

// Dominant eta with p eta <= target, walking coordinates under a height cap.
std::vector<Weight> scaled_below(const RootSystem& rs, Int p, const Weight& target)
{
    std::vector<Weight> out;
    const Int cap = rs.scaled_height(target);
    Weight w = Weight::Zero(rs.rank);
    for (;;) {
        if (dominance_leq(rs, p * w, target)) out.push_back(w);
        int i = rs.rank - 1;
        for (; i >= 0; --i) {
            ++w(i);
            if (rs.scaled_height(p * w) <= cap) break;
            w(i) = 0;
        }
        if (i < 0) break;
    }
    return out;
}

bool nabla_simple(const DecompositionTable& t, const Weight& w) { return t.row(w).size() == 1; }

class Builder {
public:
    Builder(const DatasetBundle& bundle, Kind k, Int p) : bundle_(bundle), rs_(root_system(k)), p_(p)
    {
        report_.kind = k;
        report_.p = p;
    }

    Report run();

private:
    // Runs body; an exception turns the section into a failure carrying the message.
    void section(const std::string& title, Status ok, const std::function<void(Lines&)>& body)
    {
        report_.sections.push_back({title, ok, {}});
        ReportSection& s = report_.sections.back();
        try {
            body(s.evidence);
        } catch (const Error& e) {
            s.status = Status::Failed;
            s.evidence.push_back(e.what());
        }
    }
    void fail(Lines& out, const std::string& what)
    {
        out.push_back("FAILED: " + what);
        report_.sections.back().status = Status::Failed;
    }
    void out_of_scope(const std::string& title, Lines lines) { report_.sections.push_back({title, Status::OutOfScope, std::move(lines)}); }

    const DecompositionTable& table() const { return bundle_.decomposition(rs_.kind, p_).table; }
    const SimpleCharacters& simples() const { return bundle_.simples(rs_.kind, p_); }

    void gap_bound(const ExtGapDatum& d, Status status);
    void steinberg_bounds();
    std::vector<ScanViolation> scan();
    void cond_a_for_all();
    void residuals();

    void generic();
    void a3p3();
    void a3p5();
    void b2p5();
    void g2p3();
    void g2p7();
    const ExtGapDatum& bundled_gap();

    const DatasetBundle& bundle_;
    const RootSystem& rs_;
    Int p_;
    Report report_;
};

void Builder::gap_bound(const ExtGapDatum& d, Status status)
{
    section("Ext gap bound", status, [&](Lines& out) {
        const Int h = rs_.coxeter_number;
        out.push_back("h = " + std::to_string(h) + ", d = " + std::to_string(d.d) + " (" + d.provenance + ")");
        if (d.witness) out.push_back("smallest eta with Ext^1_G(k, L(eta)) != 0: " + to_string(*d.witness));
        const Int lhs = d.p * d.d, rhs = 2 * (d.p - 1) * (h - 1);
        out.push_back("p d = " + std::to_string(lhs) + ", 2(p-1)(h-1) = " + std::to_string(rhs));
        if (!jantzen_bound_check(d)) fail(out, "p d > 2(p-1)(h-1) does not hold");
        else out.push_back("St_1 (x) L(lambda) is injective and projective in the truncated category for all restricted lambda");
    });
}

void Builder::steinberg_bounds()
{
    section("Weights of St_1", Status::Verified, [&](Lines& out) {
        const Character& st = weyl_character_cached(rs_, (p_ - 1) * rs_.rho());
        out.push_back("dim St_1 = " + std::to_string(st.dim()));
        for (int i = 0; i < rs_.rank; ++i) {
            Int lo = 0;
            for (const auto& [g, m] : st) lo = std::min(lo, g(i));
            out.push_back("min <gamma, alpha_" + std::to_string(i + 1) + "^vee> = " + std::to_string(lo) + " (scan threshold -2p = " +
                          std::to_string(-2 * p_) + ")");
        }
    });
}

std::vector<ScanViolation> Builder::scan()
{
    std::vector<ScanViolation> rows;
    section("Steinberg weight scan", Status::Verified, [&](Lines& out) {
        rows = steinberg_weight_scan(rs_, p_);
        if (p_ >= rs_.coxeter_number) {
            std::vector<Weight> block;
            for (const Weight& mu : restricted(rs_, p_))
                if (in_dot_orbit(rs_, p_, (p_ - 1) * rs_.rho() + mu, rs_.zero())) block.push_back(mu);
            out.push_back("restricted mu with (p-1)rho + mu in the principal block: " + weights_string(block));
        }
        out.push_back(std::to_string(rows.size()) + " pairs (gamma, mu) with gamma + mu in pX and <gamma, alpha_i^vee> <= -2p - <mu, alpha_i^vee>");
        if (!rows.empty()) out.push_back("gamma | i | mu | sigma1 | s_i . sigma1 | (p-1)rho + mu");
        for (const ScanViolation& v : rows)
            out.push_back(to_string(v.gamma) + " | " + std::to_string(v.simple + 1) + " | " + to_string(v.mu) + " | " + to_string(v.sigma1) +
                          " | " + to_string(v.reflected) + " | " + to_string(v.target));
        if (rows.empty()) out.push_back("R^1 ind sigma1 = 0 for every G_1B factor L(sigma0) (x) p sigma1");
    });
    return rows;
}

void Builder::cond_a_for_all()
{
    section("Filtration conditions", Status::DataValidated, [&](Lines& out) {
        std::size_t n = 0;
        for (const Weight& mu : restricted(rs_, p_)) {
            auto factors = steinberg_factors(rs_, p_, mu, simples());
            FiltrationVerdict v = filtration_condition_check(rs_, factors, &simples());
            if (v != FiltrationVerdict::CondA)
                fail(out, "nabla" + to_string((p_ - 1) * rs_.rho() + mu) + ": " + verdict_name(v));
            n += factors.size();
        }
        out.push_back("condition (a) holds for nabla((p-1)rho + mu), all " + std::to_string(restricted(rs_, p_).size()) +
                      " restricted mu (" + std::to_string(n) + " G_1T factors)");
    });
}

void Builder::residuals()
{
    section("Residual characters", Status::DataValidated, [&](Lines& out) {
        Int total = 0;
        for (const Weight& l : restricted(rs_, p_)) total += residual_character(rs_, p_, l, simples()).dim();
        out.push_back("ch nabla(hat lambda) - ch L(lambda) is nonnegative for all restricted lambda; total dimension " +
                      std::to_string(total));
    });
}

const ExtGapDatum& Builder::bundled_gap()
{
    for (const ExtGapDatum& d : bundle_.ext_gap())
        if (d.kind == rs_.kind && d.p == p_) return d;
    throw Error(ErrorCode::MissingData, "no Ext gap datum for " + kind_name(rs_.kind) + " p=" + std::to_string(p_));
}

void Builder::generic()
{
    report_.criterion = "general Ext gap bound, p >= 2h - 2";
    gap_bound(generic_ext_gap(rs_, p_), Status::Verified);
}

void Builder::a3p3()
{
    report_.criterion = "Steinberg weight scan, then the Jantzen filtration of Delta(2,3,3)";
    steinberg_bounds();
    auto rows = scan();
    const DecompositionTable& t = table();
    section("Scan rows: possible cancellation", Status::DataValidated, [&](Lines& out) {
        for (const ScanViolation& v : rows) {
            std::string head = to_string(v.gamma) + " -> " + to_string(v.reflected) + " in " + to_string(v.target) + ": ";
            if (same(v.target, (p_ - 1) * rs_.rho())) {
                if (!nabla_simple(t, v.target)) fail(out, head + "St_1 is not simple");
                out.push_back(head + "nabla" + to_string(v.target) + " = St_1 is simple");
                continue;
            }
            if (!nabla_simple(t, v.reflected)) fail(out, head + "nabla" + to_string(v.reflected) + " is not simple");
            std::vector<Weight> concern;
            for (const Weight& eta : scaled_below(rs_, p_, v.target)) {
                if (same(eta, v.reflected) || !dominance_leq(rs_, v.reflected, eta)) continue;
                if (!nabla_simple(t, eta) && multiplicity(t.row(eta), v.reflected) > 0) concern.push_back(eta);
            }
            out.push_back(head + "nabla" + to_string(v.reflected) + " simple; eta with p eta <= target and [nabla(eta):L" +
                          to_string(v.reflected) + "] != 0 and nabla(eta) not simple: " + weights_string(concern));
        }
    });

    const Weight top = make_weight({2, 3, 3});
    const Weight w330 = make_weight({3, 3, 0});
    section("Composition factors of Delta(2,3,3)", Status::DataValidated, [&](Lines& out) {
        const Multiset& row = t.row(top);
        Int total = 0;
        for (const auto& [w, m] : row) total += m;
        out.push_back(std::to_string(row.size()) + " distinct factors, " + std::to_string(total) + " with multiplicity: " + multiset_string(row));
        std::vector<Weight> twisted, above;
        for (const auto& [w, m] : row) {
            auto [w0, w1] = restricted_split(w, p_);
            if (!nabla_simple(t, w1)) twisted.push_back(w);
            if (!same(w, w330) && dominance_leq(rs_, w330, w)) above.push_back(w);
        }
        out.push_back("factors L(mu0) (x) L(mu1)^[1] with L(mu1) != Delta(mu1): " + weights_string(twisted));
        out.push_back("factors strictly above (3,3,0): " + weights_string(above));
    });
    section("Jantzen sum formula of Delta(2,3,3)", Status::DataValidated, [&](Lines& out) {
        Multiset sf = decompose_weyl(jantzen_sum_weyl(rs_, p_, top), simples());
        out.push_back("SF = " + multiset_string(sf));
        for (const Weight& w : {make_weight({3, 1, 4}), make_weight({2, 4, 1}), w330})
            out.push_back("L" + to_string(w) + " occurs " + std::to_string(multiplicity(sf, w)) + " times in SF, " +
                          std::to_string(multiplicity(t.row(top), w)) + " times in Delta(2,3,3)");
        for (const Weight& w : {make_weight({3, 1, 4}), make_weight({2, 4, 1})})
            out.push_back("[Delta" + to_string(w) + " : L(3,3,0)] = " + std::to_string(multiplicity(t.row(w), w330)));
        out.push_back("so L(3,3,0) lies in V^2 and L(3,1,4), L(2,4,1) do not: a map Delta(3,3,0) -> Delta(2,3,3) exists");
    });
    section("Composition factors of Delta(3,3,0)", Status::DataValidated, [&](Lines& out) {
        const Multiset& row = t.row(w330);
        out.push_back(multiset_string(row));
        out.push_back("L(5,0,0) occurs: " + std::string(multiplicity(row, make_weight({5, 0, 0})) ? "yes" : "no"));
        out.push_back("Delta(1,1,0) = " + multiset_string(t.row(make_weight({1, 1, 0}))) + "; Delta(0,1,1) = " +
                      multiset_string(t.row(make_weight({0, 1, 1}))));
    });
    section("G_1 extensions", Status::DataValidated, [&](Lines& out) {
        const ExtTable& ext = bundle_.a3p3_ext_table();
        for (const ExtTableRow& r : ext.rows)
            out.push_back("Ext^1_{G_1}(k, L" + to_string(r.mu0) + ")^[-1] = L" + to_string(r.ext1));
        for (const auto& [w, m] : t.row(w330)) {
            if (same(w, w330) || same(w, make_weight({0, 0, 3}))) continue;
            auto [w0, w1] = restricted_split(w, p_);
            for (const ExtTableRow& r : ext.rows)
                if (same(r.mu0, w0))
                    out.push_back("to rule out: L" + to_string(w) + ", Ext^1_G(L(3,3,0), -) = Hom_G(L(1,1,0), L" + to_string(r.ext1) +
                                  " (x) L" + to_string(w1) + ")");
        }
    });
    out_of_scope("Module structure of Delta(2,3,3)",
                 {"the radical layer of Delta(3,3,0), the image S and cokernel Q, and the tilting structure of "
                  "L(1,0,0) (x) L(0,1,0) are argued on modules, not characters; not mechanized"});
    residuals();
}

void Builder::a3p5()
{
    report_.criterion = "p = 2h - 3: weights outside the lowest alcove, then T(2(p-1)rho - alpha_0)";
    const Int h = rs_.coxeter_number;
    const Weight& a0v = alpha0_coroot(rs_);
    section("Weights outside the lowest alcove", Status::Verified, [&](Lines& out) {
        std::size_t n = 0;
        for (const Weight& mu : restricted(rs_, p_)) {
            if (a0v.dot(mu + rs_.rho()) <= p_) continue;
            // <(p-1)rho + w0 mu, alpha_0^vee> with -w0 mu the dominant conjugate of -mu.
            Int v = (p_ - 1) * a0v.dot(rs_.rho()) - a0v.dot(dominant_conjugate(rs_, -mu));
            if (v >= p_ * (h - 2)) fail(out, to_string(mu) + ": pairing " + std::to_string(v));
            ++n;
        }
        out.push_back(std::to_string(n) + " restricted mu off the closed lowest alcove, each with <(p-1)rho + w0 mu, alpha_0^vee> < p(h-2) = " +
                      std::to_string(p_ * (h - 2)));
    });
    section("Smallest linked pairing", Status::Verified, [&](Lines& out) {
        LinkedMinimum m = min_linked_pairing(rs_, p_);
        out.push_back("min <mu, alpha_0^vee> over nonzero dominant mu in W_p . 0 is " + std::to_string(m.pairing) + " at " +
                      to_string(m.witness) + "; 2(h-2) = " + std::to_string(2 * (h - 2)));
        if (m.pairing != 2 * (h - 2)) fail(out, "minimum differs from 2(h-2)");
    });
    section("Weights linked below 2(p-1)rho - alpha_0", Status::Verified, [&](Lines& out) {
        LinkageReport r = a3p5_linkage_check();
        out.push_back(std::to_string(r.linked.size()) + " dominant lambda with (p-1)rho + lambda linked below; all but " +
                      to_string(r.exceptional) + " have pairing < " + std::to_string(r.bound));
        for (const auto& [l, pr] : r.linked) out.push_back(to_string(l) + " pairing " + std::to_string(pr));
    });
    out_of_scope("Lowest alcove", {"weights in the closed lowest alcove follow by translation; translation functors are not implemented"});
    residuals();
}

void Builder::b2p5()
{
    report_.criterion = "Steinberg weight scan on the principal block";
    steinberg_bounds();
    auto rows = scan();
    section("No cancellation", Status::Verified, [&](Lines& out) {
        std::set<Weight, WeightLess> targets;
        for (const ScanViolation& v : rows) targets.insert(v.reflected);
        for (const Weight& b : targets) {
            // Smallest dominant weight above b in the same dot orbit.
            std::optional<Weight> best;
            for (const Weight& s : dominant_weights_below(rs_, b + 4 * p_ * rs_.rho())) {
                if (same(s, b) || !dominance_leq(rs_, b, s) || !in_dot_orbit(rs_, p_, s, b)) continue;
                if (!best || rs_.scaled_height(s) < rs_.scaled_height(*best)) best = s;
            }
            out.push_back("smallest dominant weight linked to " + to_string(b) + " above it: " + (best ? to_string(*best) : "none"));
        }
        for (const ScanViolation& v : rows) {
            std::vector<Weight> bad;
            for (const Weight& s : scaled_below(rs_, p_, v.target)) {
                if (same(s, v.reflected) || !dominance_leq(rs_, v.reflected, s)) continue;
                if (in_dot_orbit(rs_, p_, s, v.reflected)) bad.push_back(s);
            }
            if (!bad.empty()) fail(out, to_string(v.target) + ": linked weights " + weights_string(bad));
            else out.push_back(to_string(v.target) + ": no sigma linked to " + to_string(v.reflected) + " with p sigma <= " + to_string(v.target));
        }
    });
    residuals();
}

void Builder::g2p3()
{
    report_.criterion = "exceptional isogeny: G_{1/2} projectives lift";
    section("Isogeny factorisation", Status::DataValidated, [&](Lines& out) {
        IsogenyReport r = g2p3_isogeny_checks(simples());
        for (const auto& [w, d] : r.factorizations)
            out.push_back("ch L" + to_string(w) + " = ch L(" + std::to_string(w(0)) + ",0) * half_twist ch L(" + std::to_string(w(1)) +
                          ",0), dim " + std::to_string(d));
        out.push_back("L = nabla for " + weights_string(r.weyl_simple) + "; dim St_1 = " + std::to_string(r.steinberg_dim));
    });
    section("Truncated category Mod((4,0))", Status::DataValidated, [&](Lines& out) {
        const ExtGapDatum& d = bundled_gap();
        const Weight& a0v = alpha0_coroot(rs_);
        out.push_back("d = " + std::to_string(d.d) + (d.witness ? " at " + to_string(*d.witness) : std::string()) + " (" + d.provenance + ")");
        Int worst = 0;
        for (Int a = 0; a <= 2; ++a) worst = std::max(worst, a0v.dot(make_weight({a + 2, 0})));
        out.push_back("p d = " + std::to_string(p_ * d.d) + " > " + std::to_string(worst) + " = max <lambda + (2,0), alpha_0^vee>");
        if (p_ * d.d <= worst) fail(out, "bound does not hold");
    });
    out_of_scope("Lifting", {"the identification Qhat_1(a,b) = T(4-a,4-b) uses G_{1/2}T-module arguments; not mechanized"});
    residuals();
}

void Builder::g2p7()
{
    report_.criterion = "G_1T-radical series of baby Verma modules";
    const auto& tables = bundle_.radical_tables();
    section("Radical tables", Status::DataValidated, [&](Lines& out) {
        for (const RadicalTable& t : tables) {
            OracleStats s = validate_table(t, simples());
            out.push_back("alcove " + std::to_string(t.alcove) + ", base " + to_string(t.base) + ": " + std::to_string(t.entries.size()) +
                          " entries, " + std::to_string(s.weights) + " weights, dimension " + std::to_string(s.dimension) + " matches Zhat'");
        }
    });
    section("Hat weights", Status::DataValidated, [&](Lines& out) {
        for (const HatPair& h : g2p7_hat_table(tables))
            out.push_back("alcove " + std::to_string(h.alcove) + ": lambda " + to_string(h.lambda) + ", hat " + to_string(h.hat));
    });
    section("Inverse KL polynomials over the box of -rho", Status::DataValidated, [&](Lines& out) {
        const AlcoveLabelFile& f = bundle_.alcove_labels();
        for (const AlcoveRow& r : f.rows) {
            std::string layers;
            for (const auto& [j, m] : r.layers) layers += " (j=" + std::to_string(j) + ", " + std::to_string(m) + ")";
            out.push_back(std::to_string(r.label) + ": lambda " + to_string(r.lambda) + ", Q = " + r.q + ", d = " + std::to_string(r.d) +
                          ", layers" + layers);
        }
    });
    section("sigma1 classification", Status::DataValidated, [&](Lines& out) {
        Sigma1Classification c = g2p7_sigma1_classification(tables, simples());
        out.push_back(std::to_string(c.occurring.size()) + " distinct sigma1");
        for (const auto& [s, r] : c.r1_candidates) out.push_back("R^1 ind " + to_string(s) + " = " + r.describe());
        out.push_back("nabla(sigma1) not simple: " + weights_string(c.nabla_nonsimple));
    });
    section("Case analysis", Status::DataValidated, [&](Lines& out) {
        auto findings = g2p7_case_analysis(tables, simples());
        std::map<int, std::set<int>> where;
        for (const CaseFinding& f : findings) {
            where[f.case_id].insert(f.alcove);
            std::string chain;
            for (const Weight& c : f.chain_checked) chain += " " + to_string(c);
            out.push_back("case " + std::to_string(f.case_id) + ", alcove " + std::to_string(f.alcove) + ", sigma0 " + to_string(f.sigma0) +
                          ": " + to_string(f.sigma1) + " layer " + std::to_string(f.layer_sigma1) + ", " + to_string(f.sigma1_tilde) +
                          " layer " + std::to_string(f.layer_tilde) + ", " + resolution_name(f.resolution) +
                          (chain.empty() ? "" : ", absent:" + chain));
            if (f.resolution == Resolution::Unresolved) fail(out, "unresolved finding");
        }
        for (const auto& [c, as] : where) {
            std::string s;
            for (int a : as) s += " " + std::to_string(a);
            out.push_back("case " + std::to_string(c) + " alcoves:" + s);
        }
    });
    section("Filtration conditions", Status::DataValidated, [&](Lines& out) {
        for (const RadicalTable& t : tables) {
            FiltrationVerdict v = filtration_condition_check(rs_, radical_factors(t), &simples());
            out.push_back("alcove " + std::to_string(t.alcove) + ": " + verdict_name(v));
        }
        out.push_back("Inconclusive marks the alcoves with case findings; see the case analysis");
    });
    out_of_scope("Same-layer findings", {"for findings in a common radical layer, the absence of chain weights is checked; the "
                                         "extension arguments that finish these cases are not mechanized"});
    residuals();
}

Report Builder::run()
{
    const Int h = rs_.coxeter_number;
    if (p_ >= 2 * h - 2) {
        generic();
        return report_;
    }
    switch (rs_.kind) {
    case Kind::A2:
    case Kind::A3:
        if (rs_.kind == Kind::A3 && p_ == 3) {
            a3p3();
            break;
        }
        if (rs_.kind == Kind::A3 && p_ == 5) {
            a3p5();
            break;
        }
        [[fallthrough]];
    case Kind::B2:
        if (rs_.kind == Kind::B2 && p_ == 3) {
            report_.criterion = "Ext gap bound from the bundled d";
            gap_bound(bundled_gap(), Status::DataValidated);
            residuals();
            break;
        }
        if (rs_.kind == Kind::B2 && p_ == 5) {
            b2p5();
            break;
        }
        report_.criterion = "Steinberg weight scan: condition (a) everywhere";
        steinberg_bounds();
        scan();
        cond_a_for_all();
        residuals();
        break;
    case Kind::G2:
        if (p_ == 2) {
            report_.criterion = "none: the conjecture is known to fail";
            out_of_scope("G2, p = 2", {"the tilting module conjecture fails for G2 at p = 2; nothing is checked"});
        } else if (p_ == 3) {
            g2p3();
        } else if (p_ == 5) {
            report_.criterion = "Ext gap bound from the bundled d";
            gap_bound(bundled_gap(), Status::DataValidated);
        } else {
            g2p7();
        }
        break;
    case Kind::A1: generic(); break;
    }
    return report_;
}

} // namespace

Report build_report(const DatasetBundle& bundle, Kind k, Int p)
{
    if (!is_prime(p)) throw Error(ErrorCode::UnsupportedCase, std::to_string(p) + " is not prime");
    return Builder(bundle, k, p).run();
}

std::string render_text(const Report& r)
{
    std::ostringstream os;
    os << kind_name(r.kind) << ", p = " << r.p << "\n";
    os << "criterion: " << r.criterion << "\n";
    for (const ReportSection& s : r.sections) {
        os << "\n[" << status_name(s.status) << "] " << s.title << "\n";
        for (const std::string& e : s.evidence) os << "  " << e << "\n";
    }
    os << "\n" << (r.exit_status() == 0 ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

Json to_json(const Report& r)
{
    Json j;
    j["schema"] = kReportSchema;
    j["system"] = kind_name(r.kind);
    j["prime"] = r.p;
    j["criterion"] = r.criterion;
    j["exit_status"] = r.exit_status();
    Json secs = Json::array();
    for (const ReportSection& s : r.sections) secs.push_back({{"title", s.title}, {"status", status_name(s.status)}, {"evidence", s.evidence}});
    j["sections"] = secs;
    return j;
}

Report report_from_json(const Json& j)
{
    if (!j.is_object() || j.value("schema", "") != kReportSchema) throw Error(ErrorCode::SchemaError, "report: wrong schema");
    try {
        Report r;
        r.kind = parse_kind(j.at("system").get<std::string>());
        r.p = j.at("prime").get<Int>();
        r.criterion = j.at("criterion").get<std::string>();
        for (const Json& s : j.at("sections")) {
            ReportSection sec;
            sec.title = s.at("title").get<std::string>();
            const std::string st = s.at("status").get<std::string>();
            bool found = false;
            for (Status c : {Status::Verified, Status::DataValidated, Status::OutOfScope, Status::Failed})
                if (status_name(c) == st) sec.status = c, found = true;
            if (!found) throw Error(ErrorCode::SchemaError, "report: unknown status " + st);
            sec.evidence = s.at("evidence").get<std::vector<std::string>>();
            r.sections.push_back(std::move(sec));
        }
        if (j.at("exit_status").get<int>() != r.exit_status()) throw Error(ErrorCode::SchemaError, "report: exit_status inconsistent");
        return r;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("report: ") + e.what());
    }
}

} // namespace tmcv
