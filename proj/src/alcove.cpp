#include "tmcv/alcove.hpp"

#include "tmcv/errors.hpp"

#include <algorithm>
#include <set>

namespace tmcv {

Weight affine_reflect(const RootSystem& rs, std::size_t k, Int n, Int p, const Weight& lambda)
{
    return lambda - (rs.pair(lambda + rs.rho(), k) - n * p) * rs.positive_roots[k];
}

Weight affine_reflect(const RootSystem& rs, const Weight& alpha, Int n, Int p, const Weight& lambda)
{
    int k = rs.positive_index(alpha);
    if (k < 0) throw Error(ErrorCode::NotARoot, to_string(alpha) + " is not a positive root");
    return affine_reflect(rs, static_cast<std::size_t>(k), n, p, lambda);
}

bool is_p_regular(const RootSystem& rs, const Weight& lambda, Int p)
{
    Weight x = lambda + rs.rho();
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
        if (floor_mod(rs.pair(x, k), p) == 0) return false;
    return true;
}

AlcoveId alcove_of(const RootSystem& rs, const Weight& lambda, Int p)
{
    AlcoveId a;
    a.p = p;
    Weight x = lambda + rs.rho();
    for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
        Int v = rs.pair(x, k);
        if (floor_mod(v, p) == 0)
            throw Error(ErrorCode::OnWall, to_string(lambda) + " lies on the wall of root " +
                                               to_string(rs.positive_roots[k]) + " at n=" + std::to_string(v / p));
        a.levels.push_back(floor_div(v, p));
    }
    return a;
}

AlcoveId lowest_alcove(const RootSystem& rs, Int p)
{
    return AlcoveId{std::vector<Int>(rs.positive_roots.size(), 0), p};
}

bool in_dot_orbit(const RootSystem& rs, Int p, const Weight& lambda, const Weight& mu)
{
    // W_p = W x p(root lattice) under the dot action.
    Weight a = lambda + rs.rho();
    Weight b = mu + rs.rho();
    for (const auto& w : rs.weyl_group) {
        Weight d = a - apply(w, b);
        if ((d.unaryExpr([p](Int x) { return floor_mod(x, p); }).array() != 0).any()) continue;
        RationalVector c = rs.root_coords(d / p);
        if ((c.num.unaryExpr([&](Int x) { return floor_mod(x, c.den); }).array() == 0).all()) return true;
    }
    return false;
}

namespace {

template <class Visit>
void descend(const RootSystem& rs, Int p, const Weight& top, const Weight& floor, Visit&& visit)
{
    std::set<Weight, WeightLess> seen{top};
    std::vector<Weight> stack{top};
    while (!stack.empty()) {
        Weight x = stack.back();
        stack.pop_back();
        if (!visit(x)) return;
        Weight xr = x + rs.rho();
        for (std::size_t k = 0; k < rs.positive_roots.size(); ++k) {
            Int v = rs.pair(xr, k);
            for (Int n = floor_div(v - 1, p);; --n) {
                Int c = v - n * p;
                Weight y = x - c * rs.positive_roots[k];
                if (!leq_Q(rs, floor, y)) break;
                if (seen.insert(y).second) stack.push_back(y);
            }
        }
    }
}

} // namespace

std::vector<Weight> linked_below(const RootSystem& rs, Int p, const Weight& top, const Weight& floor)
{
    std::vector<Weight> out;
    if (!leq_Q(rs, floor, top)) return out;
    descend(rs, p, top, floor, [&](const Weight& x) {
        out.push_back(x);
        return true;
    });
    std::sort(out.begin(), out.end(), WeightLess{});
    return out;
}

bool strongly_linked(const RootSystem& rs, Int p, const Weight& lambda, const Weight& mu)
{
    if (same(lambda, mu)) return true;
    if (!dominance_leq(rs, lambda, mu)) return false;
    bool found = false;
    descend(rs, p, mu, lambda, [&](const Weight& x) {
        found = same(x, lambda);
        return !found;
    });
    return found;
}

SpecialPoint special_point(const RootSystem& rs, Int p, const Weight& tilde)
{
    return SpecialPoint{-rs.rho() + p * tilde};
}

Weight box_index(const RootSystem& rs, Int p, const SpecialPoint& nu)
{
    Weight t = nu.nu + rs.rho();
    for (Eigen::Index i = 0; i < t.size(); ++i)
        if (floor_mod(t(i), p) != 0) throw Error(ErrorCode::OnBoxWall, to_string(nu.nu) + " is not special");
    return t / p;
}

SpecialPoint box_of(const RootSystem& rs, Int p, const Weight& lambda)
{
    Weight t(rs.rank);
    for (int i = 0; i < rs.rank; ++i) {
        Int v = lambda(i) + 1;
        if (floor_mod(v, p) == 0) throw Error(ErrorCode::OnBoxWall, to_string(lambda) + " on a box wall");
        t(i) = floor_div(v, p);
    }
    return special_point(rs, p, t);
}

std::vector<AlcoveId> box_alcoves(const RootSystem& rs, Int p, const SpecialPoint& nu)
{
    std::set<AlcoveId> found;
    Weight off = Weight::Ones(rs.rank);
    for (;;) {
        Weight x = nu.nu + off;
        if (is_p_regular(rs, x, p)) found.insert(alcove_of(rs, x, p));
        int i = 0;
        while (i < rs.rank && off(i) == p - 1) off(i++) = 1;
        if (i == rs.rank) break;
        ++off(i);
    }
    return {found.begin(), found.end()};
}

Int distance(const AlcoveId& a, const AlcoveId& c)
{
    Int d = 0;
    for (std::size_t k = 0; k < a.levels.size(); ++k) d += c.levels[k] - a.levels[k];
    return d;
}

std::optional<Weight> alcove_weight(const RootSystem& rs, const AlcoveId& a)
{
    // Search the box determined by the simple-root levels.
    Weight tilde(rs.rank);
    for (int i = 0; i < rs.rank; ++i) tilde(i) = a.levels[static_cast<std::size_t>(rs.positive_index(rs.simple_roots[static_cast<std::size_t>(i)]))];
    SpecialPoint nu = special_point(rs, a.p, tilde);
    Weight off = Weight::Ones(rs.rank);
    for (;;) {
        Weight x = nu.nu + off;
        if (is_p_regular(rs, x, a.p) && alcove_of(rs, x, a.p) == a) return x;
        int i = 0;
        while (i < rs.rank && off(i) == a.p - 1) off(i++) = 1;
        if (i == rs.rank) break;
        ++off(i);
    }
    return std::nullopt;
}

G2AlcoveLabels::G2AlcoveLabels(std::map<int, Weight> reference) : reference_(std::move(reference))
{
    const RootSystem& rs = root_system(Kind::G2);
    static const std::set<int> allowed = {1, 2, 3, 4, 5, 6, 7, 8, 11, 13, 15, 16};
    if (reference_.size() != allowed.size())
        throw Error(ErrorCode::SchemaError, "G2 label table must have 12 entries");
    SpecialPoint base = special_point(rs, 7, rs.zero());
    for (const auto& [label, w] : reference_) {
        if (!allowed.count(label)) throw Error(ErrorCode::SchemaError, "unexpected G2 alcove label " + std::to_string(label));
        if (w.size() != 2 || !is_p_regular(rs, w, 7))
            throw Error(ErrorCode::SchemaError, "label " + std::to_string(label) + ": weight " + to_string(w) + " is not 7-regular");
        if (!same(box_of(rs, 7, w).nu, base.nu))
            throw Error(ErrorCode::SchemaError, "label " + std::to_string(label) + ": weight " + to_string(w) + " outside the restricted box");
        auto lv = alcove_of(rs, w, 7).levels;
        if (!by_levels_.emplace(lv, label).second)
            throw Error(ErrorCode::SchemaError, "label " + std::to_string(label) + ": weight " + to_string(w) + " repeats an alcove");
    }
}

int G2AlcoveLabels::label(const AlcoveId& a) const
{
    const RootSystem& rs = root_system(Kind::G2);
    if (a.levels.size() != rs.positive_roots.size() || a.p < 7)
        throw Error(ErrorCode::UnlabeledAlcove, "labels exist only for G2 at p >= 7");
    Weight tilde(2);
    for (int i = 0; i < 2; ++i)
        tilde(i) = a.levels[static_cast<std::size_t>(rs.positive_index(rs.simple_roots[static_cast<std::size_t>(i)]))];
    std::vector<Int> lv = a.levels;
    for (std::size_t k = 0; k < lv.size(); ++k) lv[k] -= rs.pair(tilde, k);
    auto it = by_levels_.find(lv);
    if (it == by_levels_.end()) throw Error(ErrorCode::UnlabeledAlcove, "alcove not in the tabulated set");
    return it->second;
}

AlcoveId G2AlcoveLabels::alcove(int label, Int p) const
{
    auto it = reference_.find(label);
    if (it == reference_.end()) throw Error(ErrorCode::UnlabeledAlcove, "no alcove labelled " + std::to_string(label));
    AlcoveId a = alcove_of(root_system(Kind::G2), it->second, 7);
    a.p = p;
    return a;
}

} // namespace tmcv
