#include "tmcv/root_system.hpp"

#include "tmcv/errors.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace tmcv {

std::string kind_name(Kind k)
{
    switch (k) {
    case Kind::A1: return "A1";
    case Kind::A2: return "A2";
    case Kind::A3: return "A3";
    case Kind::B2: return "B2";
    case Kind::G2: return "G2";
    }
    return "?";
}

Kind parse_kind(std::string_view s)
{
    if (s == "A1") return Kind::A1;
    if (s == "A2") return Kind::A2;
    if (s == "A3") return Kind::A3;
    if (s == "B2" || s == "C2") return Kind::B2;
    if (s == "G2") return Kind::G2;
    throw Error(ErrorCode::ParseError, "unknown root system '" + std::string(s) + "'");
}

namespace {

IntMatrix cartan_of(Kind k)
{
    IntMatrix c;
    switch (k) {
    case Kind::A1:
        c.resize(1, 1);
        c << 2;
        break;
    case Kind::A2:
        c.resize(2, 2);
        c << 2, -1, -1, 2;
        break;
    case Kind::A3:
        c.resize(3, 3);
        c << 2, -1, 0, -1, 2, -1, 0, -1, 2;
        break;
    case Kind::B2: // alpha1 long
        c.resize(2, 2);
        c << 2, -2, -1, 2;
        break;
    case Kind::G2: // alpha1 short
        c.resize(2, 2);
        c << 2, -1, -3, 2;
        break;
    }
    return c;
}

// Squared length of simple roots divided by the short squared length.
std::vector<Int> simple_lengths(Kind k, int rank)
{
    std::vector<Int> d(static_cast<std::size_t>(rank), 1);
    if (k == Kind::B2) d[0] = 2;
    if (k == Kind::G2) d[1] = 3;
    return d;
}

std::vector<Int> matrix_key(const IntMatrix& m)
{
    return std::vector<Int>(m.data(), m.data() + m.size());
}

} // namespace

RootSystem build_root_system(Kind k)
{
    RootSystem rs;
    rs.kind = k;
    rs.cartan = cartan_of(k);
    const int n = static_cast<int>(rs.cartan.rows());
    rs.rank = n;
    for (int i = 0; i < n; ++i) rs.simple_roots.push_back(rs.cartan.row(i).transpose());

    // Root coordinates: x = cartan^T c.
    IntMatrix ct = rs.cartan.transpose();
    IntMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = 1;
        rs.root_coord_det_ = ct(0, 0);
    } else if (n == 2) {
        adj << ct(1, 1), -ct(0, 1), -ct(1, 0), ct(0, 0);
        rs.root_coord_det_ = ct(0, 0) * ct(1, 1) - ct(0, 1) * ct(1, 0);
    } else {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
                adj(i, j) = ct(r0, c0) * ct(r1, c1) - ct(r0, c1) * ct(r1, c0);
            }
        rs.root_coord_det_ = ct.row(0).dot(adj.col(0));
    }
    rs.root_coord_adj_ = adj;
    {
        // (omega_i, alpha_j) = d_j delta_ij, hence form = D (cartan^T)^{-1}.
        auto dl = simple_lengths(k, n);
        IntMatrix f = adj;
        for (int i = 0; i < n; ++i) f.row(i) *= dl[static_cast<std::size_t>(i)];
        rs.form_scaled = f;
        rs.form_den = rs.root_coord_det_;
        if (rs.form_den < 0) {
            rs.form_scaled = -rs.form_scaled;
            rs.form_den = -rs.form_den;
        }
    }

    // Weyl group by breadth-first closure; length is the BFS depth.
    std::vector<IntMatrix> gens;
    for (int i = 0; i < n; ++i) {
        IntMatrix s = IntMatrix::Identity(n, n);
        s.col(i) -= rs.simple_roots[static_cast<std::size_t>(i)];
        gens.push_back(s);
    }
    std::map<std::vector<Int>, std::size_t> seen;
    WeylElement e{IntMatrix::Identity(n, n), 0, {}};
    rs.weyl_group.push_back(e);
    seen[matrix_key(e.matrix)] = 0;
    for (std::size_t head = 0; head < rs.weyl_group.size(); ++head) {
        for (int i = 0; i < n; ++i) {
            IntMatrix m = gens[static_cast<std::size_t>(i)] * rs.weyl_group[head].matrix;
            auto key = matrix_key(m);
            if (seen.count(key)) continue;
            WeylElement w{m, rs.weyl_group[head].length + 1, {}};
            w.word.push_back(i);
            for (int s : rs.weyl_group[head].word) w.word.push_back(s);
            seen[key] = rs.weyl_group.size();
            rs.weyl_group.push_back(w);
        }
    }
    rs.w0_index = 0;
    for (std::size_t i = 0; i < rs.weyl_group.size(); ++i)
        if (rs.weyl_group[i].length > rs.weyl_group[static_cast<std::size_t>(rs.w0_index)].length)
            rs.w0_index = static_cast<int>(i);

    // Roots as the W-orbit of the simple roots, keeping the length class.
    auto d = simple_lengths(k, n);
    std::map<Weight, Int, WeightLess> roots;
    for (int i = 0; i < n; ++i)
        for (const auto& w : rs.weyl_group) roots.emplace(apply(w, rs.simple_roots[static_cast<std::size_t>(i)]), d[static_cast<std::size_t>(i)]);

    struct Entry {
        Weight root;
        Weight rc;
        Int len;
    };
    std::vector<Entry> pos;
    for (const auto& [r, len] : roots) {
        RationalVector c = rs.root_coords(r);
        if ((c.num.array() >= 0).all()) pos.push_back({r, c.num / c.den, len});
    }
    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        Int ha = a.rc.sum(), hb = b.rc.sum();
        if (ha != hb) return ha < hb;
        return WeightLess{}(b.rc, a.rc);
    });
    Int short_len = 1;
    for (const auto& e2 : pos) {
        rs.positive_roots.push_back(e2.root);
        // beta^vee = sum_i c_i (d_i / d_beta) alpha_i^vee
        Weight cv(n);
        for (int i = 0; i < n; ++i) cv(i) = e2.rc(i) * d[static_cast<std::size_t>(i)] / e2.len;
        rs.coroots.push_back(cv);
        rs.is_long.push_back(e2.len > short_len && (k == Kind::B2 || k == Kind::G2));
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (!rs.is_long[i]) rs.alpha0_index = static_cast<int>(i);
        rs.alpha_tilde_index = static_cast<int>(i);
    }
    rs.highest_short_root = rs.positive_roots[static_cast<std::size_t>(rs.alpha0_index)];
    rs.highest_long_root = rs.positive_roots[static_cast<std::size_t>(rs.alpha_tilde_index)];
    rs.coxeter_number = static_cast<int>(rs.pair(rs.rho(), static_cast<std::size_t>(rs.alpha0_index)) + 1);
    return rs;
}

const RootSystem& root_system(Kind k)
{
    static const std::array<RootSystem, 5> all = {
        build_root_system(Kind::A1), build_root_system(Kind::A2), build_root_system(Kind::A3),
        build_root_system(Kind::B2), build_root_system(Kind::G2)};
    return all[static_cast<std::size_t>(k)];
}

int RootSystem::positive_index(const Weight& beta) const
{
    for (std::size_t i = 0; i < positive_roots.size(); ++i)
        if (same(positive_roots[i], beta)) return static_cast<int>(i);
    return -1;
}

RationalVector RootSystem::root_coords(const Weight& x) const
{
    RationalVector r{root_coord_adj_ * x, root_coord_det_};
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    return r;
}

Int RootSystem::scaled_height(const Weight& x) const { return root_coords(x).num.sum(); }

Int pairing(const RootSystem& rs, const Weight& lambda, const Weight& alpha)
{
    int k = rs.positive_index(alpha);
    if (k >= 0) return rs.pair(lambda, static_cast<std::size_t>(k));
    k = rs.positive_index(-alpha);
    if (k >= 0) return -rs.pair(lambda, static_cast<std::size_t>(k));
    throw Error(ErrorCode::NotARoot, to_string(alpha));
}

Weight dot_apply(const RootSystem& rs, const WeylElement& w, const Weight& lambda)
{
    return apply(w, lambda + rs.rho()) - rs.rho();
}

bool dominance_leq(const RootSystem& rs, const Weight& lambda, const Weight& mu)
{
    RationalVector c = rs.root_coords(mu - lambda);
    for (Eigen::Index i = 0; i < c.num.size(); ++i)
        if (c.num(i) < 0 || c.num(i) % c.den != 0) return false;
    return true;
}

bool leq_Q(const RootSystem& rs, const Weight& lambda, const Weight& mu)
{
    return (rs.root_coords(mu - lambda).num.array() >= 0).all();
}

bool is_dominant(const Weight& lambda) { return (lambda.array() >= 0).all(); }

Int ipow(Int p, int r)
{
    Int q = 1;
    for (int i = 0; i < r; ++i) q *= p;
    return q;
}

bool is_restricted(const Weight& lambda, Int p, int r)
{
    Int q = ipow(p, r);
    return is_dominant(lambda) && (lambda.array() < q).all();
}

std::pair<Weight, Weight> restricted_split(const Weight& lambda, Int p, int r)
{
    if (!is_dominant(lambda)) throw Error(ErrorCode::NotDominant, to_string(lambda));
    Int q = ipow(p, r);
    Weight l0(lambda.size()), l1(lambda.size());
    for (Eigen::Index i = 0; i < lambda.size(); ++i) {
        l0(i) = lambda(i) % q;
        l1(i) = lambda(i) / q;
    }
    return {l0, l1};
}

Weight dominant_conjugate(const RootSystem& rs, const Weight& lambda)
{
    Weight x = lambda;
    for (;;) {
        int i = 0;
        while (i < rs.rank && x(i) >= 0) ++i;
        if (i == rs.rank) return x;
        x = rs.simple_reflect(i, x);
    }
}

DotDominant dot_dominant(const RootSystem& rs, const Weight& lambda)
{
    Weight x = lambda + rs.rho();
    int sign = 1;
    for (;;) {
        int i = 0;
        while (i < rs.rank && x(i) > 0) ++i;
        if (i == rs.rank) return {x - rs.rho(), sign};
        if (x(i) == 0) return {x - rs.rho(), 0};
        x = rs.simple_reflect(i, x);
        sign = -sign;
    }
}

std::vector<Weight> orbit(const RootSystem& rs, const Weight& lambda)
{
    std::vector<Weight> out;
    out.reserve(rs.weyl_group.size());
    for (const auto& w : rs.weyl_group) out.push_back(apply(w, lambda));
    std::sort(out.begin(), out.end(), WeightLess{});
    out.erase(std::unique(out.begin(), out.end(), WeightEq{}), out.end());
    return out;
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, const Weight& lambda)
{
    RationalVector c = rs.root_coords(lambda);
    Weight bound(rs.rank);
    for (int i = 0; i < rs.rank; ++i) bound(i) = c.num(i) < 0 ? -1 : c.num(i) / c.den;
    std::vector<Weight> out;
    if ((bound.array() < 0).any()) {
        if (is_dominant(lambda)) out.push_back(lambda);
        return out;
    }
    Weight idx = Weight::Zero(rs.rank);
    for (;;) {
        Weight mu = lambda;
        for (int i = 0; i < rs.rank; ++i) mu -= idx(i) * rs.simple_roots[static_cast<std::size_t>(i)];
        if (is_dominant(mu)) out.push_back(mu);
        int i = 0;
        while (i < rs.rank && idx(i) == bound(i)) idx(i++) = 0;
        if (i == rs.rank) break;
        ++idx(i);
    }
    std::sort(out.begin(), out.end(), [&](const Weight& a, const Weight& b) {
        Int ha = rs.scaled_height(a), hb = rs.scaled_height(b);
        if (ha != hb) return ha > hb;
        return WeightLess{}(b, a);
    });
    return out;
}

} // namespace tmcv
