#include "hyperalgebra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <unordered_map>

namespace tmcv::datagen {

namespace {

using Mat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

Int mod(Int a, Int p) { return floor_mod(a, p); }

Int inverse_mod(Int a, Int p)
{
    a = mod(a, p);
    for (Int x = 1; x < p; ++x)
        if ((a * x) % p == 1) return x;
    throw Error(ErrorCode::Overflow, "no inverse mod p");
}

// binom(x, t) mod p for integer x and t >= 0.
Int binom_mod(Int x, Int t, Int p)
{
    if (t < 0) return 0;
    Int sign = 1;
    if (x < 0) {
        x = t - x - 1;
        if (t % 2) sign = -1;
    }
    Int r = 1;
    while (t > 0 || x > 0) {
        Int xs = x % p, ts = t % p;
        if (ts > xs) return 0;
        Int c = 1;
        for (Int i = 0; i < ts; ++i) c = c * (xs - i) % p;
        Int f = 1;
        for (Int i = 1; i <= ts; ++i) f = f * i % p;
        r = r * c % p * inverse_mod(f, p) % p;
        x /= p;
        t /= p;
    }
    return mod(sign * r, p);
}

struct Node {
    Int dim = 0;
    // up[j][l]: e_j^(p^l) from this weight, dim(target) x dim.
    std::vector<std::vector<Mat>> up;
    // into[i][k]: f_i^(p^k) from weight + p^k alpha_i into this weight, dim x dim(source).
    std::vector<std::vector<Mat>> into;
};

class Engine {
public:
    Engine(const RootSystem& rs, Int p, const Weight& lambda) : rs_(rs), p_(p), lambda_(lambda)
    {
        for (Int q = 1; q <= 4 * 64; q *= p) powers_.push_back(q);
    }

    Character run();

private:
    const Node* node(const Weight& w) const
    {
        auto it = nodes_.find(w);
        return (it == nodes_.end() || it->second.dim == 0) ? nullptr : &it->second;
    }

    Weight alpha(int i) const { return rs_.simple_roots[static_cast<std::size_t>(i)]; }

    // e_j^(c) applied to the columns of m (vectors of weight w).
    Mat apply_e(int j, Int c, const Weight& w, Mat m) const
    {
        Weight cur = w;
        Int scale = 1;
        for (std::size_t s = 0; c > 0; ++s, c /= p_) {
            Int digit = c % p_;
            for (Int r = 0; r < digit; ++r) {
                const Node* n = node(cur);
                Weight next = cur + powers_[s] * alpha(j);
                if (!n || !node(next)) return Mat::Zero(0, m.cols());
                m = (n->up[static_cast<std::size_t>(j)][s] * m).unaryExpr([this](Int x) { return mod(x, p_); });
                cur = next;
            }
            for (Int r = 2; r <= digit; ++r) scale = scale * r % p_;
        }
        Int inv = inverse_mod(scale, p_);
        return (m * inv).unaryExpr([this](Int x) { return mod(x, p_); });
    }

    // f_i^(a) applied to the columns of m (vectors of weight w).
    Mat apply_f(int i, Int a, const Weight& w, Mat m) const
    {
        Weight cur = w;
        Int scale = 1;
        for (std::size_t s = 0; a > 0; ++s, a /= p_) {
            Int digit = a % p_;
            for (Int r = 0; r < digit; ++r) {
                Weight next = cur - powers_[s] * alpha(i);
                const Node* n = node(next);
                if (!n || !node(cur)) return Mat::Zero(0, m.cols());
                m = (n->into[static_cast<std::size_t>(i)][s] * m).unaryExpr([this](Int x) { return mod(x, p_); });
                cur = next;
            }
            for (Int r = 2; r <= digit; ++r) scale = scale * r % p_;
        }
        Int inv = inverse_mod(scale, p_);
        return (m * inv).unaryExpr([this](Int x) { return mod(x, p_); });
    }

    void build(const Weight& mu);

    const RootSystem& rs_;
    Int p_;
    Weight lambda_;
    std::vector<Int> powers_;
    std::unordered_map<Weight, Node, WeightHash, WeightEq> nodes_;
};

// Row-reduces m in place mod p; returns pivot columns.
std::vector<Eigen::Index> rref(Mat& m, Int p)
{
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index piv = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r)
            if (m(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        m.row(piv).swap(m.row(row));
        Int inv = inverse_mod(m(row, col), p);
        m.row(row) = (m.row(row) * inv).unaryExpr([p](Int x) { return floor_mod(x, p); });
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Int f = m(r, col);
            m.row(r) = (m.row(r) - f * m.row(row)).unaryExpr([p](Int x) { return floor_mod(x, p); });
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

void Engine::build(const Weight& mu)
{
    const int n = rs_.rank;
    const std::size_t np = powers_.size();
    Node node_mu;
    node_mu.up.assign(static_cast<std::size_t>(n), std::vector<Mat>(np));
    node_mu.into.assign(static_cast<std::size_t>(n), std::vector<Mat>(np));

    if (same(mu, lambda_)) {
        node_mu.dim = 1;
        nodes_.emplace(mu, std::move(node_mu));
        return;
    }

    struct Block {
        int idx;
        std::size_t s;
        Weight w;
        Eigen::Index offset;
        Eigen::Index size;
    };
    std::vector<Block> cols, rows;
    Eigen::Index nc = 0, nr = 0;
    for (int i = 0; i < n; ++i)
        for (std::size_t s = 0; s < np; ++s) {
            Weight w = mu + powers_[s] * alpha(i);
            if (const Node* nd = node(w)) {
                cols.push_back({i, s, w, nc, nd->dim});
                rows.push_back({i, s, w, nr, nd->dim});
                nc += nd->dim;
                nr += nd->dim;
            }
        }
    if (nc == 0) {
        nodes_.emplace(mu, std::move(node_mu));
        return;
    }

    Mat m = Mat::Zero(nr, nc);
    for (const Block& cb : cols) {
        const int i = cb.idx;
        const Int a = powers_[cb.s];
        const Node* src = node(cb.w);
        for (const Block& rb : rows) {
            const int j = rb.idx;
            const Int c = powers_[rb.s];
            Mat block;
            if (j != i) {
                // f_i^(a) e_j^(c)
                const Node* mid = node(cb.w + c * alpha(j));
                const Node* tgt = node(rb.w);
                if (!mid || !tgt) continue;
                block = (tgt->into[static_cast<std::size_t>(i)][cb.s] * src->up[static_cast<std::size_t>(j)][rb.s])
                            .unaryExpr([this](Int x) { return mod(x, p_); });
            } else {
                block = Mat::Zero(rb.size, cb.size);
                const Int nw = cb.w(i);
                for (Int t = 0; t <= std::min(a, c); ++t) {
                    Int coef = binom_mod(nw + c - a, t, p_);
                    if (coef == 0) continue;
                    Mat v = apply_e(i, c - t, cb.w, Mat::Identity(cb.size, cb.size));
                    if (v.rows() == 0) continue;
                    v = apply_f(i, a - t, cb.w + (c - t) * alpha(i), v);
                    if (v.rows() == 0) continue;
                    block += coef * v;
                }
                block = block.unaryExpr([this](Int x) { return mod(x, p_); });
            }
            m.block(rb.offset, cb.offset, rb.size, cb.size) = block;
        }
    }

    Mat r = m;
    auto pivots = rref(r, p_);
    const Eigen::Index d = static_cast<Eigen::Index>(pivots.size());
    node_mu.dim = d;
    if (d > 0) {
        for (const Block& cb : cols)
            node_mu.into[static_cast<std::size_t>(cb.idx)][cb.s] = r.block(0, cb.offset, d, cb.size);
        Mat basis(nr, d);
        for (Eigen::Index k = 0; k < d; ++k) basis.col(k) = m.col(pivots[static_cast<std::size_t>(k)]);
        for (const Block& rb : rows)
            node_mu.up[static_cast<std::size_t>(rb.idx)][rb.s] = basis.block(rb.offset, 0, rb.size, d);
    }
    nodes_.emplace(mu, std::move(node_mu));
}

Character Engine::run()
{
    // Weights between the lowest dominant weight of the coset and lambda.
    std::vector<Weight> dom = dominant_weights_below(rs_, lambda_);
    Weight low = dom.back();
    RationalVector span = rs_.root_coords(lambda_ - low);
    Weight bound = span.num / span.den;
    std::vector<Weight> region;
    Weight idx = Weight::Zero(rs_.rank);
    for (;;) {
        Weight w = lambda_;
        for (int i = 0; i < rs_.rank; ++i) w -= idx(i) * alpha(i);
        if (dominance_leq(rs_, dominant_conjugate(rs_, w), lambda_) && leq_Q(rs_, low, w)) region.push_back(w);
        int i = 0;
        while (i < rs_.rank && idx(i) == bound(i)) idx(i++) = 0;
        if (i == rs_.rank) break;
        ++idx(i);
    }
    std::sort(region.begin(), region.end(), [&](const Weight& a, const Weight& b) {
        Int ha = rs_.scaled_height(a), hb = rs_.scaled_height(b);
        if (ha != hb) return ha > hb;
        return WeightLess{}(a, b);
    });
    for (const Weight& w : region) build(w);
    Character out;
    for (const Weight& w : dom)
        if (const Node* nd = node(w)) out.add(w, nd->dim);
    return out;
}

} // namespace

Character simple_dominant_multiplicities(const RootSystem& rs, Int p, const Weight& lambda)
{
    Engine e(rs, p, lambda);
    return e.run();
}

} // namespace tmcv::datagen
