#include "modrep/sergeev.hpp"

#include <map>
#include <stdexcept>

namespace modrep {

int q_val(int i, int p) {
    long long v = static_cast<long long>(i) * (i + 1);
    return static_cast<int>(((v % p) + p) % p);
}

namespace {

struct Factor {
    Mat x, c, parity, theta;
    bool is_q = false;
};

Factor base_factor(int i, const FieldCtx& F) {
    Factor f;
    Scalar s = F.sqrt_base(static_cast<std::uint32_t>(q_val(i, F.p())));
    f.x = Mat(2, 2);
    f.x.add_at(0, 0, s, F);
    f.x.add_at(1, 1, F.neg(s), F);
    f.c = Mat(2, 2);
    f.c.add_at(0, 1, F.one(), F);
    f.c.add_at(1, 0, F.one(), F);
    f.parity = Mat(2, 2);
    f.parity.add_at(0, 0, F.one(), F);
    f.parity.add_at(1, 1, F.neg(F.one()), F);
    f.is_q = (i == 0);
    if (f.is_q) {
        Scalar w = F.sqrt_minus_one();
        f.theta = Mat(2, 2);
        f.theta.add_at(0, 1, F.neg(w), F);
        f.theta.add_at(1, 0, w, F);
    }
    return f;
}

void validate_theta(const CliffordModule& M, const FieldCtx& F) {
    if (M.type != SuperType::Q) return;
    Mat I = Mat::identity(M.dim);
    if (!(M.theta.mul(M.theta, F) == I))
        throw std::logic_error("build_clifford: theta^2 != 1");
    if (!(M.theta.mul(M.parity, F) == M.parity.mul(M.theta, F).negated(F)))
        throw std::logic_error("build_clifford: theta is not odd");
    for (const Mat& c : M.C)
        if (!(M.theta.mul(c, F) == c.mul(M.theta, F).negated(F)))
            throw std::logic_error("build_clifford: theta fails to super-commute with c");
    for (const Mat& x : M.X)
        if (!(M.theta.mul(x, F) == x.mul(M.theta, F)))
            throw std::logic_error("build_clifford: theta fails to commute with x");
}

/// Eigenbasis of J for eigenvalue omega, where J is a generalized permutation
/// matrix with J^2 = -1. Vectors have at most two nonzeros; pivot coordinates
/// are distinct and increasing.
struct SplitBasis {
    std::vector<int> pivots;
    std::vector<std::vector<std::pair<int, Scalar>>> vecs; // sparse columns
};

SplitBasis omega_eigenbasis(const Mat& J, const Scalar& omega, const FieldCtx& F) {
    int d = J.nrows;
    // column representation: J e_i = val[i] * e_{img[i]}
    std::vector<int> img(static_cast<std::size_t>(d), -1);
    std::vector<Scalar> val(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        if (J.rows[static_cast<std::size_t>(r)].size() != 1)
            throw std::logic_error("omega_eigenbasis: J is not a generalized permutation");
        auto [c, v] = J.rows[static_cast<std::size_t>(r)].front();
        if (img[static_cast<std::size_t>(c)] != -1)
            throw std::logic_error("omega_eigenbasis: J column hit twice");
        img[static_cast<std::size_t>(c)] = r;
        val[static_cast<std::size_t>(c)] = v;
    }
    SplitBasis B;
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        seen[static_cast<std::size_t>(i)] = true;
        int j = img[static_cast<std::size_t>(i)];
        if (j == i) {
            if (val[static_cast<std::size_t>(i)] == omega) {
                B.pivots.push_back(i);
                B.vecs.push_back({{i, F.one()}});
            } else if (!(val[static_cast<std::size_t>(i)] == F.neg(omega))) {
                throw std::logic_error("omega_eigenbasis: fixed point with J^2 != -1");
            }
            continue;
        }
        seen[static_cast<std::size_t>(j)] = true;
        if (img[static_cast<std::size_t>(j)] != i ||
            !(F.mul(val[static_cast<std::size_t>(i)], val[static_cast<std::size_t>(j)]) ==
              F.neg(F.one())))
            throw std::logic_error("omega_eigenbasis: J^2 != -1 on a 2-cycle");
        // v = e_i - omega * J_{j,i} e_j
        Scalar coef = F.neg(F.mul(omega, val[static_cast<std::size_t>(i)]));
        B.pivots.push_back(i);
        B.vecs.push_back({{i, F.one()}, {j, coef}});
    }
    if (static_cast<int>(B.vecs.size()) * 2 != d)
        throw std::logic_error("omega_eigenbasis: eigenspace is not half-dimensional");
    return B;
}

Mat restrict_to(const SplitBasis& B, const Mat& G, const FieldCtx& F) {
    int d = G.nrows;
    int m = static_cast<int>(B.vecs.size());
    std::vector<int> pivot_slot(static_cast<std::size_t>(d), -1);
    for (int t = 0; t < m; ++t) pivot_slot[static_cast<std::size_t>(B.pivots[t])] = t;
    Mat out(m, m);
    Vec w(static_cast<std::size_t>(d));
    for (int t = 0; t < m; ++t) {
        std::fill(w.begin(), w.end(), Scalar{});
        // w = G * v_t, spread over the (<= 2)-term sparse column
        for (const auto& [j, coef] : B.vecs[static_cast<std::size_t>(t)])
            for (int r = 0; r < d; ++r) {
                Scalar g = G.at(r, j);
                if (!(g == Scalar{})) w[static_cast<std::size_t>(r)] =
                    F.add(w[static_cast<std::size_t>(r)], F.mul(g, coef));
            }
        // coordinates = values at the pivots; then verify w really lies in
        // the span (exactness of the split is not taken on faith)
        Vec y(static_cast<std::size_t>(m), Scalar{});
        for (int r = 0; r < d; ++r) {
            int slot = pivot_slot[static_cast<std::size_t>(r)];
            if (slot >= 0) y[static_cast<std::size_t>(slot)] = w[static_cast<std::size_t>(r)];
        }
        Vec rec(static_cast<std::size_t>(d), Scalar{});
        for (int s = 0; s < m; ++s)
            for (const auto& [j, coef] : B.vecs[static_cast<std::size_t>(s)])
                rec[static_cast<std::size_t>(j)] =
                    F.add(rec[static_cast<std::size_t>(j)],
                          F.mul(y[static_cast<std::size_t>(s)], coef));
        if (rec != w)
            throw std::logic_error("restrict_to: image leaves the eigenspace");
        for (int s = 0; s < m; ++s)
            if (!(y[static_cast<std::size_t>(s)] == Scalar{}))
                out.add_at(s, t, y[static_cast<std::size_t>(s)], F);
    }
    return out;
}

} // namespace

CliffordModule build_clifford(const Weight& w, const FieldCtx& F) {
    int p = F.p();
    for (int e : w)
        if (e < 0 || e > (p - 1) / 2)
            throw std::invalid_argument("build_clifford: weight entry outside 0..(p-1)/2");
    CliffordModule M;
    M.p = p;
    M.weight = w;
    M.dim = 1;
    M.parity = Mat::identity(1);
    M.type = SuperType::M;

    int gamma0 = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        Factor f = base_factor(w[k], F);
        Mat I2 = Mat::identity(2);
        Mat Ic = Mat::identity(M.dim);
        for (Mat& x : M.X) x = kron(x, I2, F);
        for (Mat& c : M.C) c = kron(c, I2, F);
        M.X.push_back(kron(Ic, f.x, F));
        M.C.push_back(kron(M.parity, f.c, F));
        Mat new_parity = kron(M.parity, f.parity, F);

        if (M.type == SuperType::Q && f.is_q) {
            // split V (x) W = X (+) Pi X along theta (x) theta'
            Mat J = kron(M.theta.mul(M.parity, F), f.theta, F);
            SplitBasis B = omega_eigenbasis(J, F.sqrt_minus_one(), F);
            for (Mat& x : M.X) x = restrict_to(B, x, F);
            for (Mat& c : M.C) c = restrict_to(B, c, F);
            M.parity = restrict_to(B, new_parity, F);
            M.dim = M.X.back().nrows;
            M.type = SuperType::M;
            M.theta = Mat();
        } else {
            if (M.type == SuperType::Q && !f.is_q) {
                M.theta = kron(M.theta, I2, F); // Q (x) M
            } else if (M.type == SuperType::M && f.is_q) {
                M.theta = kron(M.parity, f.theta, F); // M (x) Q
                M.type = SuperType::Q;
            }
            M.parity = std::move(new_parity);
            M.dim *= 2;
        }
        if (w[k] == 0) ++gamma0;
        validate_theta(M, F);
    }
    int n = static_cast<int>(w.size());
    long long expected = 1LL << (n - gamma0 / 2);
    if (M.dim != expected)
        throw std::logic_error("build_clifford: dimension disagrees with 2^(n - floor(gamma0/2))");
    SuperType expected_type = gamma0 % 2 == 0 ? SuperType::M : SuperType::Q;
    if (M.type != expected_type)
        throw std::logic_error("build_clifford: type disagrees with the parity of gamma0");
    return M;
}

Mat xi_block(const CliffordModule& U, int a, int b, const FieldCtx& F) {
    int p = U.p;
    std::uint32_t ka = static_cast<std::uint32_t>(
        q_val(U.weight[static_cast<std::size_t>(a - 1)], p));
    std::uint32_t kb = static_cast<std::uint32_t>(
        q_val(U.weight[static_cast<std::size_t>(b - 1)], p));
    if (ka == kb) throw std::domain_error("xi_block: kappa values clash");
    const Mat& Xa = U.X[static_cast<std::size_t>(a - 1)];
    const Mat& Xb = U.X[static_cast<std::size_t>(b - 1)];
    const Mat& Ca = U.C[static_cast<std::size_t>(a - 1)];
    const Mat& Cb = U.C[static_cast<std::size_t>(b - 1)];
    Mat num = Xa.add(Xb, F).add(Ca.mul(Cb, F).mul(Xa.sub(Xb, F), F), F);
    Scalar factor = F.neg(F.inv(Scalar{F.subp(ka, kb), 0u}));
    return num.scaled(factor, F);
}

Scalar omega_scalar(int ia, int ib, const FieldCtx& F) {
    std::uint32_t ka = static_cast<std::uint32_t>(q_val(ia, F.p()));
    std::uint32_t kb = static_cast<std::uint32_t>(q_val(ib, F.p()));
    if (ka == kb) throw std::domain_error("omega_scalar: kappa values clash");
    std::uint32_t diff = F.subp(ka, kb);
    std::uint32_t denom = F.mulp(diff, diff);
    std::uint32_t num = F.mulp(2u % static_cast<std::uint32_t>(F.p()), F.addp(ka, kb));
    std::uint32_t inside = F.subp(1u, F.mulp(num, F.invp(denom)));
    return F.sqrt_base(inside);
}

namespace {

void validate_sergeev_shape(const Partition& xi, int p) {
    if (xi.empty()) throw std::invalid_argument("build_sergeev: empty partition");
    int n = xi.n();
    if (n > p)
        throw std::invalid_argument("build_sergeev: n = " + std::to_string(n) +
                                    " exceeds p = " + std::to_string(p));
    PartitionClassification c = classify(xi, p);
    if (!c.strict)
        throw std::invalid_argument("build_sergeev: " + xi.str() + " is not strict");
    if (!c.in_cps)
        throw std::invalid_argument("build_sergeev: " + xi.str() +
                                    " is not in CP^s_p for p = " + std::to_string(p));
}

} // namespace

SergeevDim dim_sergeev(const Partition& xi, int p) {
    validate_sergeev_shape(xi, p);
    int n = xi.n();
    int ell = xi.length();
    unsigned long long count;
    int u = p - xi.part(1);
    bool special = u >= 1 && u <= (p - 3) / 2 && xi.part(2) == u;
    if (special) {
        unsigned long long num =
            static_cast<unsigned long long>(n - 2 * u + 1) * binomial(n - 2, u - 1);
        if (num % static_cast<unsigned long long>(n - u) != 0)
            throw std::logic_error("dim_sergeev: inexact division in the closed form");
        count = num / static_cast<unsigned long long>(n - u);
    } else {
        count = count_standard_hook(xi, DiagramKind::Shifted);
    }
    SergeevDim out;
    out.dim = (1ULL << (n - ell / 2)) * count;
    out.type = classify(xi, p).b % 2 == 0 ? SuperType::M : SuperType::Q;
    return out;
}

SergeevRep build_sergeev(const Partition& xi, const FieldCtx& F) {
    int p = F.p();
    validate_sergeev_shape(xi, p);
    int n = xi.n();

    Tableau seed = row_reading_tableau(xi, DiagramKind::Shifted);
    if (!seed.is_standard() || !is_p_standard(seed, p))
        throw std::logic_error("build_sergeev: row-reading seed is not p-standard");
    WeightOrbit orbit = weight_orbit(seed, p);

    SergeevRep rep;
    rep.p = p;
    rep.xi = xi;
    rep.base = build_clifford(residue_sequence(seed, p), F);
    rep.blocks = orbit.tableaux;
    rep.block_perms = orbit.perms;
    rep.block_weights = orbit.weights;
    rep.block_dim = rep.base.dim;
    int nb = static_cast<int>(rep.blocks.size());
    rep.dim = nb * rep.block_dim;
    rep.type = rep.base.type;

    std::map<std::vector<int>, int> index;
    for (int t = 0; t < nb; ++t) index[rep.blocks[static_cast<std::size_t>(t)].reading_word()] = t;

    // inverse permutations: block t realizes L(i)^tau with tau = block_perms[t]
    std::vector<std::vector<int>> inv(static_cast<std::size_t>(nb),
                                      std::vector<int>(static_cast<std::size_t>(n) + 1, 0));
    for (int t = 0; t < nb; ++t)
        for (int m = 1; m <= n; ++m)
            inv[static_cast<std::size_t>(t)][static_cast<std::size_t>(
                rep.block_perms[static_cast<std::size_t>(t)][static_cast<std::size_t>(m - 1)])] = m;

    rep.parity = Mat(rep.dim, rep.dim);
    for (int t = 0; t < nb; ++t)
        add_block(rep.parity, t * rep.block_dim, t * rep.block_dim, rep.base.parity, F);

    for (int m = 1; m <= n; ++m) {
        Mat Cm(rep.dim, rep.dim), Xm(rep.dim, rep.dim);
        for (int t = 0; t < nb; ++t) {
            int a = inv[static_cast<std::size_t>(t)][static_cast<std::size_t>(m)];
            add_block(Cm, t * rep.block_dim, t * rep.block_dim,
                      rep.base.C[static_cast<std::size_t>(a - 1)], F);
            add_block(Xm, t * rep.block_dim, t * rep.block_dim,
                      rep.base.X[static_cast<std::size_t>(a - 1)], F);
        }
        rep.C.push_back(std::move(Cm));
        rep.X.push_back(std::move(Xm));
    }
    if (!rep.X.front().is_zero())
        throw std::logic_error("build_sergeev: x_1 does not act by zero");

    for (int k = 1; k <= n - 1; ++k) {
        Mat Sk(rep.dim, rep.dim);
        for (int t = 0; t < nb; ++t) {
            int a = inv[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)];
            int b = inv[static_cast<std::size_t>(t)][static_cast<std::size_t>(k + 1)];
            add_block(Sk, t * rep.block_dim, t * rep.block_dim,
                      xi_block(rep.base, a, b, F), F);
            const Tableau& T = rep.blocks[static_cast<std::size_t>(t)];
            Tableau Ts = T.swapped(k);
            if (Ts.is_standard() && is_p_standard(Ts, p)) {
                int t2 = index.at(Ts.reading_word());
                const Weight& wt = rep.block_weights[static_cast<std::size_t>(t)];
                Scalar om = omega_scalar(wt[static_cast<std::size_t>(k - 1)],
                                         wt[static_cast<std::size_t>(k)], F);
                add_block(Sk, t2 * rep.block_dim, t * rep.block_dim,
                          Mat::identity(rep.block_dim).scaled(om, F), F);
            }
        }
        rep.S.push_back(std::move(Sk));
    }
    return rep;
}

std::vector<Mat> jm_sergeev(const SergeevRep& rep, const FieldCtx& F) {
    int n = rep.xi.n();
    std::vector<Mat> L;
    L.push_back(Mat::zero(rep.dim, rep.dim));
    for (int k = 2; k <= n; ++k) {
        Mat acc = Mat::zero(rep.dim, rep.dim);
        Mat trans = rep.S[static_cast<std::size_t>(k - 2)]; // (k-1, k)
        for (int j = k - 1; j >= 1; --j) {
            if (j < k - 1) {
                const Mat& s = rep.S[static_cast<std::size_t>(j - 1)];
                trans = s.mul(trans, F).mul(s, F);
            }
            Mat coef = Mat::identity(rep.dim).add(
                rep.C[static_cast<std::size_t>(j - 1)].mul(
                    rep.C[static_cast<std::size_t>(k - 1)], F),
                F);
            acc = acc.add(coef.mul(trans, F), F);
        }
        L.push_back(std::move(acc));
    }
    return L;
}

} // namespace modrep
