#include "modrep/verify.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace modrep {

namespace {

void record(ViolationReport& rep, const FieldCtx& F, const Mat& lhs, const Mat& rhs,
            std::string relation, std::vector<int> indices) {
    auto diff = lhs.first_difference(rhs, F);
    if (diff) rep.push_back({std::move(relation), std::move(indices), diff->first,
                             diff->second});
}

} // namespace

ModuleView view_of(const SymRep& rep) {
    ModuleView v;
    v.dim = rep.dim;
    for (const Mat& s : rep.S) v.gens.push_back({&s, false});
    return v;
}

ModuleView view_of(const SergeevRep& rep) {
    ModuleView v;
    v.dim = rep.dim;
    for (const Mat& s : rep.S) v.gens.push_back({&s, false});
    for (const Mat& c : rep.C) v.gens.push_back({&c, true});
    v.parity = &rep.parity;
    return v;
}

ModuleView OwnedModule::view() const {
    ModuleView v;
    v.dim = dim;
    for (std::size_t i = 0; i < gens.size(); ++i) v.gens.push_back({&gens[i], odd[i]});
    if (graded) v.parity = &parity;
    return v;
}

OwnedModule direct_sum(const ModuleView& a, const ModuleView& b, const FieldCtx& F) {
    if (a.gens.size() != b.gens.size())
        throw std::invalid_argument("direct_sum: generator lists differ in length");
    OwnedModule out;
    out.dim = a.dim + b.dim;
    for (std::size_t i = 0; i < a.gens.size(); ++i) {
        if (a.gens[i].second != b.gens[i].second)
            throw std::invalid_argument("direct_sum: generator parities disagree");
        Mat g(out.dim, out.dim);
        add_block(g, 0, 0, *a.gens[i].first, F);
        add_block(g, a.dim, a.dim, *b.gens[i].first, F);
        out.gens.push_back(std::move(g));
        out.odd.push_back(a.gens[i].second);
    }
    out.graded = a.parity != nullptr || b.parity != nullptr;
    if (out.graded) {
        out.parity = Mat(out.dim, out.dim);
        Mat ia = Mat::identity(a.dim), ib = Mat::identity(b.dim);
        add_block(out.parity, 0, 0, a.parity ? *a.parity : ia, F);
        add_block(out.parity, a.dim, a.dim, b.parity ? *b.parity : ib, F);
    }
    return out;
}

ViolationReport check_relations(const SymRep& rep, const FieldCtx& F) {
    ViolationReport out;
    int m = static_cast<int>(rep.S.size());
    Mat I = Mat::identity(rep.dim);
    for (int i = 1; i <= m; ++i) {
        const Mat& si = rep.S[static_cast<std::size_t>(i - 1)];
        record(out, F, si.mul(si, F), I, "s^2", {i});
        for (int j = i + 2; j <= m; ++j) {
            const Mat& sj = rep.S[static_cast<std::size_t>(j - 1)];
            record(out, F, si.mul(sj, F), sj.mul(si, F), "ss-comm", {i, j});
        }
        if (i + 1 <= m) {
            const Mat& sj = rep.S[static_cast<std::size_t>(i)];
            record(out, F, si.mul(sj, F).mul(si, F), sj.mul(si, F).mul(sj, F),
                   "braid", {i});
        }
    }
    return out;
}

ViolationReport check_relations(const SergeevRep& rep, const FieldCtx& F) {
    ViolationReport out;
    int n = rep.xi.n();
    Mat I = Mat::identity(rep.dim);
    const auto& S = rep.S;
    const auto& X = rep.X;
    const auto& C = rep.C;
    auto s = [&](int i) -> const Mat& { return S[static_cast<std::size_t>(i - 1)]; };
    auto x = [&](int i) -> const Mat& { return X[static_cast<std::size_t>(i - 1)]; };
    auto c = [&](int i) -> const Mat& { return C[static_cast<std::size_t>(i - 1)]; };

    for (int i = 1; i <= n - 1; ++i) {
        record(out, F, s(i).mul(s(i), F), I, "s^2", {i});
        for (int j = i + 2; j <= n - 1; ++j)
            record(out, F, s(i).mul(s(j), F), s(j).mul(s(i), F), "ss-comm", {i, j});
        if (i + 1 <= n - 1)
            record(out, F, s(i).mul(s(i + 1), F).mul(s(i), F),
                   s(i + 1).mul(s(i), F).mul(s(i + 1), F), "braid", {i});
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            record(out, F, x(i).mul(x(j), F), x(j).mul(x(i), F), "xx-comm", {i, j});
    for (int i = 1; i <= n; ++i) {
        record(out, F, c(i).mul(c(i), F), I, "c^2", {i});
        for (int j = i + 1; j <= n; ++j)
            record(out, F, c(i).mul(c(j), F), c(j).mul(c(i), F).negated(F),
                   "cc-anti", {i, j});
    }
    for (int i = 1; i <= n - 1; ++i) {
        Mat rhs = x(i + 1).mul(s(i), F).sub(I.add(c(i).mul(c(i + 1), F), F), F);
        record(out, F, s(i).mul(x(i), F), rhs, "sx-twist", {i});
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            record(out, F, s(i).mul(x(j), F), x(j).mul(s(i), F), "sx-comm", {i, j});
        }
        record(out, F, s(i).mul(c(i), F), c(i + 1).mul(s(i), F), "sc-twist", {i});
        record(out, F, s(i).mul(c(i + 1), F), c(i).mul(s(i), F), "sc-twist2", {i});
        for (int j = 1; j <= n; ++j) {
            if (j == i || j == i + 1) continue;
            record(out, F, s(i).mul(c(j), F), c(j).mul(s(i), F), "sc-comm", {i, j});
        }
    }
    for (int i = 1; i <= n; ++i) {
        record(out, F, x(i).mul(c(i), F), c(i).mul(x(i), F).negated(F), "xc-anti", {i});
        for (int j = 1; j <= n; ++j) {
            if (j == i) continue;
            record(out, F, x(i).mul(c(j), F), c(j).mul(x(i), F), "xc-comm", {i, j});
        }
    }
    return out;
}

ViolationReport check_jm(const SymRep& rep, const FieldCtx& F) {
    ViolationReport out;
    std::vector<Mat> L = jm_sym(rep, F);
    for (std::size_t k = 0; k < L.size(); ++k) {
        std::optional<std::pair<int, int>> off;
        for (int r = 0; r < L[k].nrows && !off; ++r)
            for (const auto& [col, v] : L[k].rows[static_cast<std::size_t>(r)])
                if (col != r) {
                    off = {r, col};
                    break;
                }
        if (off)
            out.push_back({"jm-diagonal", {static_cast<int>(k) + 1}, off->first,
                           off->second});
    }
    return out;
}

ViolationReport check_jm(const SergeevRep& rep, const FieldCtx& F) {
    ViolationReport out;
    record(out, F, rep.X.front(), Mat::zero(rep.dim, rep.dim), "x1-zero", {1});
    std::vector<Mat> L = jm_sergeev(rep, F);
    for (std::size_t k = 0; k < L.size(); ++k)
        record(out, F, L[k], rep.X[k], "jm-equals-x", {static_cast<int>(k) + 1});
    return out;
}

// ---------------------------------------------------------------------------
// commutant via a cyclic standard basis

namespace {

struct SpinData {
    bool cyclic = false;
    std::vector<Vec> basis;                      // raw spanning vectors
    std::vector<std::pair<int, int>> defs;       // (gen, parent), (-1,-1) for root
    // closures: g * basis[j] already in span, with its combination
    struct Closure {
        int gen;
        int parent;
        Vec coeffs;
    };
    std::vector<Closure> closures;
    EchelonBasis echelon;
};

SpinData spin_standard_basis(const ModuleView& view, const Vec& start,
                             const FieldCtx& F) {
    SpinData sd{false, {}, {}, {}, EchelonBasis(view.dim, F, true)};
    if (!sd.echelon.insert(start)) return sd; // zero start
    sd.basis.push_back(start);
    sd.defs.push_back({-1, -1});
    for (std::size_t head = 0; head < sd.basis.size(); ++head) {
        for (std::size_t g = 0; g < view.gens.size(); ++g) {
            Vec w = view.gens[g].first->apply(sd.basis[head], F);
            Vec coeffs;
            Vec res = sd.echelon.reduce(w, &coeffs);
            if (vec_is_zero(res)) {
                sd.closures.push_back({static_cast<int>(g), static_cast<int>(head),
                                       std::move(coeffs)});
            } else {
                sd.echelon.insert(w);
                sd.basis.push_back(std::move(w));
                sd.defs.push_back({static_cast<int>(g), static_cast<int>(head)});
            }
        }
    }
    sd.cyclic = sd.echelon.dim() == view.dim;
    return sd;
}

std::vector<Vec> dense_rows_identity(int d) {
    std::vector<Vec> I(static_cast<std::size_t>(d), Vec(static_cast<std::size_t>(d)));
    for (int i = 0; i < d; ++i) I[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Scalar{1, 0};
    return I;
}

std::vector<Vec> sparse_times_dense(const Mat& A, const std::vector<Vec>& D,
                                    const FieldCtx& F) {
    int d = static_cast<int>(D.front().size());
    std::vector<Vec> out(static_cast<std::size_t>(A.nrows),
                         Vec(static_cast<std::size_t>(d), Scalar{}));
    for (int r = 0; r < A.nrows; ++r)
        for (const auto& [k, v] : A.rows[static_cast<std::size_t>(r)])
            for (int j = 0; j < d; ++j) {
                const Scalar& dv = D[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (!(dv == Scalar{}))
                    out[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = F.add(
                        out[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                        F.mul(v, dv));
            }
    return out;
}

/// Rank of the constraint system restricted to the image vector of the start
/// vector; early exit once the nullity bound `min_nullity` is reached.
int constraint_rank(const ModuleView& view, const SpinData& sd,
                    const std::vector<int>& sign, int parity_sign,
                    const FieldCtx& F, int min_nullity) {
    int d = view.dim;
    // M_j: image of basis[j] expressed as M_j * w for the unknown image w
    std::vector<std::vector<Vec>> M;
    M.push_back(dense_rows_identity(d));
    for (std::size_t j = 1; j < sd.basis.size(); ++j) {
        auto [g, parent] = sd.defs[j];
        std::vector<Vec> Mj =
            sparse_times_dense(*view.gens[static_cast<std::size_t>(g)].first,
                               M[static_cast<std::size_t>(parent)], F);
        if (sign[static_cast<std::size_t>(g)] < 0)
            for (auto& row : Mj)
                for (auto& e : row) e = F.neg(e);
        M.push_back(std::move(Mj));
    }
    EchelonBasis constraints(d, F);
    auto feed = [&](const std::vector<Vec>& T) {
        for (const auto& row : T) {
            if (vec_is_zero(row)) continue;
            constraints.insert(row);
            if (constraints.dim() >= d - min_nullity) return true;
        }
        return false;
    };
    for (const auto& cl : sd.closures) {
        std::vector<Vec> T =
            sparse_times_dense(*view.gens[static_cast<std::size_t>(cl.gen)].first,
                               M[static_cast<std::size_t>(cl.parent)], F);
        if (sign[static_cast<std::size_t>(cl.gen)] < 0)
            for (auto& row : T)
                for (auto& e : row) e = F.neg(e);
        for (std::size_t m = 0; m < cl.coeffs.size(); ++m) {
            const Scalar& cm = cl.coeffs[m];
            if (cm == Scalar{}) continue;
            for (int r = 0; r < d; ++r)
                for (int col = 0; col < d; ++col)
                    T[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] =
                        F.sub(T[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)],
                              F.mul(cm, M[m][static_cast<std::size_t>(r)]
                                           [static_cast<std::size_t>(col)]));
        }
        if (feed(T)) return constraints.dim();
    }
    if (view.parity) {
        // G(P b_j) = eta P G(b_j), i.e. (sum_m q_m M_m - eta P M_j) w = 0
        // where P b_j = sum_m q_m b_m
        for (std::size_t j = 0; j < sd.basis.size(); ++j) {
            Vec pb = view.parity->apply(sd.basis[j], F);
            Vec q;
            Vec res = sd.echelon.reduce(pb, &q);
            if (!vec_is_zero(res))
                throw std::logic_error("super_commutant_dim: parity leaves the span");
            std::vector<Vec> T = sparse_times_dense(*view.parity, M[j], F);
            for (auto& row : T)
                for (auto& e : row)
                    if (parity_sign > 0) e = F.neg(e);
            for (std::size_t m = 0; m < q.size(); ++m) {
                const Scalar& qm = q[m];
                if (qm == Scalar{}) continue;
                for (int r = 0; r < d; ++r)
                    for (int col = 0; col < d; ++col) {
                        auto& t = T[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
                        t = F.add(t, F.mul(qm, M[m][static_cast<std::size_t>(r)]
                                                   [static_cast<std::size_t>(col)]));
                    }
            }
            if (feed(T)) return constraints.dim();
        }
    }
    return constraints.dim();
}

/// Stacked dense solve for non-cyclic modules (small dimensions only).
int stacked_commutant_dim(const ModuleView& view, const std::vector<int>& sign,
                          int parity_sign, const FieldCtx& F) {
    int d = view.dim;
    if (d > 32)
        throw std::logic_error(
            "super_commutant_dim: module not cyclic and too large for the dense fallback");
    EchelonBasis eb(d * d, F);
    auto add_equations = [&](const std::vector<Vec>& g, int eps) {
        // G g - eps g G = 0, G vectorized row-major
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) {
                Vec row(static_cast<std::size_t>(d * d), Scalar{});
                for (int k = 0; k < d; ++k) {
                    auto& e1 = row[static_cast<std::size_t>(r * d + k)];
                    e1 = F.add(e1, g[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)]);
                    Scalar t = g[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
                    if (eps < 0) t = F.neg(t);
                    auto& e2 = row[static_cast<std::size_t>(k * d + c)];
                    e2 = F.sub(e2, t);
                }
                if (!vec_is_zero(row)) eb.insert(std::move(row));
            }
    };
    for (std::size_t g = 0; g < view.gens.size(); ++g)
        add_equations(view.gens[g].first->dense(F), sign[g]);
    if (view.parity) add_equations(view.parity->dense(F), parity_sign);
    return d * d - eb.dim();
}

} // namespace

CommutantResult super_commutant_dim(const ModuleView& view, const FieldCtx& F,
                                    int dim_cap) {
    if (view.dim > dim_cap)
        throw std::invalid_argument("super_commutant_dim: dimension " +
                                    std::to_string(view.dim) + " exceeds the cap " +
                                    std::to_string(dim_cap));
    int d = view.dim;
    std::vector<int> sign_even(view.gens.size(), 1);
    std::vector<int> sign_odd(view.gens.size(), 1);
    for (std::size_t g = 0; g < view.gens.size(); ++g)
        if (view.gens[g].second) sign_odd[g] = -1;

    // find a cyclic vector among the standard basis vectors
    SpinData sd{false, {}, {}, {}, EchelonBasis(d, F, true)};
    bool found = false;
    for (int s = 0; s < std::min(d, 8) && !found; ++s) {
        Vec start(static_cast<std::size_t>(d), Scalar{});
        start[static_cast<std::size_t>(s)] = Scalar{1, 0};
        sd = spin_standard_basis(view, start, F);
        found = sd.cyclic;
    }
    CommutantResult out;
    if (found) {
        out.even_dim = d - constraint_rank(view, sd, sign_even, +1, F, 1);
        if (view.parity)
            out.odd_dim = d - constraint_rank(view, sd, sign_odd, -1, F, 0);
        else
            out.odd_dim = 0; // trivial grading: odd maps vanish
    } else {
        out.even_dim = stacked_commutant_dim(view, sign_even, +1, F);
        out.odd_dim = view.parity ? stacked_commutant_dim(view, sign_odd, -1, F) : 0;
    }
    return out;
}

std::optional<std::vector<Vec>> find_proper_graded_submodule(
    const ModuleView& view, int trials, unsigned long long seed, const FieldCtx& F) {
    if (trials < 1)
        throw std::invalid_argument("find_proper_graded_submodule: trials must be >= 1");
    int d = view.dim;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(F.p() - 1));

    // parity support for homogeneous draws
    std::vector<int> par(static_cast<std::size_t>(d), 1);
    if (view.parity)
        for (int i = 0; i < d; ++i)
            if (view.parity->at(i, i) == F.neg(F.one())) par[static_cast<std::size_t>(i)] = -1;

    auto random_homogeneous = [&]() {
        int want = (rng() & 1) ? -1 : 1;
        bool exists = false;
        for (int i = 0; i < d; ++i)
            if (par[static_cast<std::size_t>(i)] == want) exists = true;
        if (!exists) want = -want; // one-sided grading
        Vec v(static_cast<std::size_t>(d), Scalar{});
        for (int i = 0; i < d; ++i)
            if (par[static_cast<std::size_t>(i)] == want)
                v[static_cast<std::size_t>(i)] = {coef(rng), coef(rng)};
        if (vec_is_zero(v)) {
            for (int i = 0; i < d; ++i)
                if (par[static_cast<std::size_t>(i)] == want) {
                    v[static_cast<std::size_t>(i)] = F.one();
                    break;
                }
        }
        return v;
    };

    for (int t = 0; t < trials; ++t) {
        Vec start;
        int mode = t % 3;
        if (mode == 0) {
            start.assign(static_cast<std::size_t>(d), Scalar{});
            start[static_cast<std::size_t>((t / 3) % d)] = Scalar{1, 0};
        } else if (mode == 1 || view.gens.empty()) {
            start = random_homogeneous();
        } else {
            start = random_homogeneous();
            int len = 1 + static_cast<int>(rng() % 4);
            for (int step = 0; step < len && !vec_is_zero(start); ++step) {
                const Mat& g = *view.gens[rng() % view.gens.size()].first;
                start = g.apply(start, F);
            }
            if (vec_is_zero(start)) start = random_homogeneous();
        }
        EchelonBasis eb(d, F);
        if (!eb.insert(start)) continue;
        std::vector<Vec> queue{start};
        for (std::size_t head = 0; head < queue.size() && eb.dim() < d; ++head) {
            for (const auto& [g, odd] : view.gens) {
                Vec w = g->apply(queue[head], F);
                if (eb.insert(w)) queue.push_back(std::move(w));
                if (eb.dim() == d) break;
            }
        }
        if (eb.dim() > 0 && eb.dim() < d) return eb.rows();
    }
    return std::nullopt;
}

namespace {

std::string part_list(const std::vector<Partition>& v) {
    std::string s;
    for (const auto& x : v) {
        if (!s.empty()) s += " ";
        s += x.str();
    }
    return s;
}

} // namespace

std::vector<CrossCheckRow> cross_check_suite(const std::vector<int>& p_list, int n_max) {
    std::vector<CrossCheckRow> rows;
    for (int p : p_list) {
        for (int n = 1; n <= n_max; ++n) {
            auto all = partitions_of(n);
            bool cp_eq = true, rp_eq = true;
            for (const auto& lam : all) {
                auto c = classify(lam, p);
                if (c.in_cp != c.p_regular) cp_eq = false;
                if (c.in_rp != c.in_cps) rp_eq = false;
            }
            {
                CrossCheckRow r{p, n, "CP=P_p", false, ""};
                if (n <= p) {
                    r.pass = cp_eq;
                } else {
                    Partition w(std::vector<int>{n - 1, 1});
                    auto c = classify(w, p);
                    bool witness_ok = c.p_regular && !c.in_cp;
                    r.pass = !cp_eq && witness_ok;
                    r.data = "witness " + w.str();
                }
                rows.push_back(r);
            }
            {
                CrossCheckRow r{p, n, "RP=CPs", false, ""};
                if (n <= p) {
                    r.pass = rp_eq;
                } else {
                    int a = n / p, b = n % p;
                    std::vector<int> parts;
                    if (b != 0) {
                        for (int i = 0; i < a; ++i) parts.push_back(p);
                        parts.push_back(b);
                    } else {
                        for (int i = 0; i < a - 1; ++i) parts.push_back(p);
                        parts.push_back(p - 1);
                        parts.push_back(1);
                    }
                    Partition w(parts);
                    auto c = classify(w, p);
                    bool witness_ok = c.in_rp && !c.in_cps;
                    r.pass = !rp_eq && witness_ok;
                    r.data = "witness " + w.str() + " (part = p)";
                }
                rows.push_back(r);
            }
            if (n <= p) {
                bool ok = true;
                std::vector<Partition> bad;
                for (const auto& lam : all) {
                    if (!classify(lam, p).in_cp) continue;
                    auto tabs = p_standard_tableaux(lam, DiagramKind::Straight, p);
                    if (tabs.size() != dim_sym(lam, p)) {
                        ok = false;
                        bad.push_back(lam);
                    }
                }
                rows.push_back({p, n, "sym-count", ok, part_list(bad)});
                ok = true;
                bad.clear();
                for (const auto& xi : partitions_of(n, PartitionMode::Strict)) {
                    if (!classify(xi, p).in_cps) continue;
                    auto tabs = p_standard_tableaux(xi, DiagramKind::Shifted, p);
                    SergeevDim sd = dim_sergeev(xi, p);
                    unsigned long long blocks =
                        sd.dim >> (n - xi.length() / 2);
                    if (tabs.size() != blocks) {
                        ok = false;
                        bad.push_back(xi);
                    }
                }
                rows.push_back({p, n, "sergeev-count", ok, part_list(bad)});
            }
            if (n <= 8) {
                bool ok = true;
                for (const auto& lam : all)
                    if (standard_tableaux(lam, DiagramKind::Straight).size() !=
                        count_standard_hook(lam, DiagramKind::Straight))
                        ok = false;
                for (const auto& xi : partitions_of(n, PartitionMode::Strict))
                    if (standard_tableaux(xi, DiagramKind::Shifted).size() !=
                        count_standard_hook(xi, DiagramKind::Shifted))
                        ok = false;
                rows.push_back({p, n, "hook-oracle", ok, ""});
            }
        }
    }
    return rows;
}

} // namespace modrep
