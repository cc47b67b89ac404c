#include "modrep/symrep.hpp"

#include <map>
#include <stdexcept>

namespace modrep {

namespace {

bool is_hook_at_boundary(const Partition& lam, int p) {
    // lambda = (k, 1^{n-k}) with k >= 2, at n = p
    return lam.n() == p && lam.part(1) >= 2 && lam.part(2) <= 1;
}

void validate_sym_shape(const Partition& lam, int p) {
    if (lam.empty()) throw std::invalid_argument("build_sym: empty partition");
    int n = lam.n();
    if (n > p)
        throw std::invalid_argument("build_sym: n = " + std::to_string(n) +
                                    " exceeds p = " + std::to_string(p));
    PartitionClassification c = classify(lam, p);
    if (!c.p_regular)
        throw std::invalid_argument("build_sym: " + lam.str() +
                                    " is not p-regular for p = " + std::to_string(p));
    if (!c.in_cp)
        throw std::invalid_argument("build_sym: " + lam.str() +
                                    " has chi > p, not completely splittable");
}

} // namespace

Scalar rho(const Tableau& t, int a, const FieldCtx& F) {
    if (t.kind != DiagramKind::Straight)
        throw std::invalid_argument("rho: straight tableau expected");
    int p = F.p();
    int r1 = residue(t.position_of(a), p, DiagramKind::Straight);
    int r2 = residue(t.position_of(a + 1), p, DiagramKind::Straight);
    if (r1 == r2)
        throw std::domain_error("rho: residue clash, tableau outside the p-standard regime");
    std::uint32_t diff = F.subp(static_cast<std::uint32_t>(r2),
                                static_cast<std::uint32_t>(r1));
    return {F.invp(diff), 0u};
}

unsigned long long dim_sym(const Partition& lam, int p) {
    validate_sym_shape(lam, p);
    int n = lam.n();
    if (is_hook_at_boundary(lam, p)) return binomial(n - 2, lam.part(1) - 2);
    return count_standard_hook(lam, DiagramKind::Straight);
}

SymRep build_sym(const Partition& lam, const FieldCtx& F) {
    validate_sym_shape(lam, F.p());
    int p = F.p();
    int n = lam.n();

    SymRep rep;
    rep.p = p;
    rep.lambda = lam;
    rep.hook_case = is_hook_at_boundary(lam, p);

    int k = lam.part(1);
    if (rep.hook_case) {
        std::vector<int> parts{k - 1};
        for (int i = 0; i < n - k; ++i) parts.push_back(1);
        rep.basis_shape = Partition(parts);
        rep.basis = standard_tableaux(rep.basis_shape, DiagramKind::Straight);
    } else {
        rep.basis_shape = lam;
        rep.basis = p_standard_tableaux(lam, DiagramKind::Straight, p);
    }
    rep.dim = static_cast<int>(rep.basis.size());

    std::map<std::vector<int>, int> index;
    for (int t = 0; t < rep.dim; ++t) index[rep.basis[t].reading_word()] = t;

    int seminormal_gens = rep.hook_case ? n - 2 : n - 1;
    for (int i = 1; i <= seminormal_gens; ++i) {
        Mat Si(rep.dim, rep.dim);
        for (int t = 0; t < rep.dim; ++t) {
            const Tableau& T = rep.basis[t];
            Scalar r = rho(T, i, F);
            Si.add_at(t, t, r, F);
            Tableau Ts = T.swapped(i);
            bool in_basis = Ts.is_standard() && (rep.hook_case || is_p_standard(Ts, p));
            if (in_basis) {
                std::uint32_t rr = F.mulp(r.a, r.a);
                Scalar off = F.sqrt_base(F.subp(1u, rr)); // sqrt(1 - rho^2)
                Si.add_at(index.at(Ts.reading_word()), t, off, F);
            }
        }
        rep.S.push_back(std::move(Si));
    }
    if (rep.hook_case) {
        // s_{n-1} acts by +1 when n-1 fills (1, k-1), by -1 when it fills the
        // bottom of the first column
        Mat Sn(rep.dim, rep.dim);
        for (int t = 0; t < rep.dim; ++t) {
            const Tableau& T = rep.basis[t];
            Node pos = T.position_of(n - 1);
            if (pos == Node{1, k - 1}) {
                Sn.add_at(t, t, F.one(), F);
            } else if (pos == Node{n - k + 1, 1}) {
                Sn.add_at(t, t, F.neg(F.one()), F);
            } else {
                throw std::logic_error("build_sym: n-1 not at a removable corner");
            }
        }
        rep.S.push_back(std::move(Sn));
    }
    return rep;
}

std::vector<Mat> jm_sym(const SymRep& rep, const FieldCtx& F) {
    int n = rep.lambda.n();
    std::vector<Mat> L;
    L.push_back(Mat::zero(rep.dim, rep.dim));
    for (int k = 2; k <= n; ++k) {
        Mat cur = rep.S[static_cast<std::size_t>(k - 2)]; // (k-1, k)
        Mat acc = cur;
        for (int m = k - 2; m >= 1; --m) {
            const Mat& s = rep.S[static_cast<std::size_t>(m - 1)];
            cur = s.mul(cur, F).mul(s, F); // (m, k) = s_m (m+1, k) s_m
            acc = acc.add(cur, F);
        }
        L.push_back(std::move(acc));
    }
    return L;
}

unsigned long long radical_dim(const Partition& lam, int p) {
    if (lam.n() != p)
        throw std::invalid_argument("radical_dim: defined only at n = p");
    validate_sym_shape(lam, p);
    int n = lam.n();
    if (is_hook_at_boundary(lam, p)) return binomial(n - 2, lam.part(1) - 1);
    return 0;
}

} // namespace modrep
