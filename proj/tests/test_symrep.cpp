#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modrep/symrep.hpp"
#include "modrep/verify.hpp"

#include <stdexcept>

using namespace modrep;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("rho values") {
    FieldCtx F = make_field(5);
    Tableau t;
    t.shape = P({2, 1});
    t.kind = DiagramKind::Straight;
    t.rows = {{1, 2}, {3}};
    CHECK(rho(t, 1, F) == Scalar{1, 0});
    CHECK(rho(t, 2, F) == Scalar{2, 0}); // 1/(-1 - 1) = 1/3 = 2 mod 5

    // antisymmetry rho_a(s_a T) = -rho_a(T)
    Tableau s = t.swapped(2);
    CHECK(rho(s, 2, F) == F.neg(rho(t, 2, F)));

    // adjacent in a row: residue gap one
    Tableau row = row_reading_tableau(P({3}), DiagramKind::Straight);
    CHECK(rho(row, 1, F) == F.one());
}

TEST_CASE("closed-form dimensions") {
    CHECK(dim_sym(P({4, 1}), 5) == 3);
    CHECK(dim_sym(P({3, 2}), 5) == 5);
    CHECK(dim_sym(P({5}), 5) == 1);
    CHECK(dim_sym(P({3, 1, 1}), 5) == 3);    // hook (3,1,1) at n = p
    CHECK(dim_sym(P({2, 2, 1}), 5) == 5);    // non-hook: full f
    CHECK(dim_sym(P({2, 1, 1, 1}), 5) == 1); // sign
    CHECK(dim_sym(P({4}), 7) == 1);

    CHECK_THROWS_AS(dim_sym(P({1, 1, 1, 1, 1}), 5), std::invalid_argument);
    CHECK_THROWS_AS(dim_sym(P({6}), 5), std::invalid_argument);
}

TEST_CASE("sign representation at p = 3") {
    FieldCtx F = make_field(3);
    SymRep rep = build_sym(P({2, 1}), F);
    CHECK(rep.dim == 1);
    Scalar minus_one = F.neg(F.one());
    CHECK(rep.S[0].at(0, 0) == minus_one);
    CHECK(rep.S[1].at(0, 0) == minus_one);
}

TEST_CASE("trivial module") {
    FieldCtx F = make_field(7);
    for (const Partition& lam : {P({7}), P({4})}) {
        SymRep rep = build_sym(lam, F);
        CHECK(rep.dim == 1);
        for (const Mat& s : rep.S) CHECK(s.at(0, 0) == F.one());
    }
}

TEST_CASE("relations hold for every shape and every n <= p <= 7") {
    for (int p : {3, 5, 7}) {
        FieldCtx F = make_field(p);
        for (int n = 1; n <= p; ++n) {
            for (const auto& lam : partitions_of(n)) {
                if (!classify(lam, p).in_cp) continue;
                SymRep rep = build_sym(lam, F);
                CHECK(rep.dim == dim_sym(lam, p));
                CHECK(check_relations(rep, F).empty());
            }
        }
    }
}

TEST_CASE("hook basis at the boundary") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({4, 1}), F);
    CHECK(rep.hook_case);
    CHECK(rep.basis_shape == P({3, 1}));
    CHECK(rep.dim == 3);
    // S_4 is a diagonal sign matrix
    const Mat& s4 = rep.S[3];
    for (int i = 0; i < rep.dim; ++i) {
        Scalar d = s4.at(i, i);
        CHECK((d == F.one() || d == F.neg(F.one())));
    }
    CHECK(check_relations(rep, F).empty());
}

TEST_CASE("jucys-murphy matrices are diagonal with residue eigenvalues") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({3, 2}), F);
    std::vector<Mat> L = jm_sym(rep, F);
    CHECK(L[0].is_zero());
    CHECK(check_jm(rep, F).empty());
    for (int k = 1; k <= 5; ++k) {
        const Mat& Lk = L[static_cast<std::size_t>(k - 1)];
        for (int t = 0; t < rep.dim; ++t) {
            int r = residue(rep.basis[static_cast<std::size_t>(t)].position_of(k), 5,
                            DiagramKind::Straight);
            CHECK(Lk.at(t, t) == Scalar{static_cast<std::uint32_t>(r), 0});
        }
    }
    // L_2 eigenvalues are res(T(2)) in {1, -1}
    for (int t = 0; t < rep.dim; ++t) {
        Scalar v = L[1].at(t, t);
        CHECK((v == Scalar{1, 0} || v == Scalar{4, 0}));
    }
}

TEST_CASE("jucys-murphy eigenvalues in the hook case") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({3, 1, 1}), F);
    std::vector<Mat> L = jm_sym(rep, F);
    CHECK(check_jm(rep, F).empty());
    int n = 5;
    for (int k = 1; k <= n; ++k) {
        const Mat& Lk = L[static_cast<std::size_t>(k - 1)];
        for (int t = 0; t < rep.dim; ++t) {
            int r;
            if (k <= n - 1) {
                r = residue(rep.basis[static_cast<std::size_t>(t)].position_of(k), 5,
                            DiagramKind::Straight);
            } else {
                // n fills the deleted cell (1, k) of the original hook
                r = residue(Node{1, rep.lambda.part(1)}, 5, DiagramKind::Straight);
            }
            CHECK(Lk.at(t, t) == Scalar{static_cast<std::uint32_t>(r), 0});
        }
    }
}

TEST_CASE("radical dimensions at n = p") {
    CHECK(radical_dim(P({4, 1}), 5) == 1);
    CHECK(radical_dim(P({3, 2}), 5) == 0);
    CHECK(radical_dim(P({2, 1, 1, 1}), 5) == 3);
    CHECK(radical_dim(P({5}), 5) == 0);
    CHECK_THROWS_AS(radical_dim(P({3, 1}), 5), std::invalid_argument);
    CHECK_THROWS_AS(radical_dim(P({1, 1, 1}), 3), std::invalid_argument);

    // radical = f^lambda - dim D^lambda on every legal shape
    for (int p : {3, 5, 7}) {
        for (const auto& lam : partitions_of(p)) {
            if (!classify(lam, p).in_cp) continue;
            CHECK(radical_dim(lam, p) ==
                  count_standard_hook(lam, DiagramKind::Straight) - dim_sym(lam, p));
        }
    }
}

TEST_CASE("completeness of the list at n = p") {
    for (int p : {3, 5, 7}) {
        std::size_t built = 0;
        for (const auto& lam : partitions_of(p))
            if (classify(lam, p).in_cp) ++built;
        CHECK(built == partitions_of(p).size() - 1);
    }
}
