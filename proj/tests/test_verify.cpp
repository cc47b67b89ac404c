#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modrep/export.hpp"
#include "modrep/verify.hpp"

#include <stdexcept>

using namespace modrep;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("negative control: corrupted generator is reported") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({3, 2}), F);
    REQUIRE(check_relations(rep, F).empty());
    rep.S[0].add_at(0, 0, F.one(), F); // flip one entry of S_1
    ViolationReport r = check_relations(rep, F);
    REQUIRE(!r.empty());
    bool names_s2 = false;
    for (const auto& v : r)
        if (v.relation == "s^2" && v.indices == std::vector<int>{1}) names_s2 = true;
    CHECK(names_s2);
}

TEST_CASE("negative control: jm mismatch is reported") {
    FieldCtx F = make_field(5);
    SergeevRep rep = build_sergeev(P({4, 1}), F);
    REQUIRE(check_jm(rep, F).empty());
    rep.X[1] = rep.X[1].add(Mat::identity(rep.dim), F); // X_2 + 1
    ViolationReport r = check_jm(rep, F);
    REQUIRE(!r.empty());
    bool names_l2 = false;
    for (const auto& v : r)
        if (v.relation == "jm-equals-x" && v.indices == std::vector<int>{2})
            names_l2 = true;
    CHECK(names_l2);
}

TEST_CASE("commutant dimensions match the type rule") {
    FieldCtx F5 = make_field(5);
    SymRep sym = build_sym(P({3, 2}), F5);
    CHECK(super_commutant_dim(view_of(sym), F5) == CommutantResult{1, 0});

    SergeevRep m41 = build_sergeev(P({4, 1}), F5);
    CHECK(super_commutant_dim(view_of(m41), F5) == CommutantResult{1, 0});

    SergeevRep q3 = build_sergeev(P({3}), F5); // b = 1 odd: type Q
    CHECK(q3.type == SuperType::Q);
    CHECK(super_commutant_dim(view_of(q3), F5) == CommutantResult{1, 1});

    FieldCtx F7 = make_field(7);
    SergeevRep q5 = build_sergeev(P({5}), F7);
    CHECK(super_commutant_dim(view_of(q5), F7) == CommutantResult{1, 1});

    CHECK_THROWS_AS(super_commutant_dim(view_of(q5), F7, 16), std::invalid_argument);
}

TEST_CASE("commutant of a direct sum via the dense fallback") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({4, 1}), F); // dim 3
    OwnedModule sum = direct_sum(view_of(rep), view_of(rep), F);
    // V + V for type M irreducible V: End = M_2(F), dimension 4
    CHECK(super_commutant_dim(sum.view(), F) == CommutantResult{4, 0});
}

TEST_CASE("submodule search: built modules spin full") {
    FieldCtx F = make_field(5);
    SymRep sym = build_sym(P({3, 2}), F);
    CHECK(!find_proper_graded_submodule(view_of(sym), 60, 12345, F));
    SergeevRep ser = build_sergeev(P({3, 2}), F);
    CHECK(!find_proper_graded_submodule(view_of(ser), 60, 12345, F));
    CHECK_THROWS_AS(find_proper_graded_submodule(view_of(sym), 0, 1, F),
                    std::invalid_argument);
}

TEST_CASE("submodule search: reducible control found quickly") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({3, 2}), F);
    OwnedModule sum = direct_sum(view_of(rep), view_of(rep), F);
    auto witness = find_proper_graded_submodule(sum.view(), 5, 99, F);
    REQUIRE(witness.has_value());
    // the witness spans an invariant subspace: spinning it is a fixpoint
    EchelonBasis eb(sum.dim, F);
    for (const auto& v : *witness) eb.insert(v);
    int before = eb.dim();
    CHECK(before > 0);
    CHECK(before < sum.dim);
    for (const auto& v : *witness)
        for (const auto& [g, odd] : sum.view().gens) eb.insert(g->apply(v, F));
    CHECK(eb.dim() == before);

    SergeevRep ser = build_sergeev(P({4, 1}), F);
    OwnedModule ssum = direct_sum(view_of(ser), view_of(ser), F);
    CHECK(find_proper_graded_submodule(ssum.view(), 5, 7, F).has_value());
}

TEST_CASE("cross-check suite: boundary at n = p") {
    auto rows = cross_check_suite({3, 5, 7}, 9);
    REQUIRE(!rows.empty());
    for (const auto& r : rows) CHECK(r.pass);
    // spot-check the recorded witnesses
    bool saw_cp_witness = false, saw_rp_witness = false;
    for (const auto& r : rows) {
        if (r.p == 5 && r.n == 6 && r.check == "CP=P_p") {
            CHECK(r.data == "witness (5,1)");
            saw_cp_witness = true;
        }
        if (r.p == 7 && r.n == 8 && r.check == "RP=CPs") {
            CHECK(r.data.find("(7,1)") != std::string::npos);
            saw_rp_witness = true;
        }
    }
    CHECK(saw_cp_witness);
    CHECK(saw_rp_witness);
}

TEST_CASE("cross-check suite is deterministic") {
    auto a = cross_check_suite({5}, 7);
    auto b = cross_check_suite({5}, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].check == b[i].check);
        CHECK(a[i].pass == b[i].pass);
        CHECK(a[i].data == b[i].data);
    }
}

TEST_CASE("export documents are stable") {
    FieldCtx F = make_field(5);
    SymRep rep = build_sym(P({4, 1}), F);
    std::string doc1 = export_sym(rep, F);
    std::string doc2 = export_sym(build_sym(P({4, 1}), F), F);
    CHECK(doc1 == doc2);
    CHECK(doc1.find("\"algebra\":\"sym\"") != std::string::npos);
    CHECK(doc1.find("\"lambda\":[4,1]") != std::string::npos);

    SergeevRep ser = build_sergeev(P({2, 1}), make_field(3));
    std::string sdoc = export_sergeev(ser, make_field(3));
    CHECK(sdoc.find("\"type\":\"M\"") != std::string::npos);
    CHECK(sdoc.find("\"x1\"") != std::string::npos);
}
