#pragma once

#include "modrep/sergeev.hpp"
#include "modrep/symrep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace modrep {

struct Violation {
    std::string relation;
    std::vector<int> indices;
    int row = 0; // coordinates of the first nonzero entry of the defect
    int col = 0;
};

/// Empty report <=> every checked identity holds in every matrix entry.
using ViolationReport = std::vector<Violation>;

/// Non-owning view of a represented module: generator matrices with their
/// parities, plus the grading involution (nullptr = trivial grading).
struct ModuleView {
    int dim = 0;
    std::vector<std::pair<const Mat*, bool>> gens; // (matrix, odd?)
    const Mat* parity = nullptr;
};

ModuleView view_of(const SymRep& rep);
ModuleView view_of(const SergeevRep& rep);

/// Materialized block-diagonal sum of two views; reducible control for the
/// submodule search.
struct OwnedModule {
    int dim = 0;
    std::vector<Mat> gens;
    std::vector<bool> odd;
    Mat parity;
    bool graded = false;
    ModuleView view() const;
};

OwnedModule direct_sum(const ModuleView& a, const ModuleView& b, const FieldCtx& F);

ViolationReport check_relations(const SymRep& rep, const FieldCtx& F);
ViolationReport check_relations(const SergeevRep& rep, const FieldCtx& F);

/// sym: each L_k must be diagonal. sergeev: L_k = X_k entrywise and X_1 = 0.
ViolationReport check_jm(const SymRep& rep, const FieldCtx& F);
ViolationReport check_jm(const SergeevRep& rep, const FieldCtx& F);

struct CommutantResult {
    int even_dim = 0;
    int odd_dim = 0;
    friend bool operator==(const CommutantResult&, const CommutantResult&) = default;
};

/// Dimensions of the graded endomorphism spaces: even solutions commute with
/// every generator and with the grading; odd ones anticommute with the odd
/// generators and the grading. (1,0) and (1,1) are the Schur outcomes.
CommutantResult super_commutant_dim(const ModuleView& view, const FieldCtx& F,
                                    int dim_cap = 128);

/// Seeded search for a proper nonzero graded invariant subspace: spins
/// standard basis vectors, random homogeneous vectors, and random generator
/// words applied to them. Returns a basis of the first witness found.
std::optional<std::vector<Vec>> find_proper_graded_submodule(
    const ModuleView& view, int trials, unsigned long long seed, const FieldCtx& F);

struct CrossCheckRow {
    int p = 0;
    int n = 0;
    std::string check;
    bool pass = false;
    std::string data;
};

/// Classification boundary checks (CP_p vs P_p, RP_p vs CP^s_p with the
/// boundary witnesses), enumeration-vs-formula counts for n <= p, and the
/// hook-length oracle for n <= 8.
std::vector<CrossCheckRow> cross_check_suite(const std::vector<int>& p_list, int n_max);

} // namespace modrep
