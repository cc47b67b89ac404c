#pragma once

#include "modrep/matrix.hpp"
#include "modrep/tableau.hpp"

#include <vector>

namespace modrep {

/// Irreducible F S_n module for n <= p, as one matrix per simple
/// transposition over F_{p^2}. For the boundary shapes (k, 1^{n-k}) at n = p
/// the stored basis is Std(lambda^-) with lambda^- = (k-1, 1^{n-k}) and the
/// last generator is the diagonal sign matrix read off the position of n-1.
struct SymRep {
    int p = 0;
    Partition lambda;
    bool hook_case = false;
    Partition basis_shape; // lambda, or lambda^- in the hook case
    std::vector<Tableau> basis;
    int dim = 0;
    std::vector<Mat> S; // S[k-1] is the action of s_k, 1 <= k <= n-1
};

/// 1 / (res(T(a+1)) - res(T(a))) in F_p; T straight standard, 1 <= a <= n-1.
Scalar rho(const Tableau& t, int a, const FieldCtx& F);

/// Closed-form dimension of D^lambda for n <= p.
unsigned long long dim_sym(const Partition& lam, int p);

SymRep build_sym(const Partition& lam, const FieldCtx& F);

/// Jucys-Murphy matrices L_1 = 0, L_k = sum of transpositions (m k), built
/// as words in the stored generators.
std::vector<Mat> jm_sym(const SymRep& rep, const FieldCtx& F);

/// dim Rad^lambda at n = p: C(n-2, k-1) on hooks (k, 1^{n-k}), 0 otherwise.
unsigned long long radical_dim(const Partition& lam, int p);

} // namespace modrep
