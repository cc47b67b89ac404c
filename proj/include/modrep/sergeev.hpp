#pragma once

#include "modrep/matrix.hpp"
#include "modrep/weights.hpp"

#include <vector>

namespace modrep {

enum class SuperType { M, Q };

inline const char* to_string(SuperType t) { return t == SuperType::M ? "M" : "Q"; }

/// q(i) = i(i+1) mod p; injective on 0..(p-1)/2.
int q_val(int i, int p);

/// Concrete realization of L(i_1) (*) ... (*) L(i_n): one matrix per x_k and
/// c_k, the parity involution, and (type Q only) an odd endomorphism theta
/// with theta^2 = 1.
struct CliffordModule {
    int p = 0;
    Weight weight;
    int dim = 0;
    Mat parity;
    std::vector<Mat> X;
    std::vector<Mat> C;
    SuperType type = SuperType::M;
    Mat theta; // meaningful iff type == Q
};

/// Iterated super tensor product, splitting an irreducible half out of each
/// Q (x) Q step as the +omega eigenspace of theta (x) theta'.
CliffordModule build_clifford(const Weight& w, const FieldCtx& F);

/// Xi operator of the acting copy, through position indices a, b (1-based):
/// -((X_a + X_b) + C_a C_b (X_a - X_b)) / (q(w_a) - q(w_b)).
Mat xi_block(const CliffordModule& U, int a, int b, const FieldCtx& F);

/// Canonical square root of 1 - 2(q(ia)+q(ib)) / (q(ia)-q(ib))^2; symmetric
/// in its arguments.
Scalar omega_scalar(int ia, int ib, const FieldCtx& F);

/// Irreducible Y_n module V^xi for n <= p: one copy of the base Clifford
/// module per shifted p-standard tableau, c/x acting with twisted indices and
/// s_k acting by Xi on the diagonal plus Omega between admissible copies.
struct SergeevRep {
    int p = 0;
    Partition xi;
    std::vector<Tableau> blocks;
    std::vector<std::vector<int>> block_perms; // tau with block = tau . T^xi
    std::vector<Weight> block_weights;
    CliffordModule base;
    int block_dim = 0;
    int dim = 0;
    SuperType type = SuperType::M;
    Mat parity;
    std::vector<Mat> S; // s_1 .. s_{n-1}
    std::vector<Mat> C; // c_1 .. c_n
    std::vector<Mat> X; // x_1 .. x_n (x_1 = 0)
};

struct SergeevDim {
    unsigned long long dim = 0;
    SuperType type = SuperType::M;
};

/// Closed-form dimension and type of M^xi = V^xi.
SergeevDim dim_sergeev(const Partition& xi, int p);

SergeevRep build_sergeev(const Partition& xi, const FieldCtx& F);

/// L_k = sum_{j<k} (1 + c_j c_k)(j k), assembled from the stored generators.
std::vector<Mat> jm_sergeev(const SergeevRep& rep, const FieldCtx& F);

} // namespace modrep
