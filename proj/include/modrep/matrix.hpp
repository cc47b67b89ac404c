#pragma once

#include "modrep/field.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace modrep {

using Vec = std::vector<Scalar>;

/// Sparse row-major matrix over F_{p^2}. Rows keep only nonzero entries,
/// sorted by column; every operation returns a normalized matrix, so
/// operator== is exact structural equality.
struct Mat {
    int nrows = 0;
    int ncols = 0;
    std::vector<std::vector<std::pair<int, Scalar>>> rows;

    Mat() = default;
    Mat(int r, int c) : nrows(r), ncols(c), rows(static_cast<std::size_t>(r)) {}

    static Mat zero(int r, int c) { return Mat(r, c); }
    static Mat identity(int n);
    static Mat diagonal(const Vec& d);

    /// Accumulate v into entry (r, c).
    void add_at(int r, int c, const Scalar& v, const FieldCtx& F);
    Scalar at(int r, int c) const;

    bool is_zero() const;
    std::size_t nnz() const;
    friend bool operator==(const Mat&, const Mat&) = default;

    Mat add(const Mat& o, const FieldCtx& F) const;
    Mat sub(const Mat& o, const FieldCtx& F) const;
    Mat negated(const FieldCtx& F) const;
    Mat mul(const Mat& o, const FieldCtx& F) const;
    Mat scaled(const Scalar& s, const FieldCtx& F) const;
    Vec apply(const Vec& v, const FieldCtx& F) const;

    /// Column coordinates of the first nonzero entry of (*this - o), if any.
    std::optional<std::pair<int, int>> first_difference(const Mat& o,
                                                        const FieldCtx& F) const;

    std::vector<std::vector<Scalar>> dense(const FieldCtx& F) const;
};

/// Kronecker product; basis order e_i (x) f_j -> index i * B.cols + j.
Mat kron(const Mat& A, const Mat& B, const FieldCtx& F);

/// Places B as a block with upper-left corner (r0, c0) inside A.
void add_block(Mat& A, int r0, int c0, const Mat& B, const FieldCtx& F);

bool vec_is_zero(const Vec& v);

/// Incremental row-echelon basis of a subspace. Optionally tracks, for every
/// echelon row, its coordinates in terms of the raw vectors fed in.
class EchelonBasis {
public:
    EchelonBasis(int ambient_dim, const FieldCtx& F, bool track_coords = false);

    /// Reduces v in place against the basis. If a nonzero residual is left it
    /// becomes a new echelon row and true is returned.
    bool insert(Vec v);

    /// Reduces v to its residual. If coords is non-null (requires tracking),
    /// receives x with v = sum_j x_j * raw_j + residual.
    Vec reduce(Vec v, Vec* coords = nullptr) const;

    int dim() const { return static_cast<int>(rows_.size()); }
    int ambient_dim() const { return ambient_; }
    const std::vector<Vec>& rows() const { return rows_; }

private:
    int ambient_;
    const FieldCtx* F_;
    bool track_;
    int raw_count_ = 0;
    std::vector<Vec> rows_;            // pivot entry normalized to one
    std::vector<int> pivots_;          // strictly increasing
    std::vector<Vec> coords_;          // per echelon row, in raw-vector basis
};

/// Canonical nullspace basis of a dense matrix (rows x cols), via RREF; basis
/// vectors indexed by free columns, identity pattern on the free positions.
std::vector<Vec> nullspace(std::vector<Vec> rows, int cols, const FieldCtx& F);

int rank_of(std::vector<Vec> rows, const FieldCtx& F);

} // namespace modrep
