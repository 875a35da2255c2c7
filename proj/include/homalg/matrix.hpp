#pragma once

#include <cstdint>
#include <vector>

#include "homalg/field.hpp"

namespace homalg {

/// Sparse matrix in COO form, entries sorted col-major then row, no zero
/// scalars, no duplicates.
struct SparseMat {
    uint32_t rows = 0, cols = 0;
    std::vector<std::tuple<uint32_t, uint32_t, Scalar>> entries;  // (row, col, value)

    static SparseMat from_columns(uint32_t rows, const std::vector<std::vector<Scalar>>& cols,
                                  const Field& F);
    std::vector<std::vector<Scalar>> dense_columns(const Field& F) const;
};

/// Dense column-vector matrix utilities.  All elimination is exact and
/// deterministic: pivots are chosen at the smallest available row index.
class Eliminator {
public:
    explicit Eliminator(const Field& F, uint32_t rows) : F_(&F), rows_(rows) {}

    /// Reduce v against the stored echelon columns (in place).
    void reduce(std::vector<Scalar>& v) const;
    /// Reduce v; if nonzero, absorb it into the echelon and return true.
    bool insert(std::vector<Scalar> v);

    uint32_t rank() const { return uint32_t(basis_.size()); }
    const std::vector<int>& pivot_of_row() const { return pivotOfRow_; }

private:
    const Field* F_;
    uint32_t rows_;
    std::vector<std::vector<Scalar>> basis_;  // echelon columns, pivot entry = 1
    std::vector<int> pivotRow_;               // pivot row of basis_[k]
    std::vector<int> pivotOfRow_ = {};        // row -> basis index or -1 (lazy sized)
};

uint32_t rank_of(const SparseMat& M, const Field& F);
uint32_t rank_of_columns(const std::vector<std::vector<Scalar>>& cols, uint32_t rows, const Field& F);

/// Basis of the right kernel, canonicalized: one column per free variable
/// in ascending column order, scaled so the first nonzero entry is 1.
SparseMat kernel_basis(const SparseMat& M, const Field& F);
std::vector<std::vector<Scalar>> kernel_basis_columns(const std::vector<std::vector<Scalar>>& cols,
                                                      uint32_t rows, const Field& F);

/// Cokernel of M: dimension plus the projection matrix from the ambient
/// row space onto coset representatives (the non-pivot rows, smallest row
/// indices eliminated first).
struct CokernelData {
    uint32_t dimension = 0;
    std::vector<uint32_t> repRows;              // ambient rows representing the quotient basis
    std::vector<std::vector<Scalar>> projection;  // dimension x rows, row-major
};

CokernelData cokernel_data(const SparseMat& M, const Field& F);
CokernelData cokernel_of_columns(const std::vector<std::vector<Scalar>>& cols, uint32_t rows,
                                 const Field& F);

/// projection * v for a row-major projection block.
std::vector<Scalar> apply_rows(const std::vector<std::vector<Scalar>>& rowMajor,
                               const std::vector<Scalar>& v, const Field& F);

}  // namespace homalg
