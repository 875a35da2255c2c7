#include "homalg/matrix.hpp"

#include <algorithm>

namespace homalg {

SparseMat SparseMat::from_columns(uint32_t rows, const std::vector<std::vector<Scalar>>& cols,
                                  const Field& F) {
    SparseMat M;
    M.rows = rows;
    M.cols = uint32_t(cols.size());
    for (uint32_t c = 0; c < cols.size(); ++c)
        for (uint32_t r = 0; r < rows; ++r)
            if (!F.is_zero(cols[c][r])) M.entries.emplace_back(r, c, cols[c][r]);
    std::sort(M.entries.begin(), M.entries.end(),
              [](const auto& a, const auto& b) {
                  return std::make_pair(std::get<1>(a), std::get<0>(a)) <
                         std::make_pair(std::get<1>(b), std::get<0>(b));
              });
    return M;
}

std::vector<std::vector<Scalar>> SparseMat::dense_columns(const Field& F) const {
    std::vector<std::vector<Scalar>> out(cols, std::vector<Scalar>(rows, F.zero()));
    for (auto& [r, c, v] : entries) {
        if (r >= rows || c >= cols) throw Error(ErrorKind::InvalidInput, "matrix entry out of range");
        out[c][r] = v;
    }
    return out;
}

void Eliminator::reduce(std::vector<Scalar>& v) const {
    for (size_t k = 0; k < basis_.size(); ++k) {
        const Scalar& lead = v[pivotRow_[k]];
        if (F_->is_zero(lead)) continue;
        Scalar m = lead;  // basis pivot is normalized to 1
        for (uint32_t r = 0; r < rows_; ++r)
            if (!F_->is_zero(basis_[k][r])) F_->submul(v[r], m, basis_[k][r]);
    }
}

bool Eliminator::insert(std::vector<Scalar> v) {
    reduce(v);
    int pivot = -1;
    for (uint32_t r = 0; r < rows_; ++r)
        if (!F_->is_zero(v[r])) {
            pivot = int(r);
            break;
        }
    if (pivot < 0) return false;
    Scalar inv = F_->inv(v[pivot]);
    for (uint32_t r = 0; r < rows_; ++r)
        if (!F_->is_zero(v[r])) v[r] = F_->mul(v[r], inv);
    // back-substitute into earlier columns to keep the echelon reduced
    for (size_t k = 0; k < basis_.size(); ++k) {
        Scalar m = basis_[k][pivot];
        if (F_->is_zero(m)) continue;
        for (uint32_t r = 0; r < rows_; ++r)
            if (!F_->is_zero(v[r])) F_->submul(basis_[k][r], m, v[r]);
    }
    basis_.push_back(std::move(v));
    pivotRow_.push_back(pivot);
    return true;
}

uint32_t rank_of_columns(const std::vector<std::vector<Scalar>>& cols, uint32_t rows, const Field& F) {
    Eliminator e(F, rows);
    for (auto& c : cols) e.insert(c);
    return e.rank();
}

uint32_t rank_of(const SparseMat& M, const Field& F) {
    return rank_of_columns(M.dense_columns(F), M.rows, F);
}

namespace {

/// Row echelon of the column list, pivot = smallest unused row per column
/// in order; returns pivot row per column (-1 for free columns) plus the
/// fully reduced columns.
struct RowEchelon {
    std::vector<std::vector<Scalar>> cols;
    std::vector<int> pivotRowOfCol;
    std::vector<int> pivotColOfRow;
};

RowEchelon row_echelon(std::vector<std::vector<Scalar>> cols, uint32_t rows, const Field& F) {
    RowEchelon E;
    E.pivotRowOfCol.assign(cols.size(), -1);
    E.pivotColOfRow.assign(rows, -1);
    std::vector<size_t> pivotCols;
    for (size_t c = 0; c < cols.size(); ++c) {
        auto& v = cols[c];
        // eliminate with existing pivots
        for (size_t k : pivotCols) {
            int pr = E.pivotRowOfCol[int(k)];
            const Scalar& lead = v[pr];
            if (F.is_zero(lead)) continue;
            Scalar m = lead;
            for (uint32_t r = 0; r < rows; ++r)
                if (!F.is_zero(cols[k][r])) F.submul(v[r], m, cols[k][r]);
        }
        int pivot = -1;
        for (uint32_t r = 0; r < rows; ++r)
            if (!F.is_zero(v[r])) {
                pivot = int(r);
                break;
            }
        if (pivot < 0) continue;
        Scalar inv = F.inv(v[pivot]);
        for (uint32_t r = 0; r < rows; ++r)
            if (!F.is_zero(v[r])) v[r] = F.mul(v[r], inv);
        // clear this row in earlier pivot columns
        for (size_t k : pivotCols) {
            Scalar m = cols[k][pivot];
            if (F.is_zero(m)) continue;
            for (uint32_t r = 0; r < rows; ++r)
                if (!F.is_zero(v[r])) F.submul(cols[k][r], m, v[r]);
        }
        E.pivotRowOfCol[c] = pivot;
        E.pivotColOfRow[pivot] = int(c);
        pivotCols.push_back(c);
    }
    E.cols = std::move(cols);
    return E;
}

}  // namespace

std::vector<std::vector<Scalar>> kernel_basis_columns(const std::vector<std::vector<Scalar>>& colsIn,
                                                      uint32_t rows, const Field& F) {
    // Solve M x = 0 by row-reducing M (as rows over columns): transpose view.
    // We eliminate on rows: build the reduced row echelon form.
    size_t n = colsIn.size();
    // rows of M as vectors of length n
    std::vector<std::vector<Scalar>> rowVecs(rows, std::vector<Scalar>(n, F.zero()));
    for (size_t c = 0; c < n; ++c)
        for (uint32_t r = 0; r < rows; ++r) rowVecs[r][c] = colsIn[c][r];

    std::vector<int> pivotColOfRank;  // pivot column per eliminated row
    std::vector<std::vector<Scalar>> echelon;
    for (uint32_t r = 0; r < rows; ++r) {
        auto v = rowVecs[r];
        for (size_t k = 0; k < echelon.size(); ++k) {
            const Scalar& lead = v[pivotColOfRank[k]];
            if (F.is_zero(lead)) continue;
            Scalar m = lead;
            for (size_t c = 0; c < n; ++c)
                if (!F.is_zero(echelon[k][c])) F.submul(v[c], m, echelon[k][c]);
        }
        int pivot = -1;
        for (size_t c = 0; c < n; ++c)
            if (!F.is_zero(v[c])) {
                pivot = int(c);
                break;
            }
        if (pivot < 0) continue;
        Scalar inv = F.inv(v[pivot]);
        for (size_t c = 0; c < n; ++c)
            if (!F.is_zero(v[c])) v[c] = F.mul(v[c], inv);
        for (size_t k = 0; k < echelon.size(); ++k) {
            Scalar m = echelon[k][pivot];
            if (F.is_zero(m)) continue;
            for (size_t c = 0; c < n; ++c)
                if (!F.is_zero(v[c])) F.submul(echelon[k][c], m, v[c]);
        }
        echelon.push_back(std::move(v));
        pivotColOfRank.push_back(pivot);
    }

    std::vector<bool> isPivotCol(n, false);
    for (int c : pivotColOfRank) isPivotCol[c] = true;

    std::vector<std::vector<Scalar>> kernel;
    for (size_t fc = 0; fc < n; ++fc) {
        if (isPivotCol[fc]) continue;
        std::vector<Scalar> v(n, F.zero());
        v[fc] = F.one();
        for (size_t k = 0; k < echelon.size(); ++k)
            v[pivotColOfRank[k]] = F.neg(echelon[k][fc]);
        // scale so the first nonzero entry is 1
        for (size_t c = 0; c < n; ++c)
            if (!F.is_zero(v[c])) {
                Scalar inv = F.inv(v[c]);
                for (size_t d = c; d < n; ++d)
                    if (!F.is_zero(v[d])) v[d] = F.mul(v[d], inv);
                break;
            }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

SparseMat kernel_basis(const SparseMat& M, const Field& F) {
    auto cols = kernel_basis_columns(M.dense_columns(F), M.rows, F);
    return SparseMat::from_columns(M.cols, cols, F);
}

CokernelData cokernel_of_columns(const std::vector<std::vector<Scalar>>& cols, uint32_t rows,
                                 const Field& F) {
    RowEchelon E = row_echelon(cols, rows, F);
    CokernelData out;
    for (uint32_t r = 0; r < rows; ++r)
        if (E.pivotColOfRow[r] < 0) out.repRows.push_back(r);
    out.dimension = uint32_t(out.repRows.size());
    // projection of e_j: reduce e_j modulo the column span, keep non-pivot rows
    out.projection.assign(out.dimension, std::vector<Scalar>(rows, F.zero()));
    for (uint32_t j = 0; j < rows; ++j) {
        if (E.pivotColOfRow[j] < 0) {
            // e_j is already a representative
            for (uint32_t k = 0; k < out.dimension; ++k)
                if (out.repRows[k] == j) out.projection[k][j] = F.one();
            continue;
        }
        // e_j = pivot column - (rest); class of e_j = -sum of non-pivot rows of that column
        const auto& col = E.cols[E.pivotColOfRow[j]];
        for (uint32_t k = 0; k < out.dimension; ++k) {
            const Scalar& v = col[out.repRows[k]];
            if (!F.is_zero(v)) out.projection[k][j] = F.neg(v);
        }
    }
    return out;
}

CokernelData cokernel_data(const SparseMat& M, const Field& F) {
    return cokernel_of_columns(M.dense_columns(F), M.rows, F);
}

std::vector<Scalar> apply_rows(const std::vector<std::vector<Scalar>>& rowMajor,
                               const std::vector<Scalar>& v, const Field& F) {
    std::vector<Scalar> out(rowMajor.size(), F.zero());
    for (size_t i = 0; i < rowMajor.size(); ++i) {
        Scalar acc = F.zero();
        for (size_t j = 0; j < v.size(); ++j)
            if (!F.is_zero(rowMajor[i][j]) && !F.is_zero(v[j]))
                acc = F.add(acc, F.mul(rowMajor[i][j], v[j]));
        out[i] = std::move(acc);
    }
    return out;
}

}  // namespace homalg
