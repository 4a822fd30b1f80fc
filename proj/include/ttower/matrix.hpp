#pragma once

#include <cassert>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ttower/field.hpp"

namespace ttower {

/// Dense exact matrix over a FieldSpec.  Row-major storage.  All elimination
/// routines use the deterministic first-nonzero-pivot rule so that every
/// derived basis (kernels, complements, canonical solutions) is reproducible
/// byte for byte across runs.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, FieldSpec f)
        : rows_(rows), cols_(cols), field_(f), a_(static_cast<size_t>(rows) * cols, mpq_class(0)) {}

    static Matrix identity(int n, FieldSpec f) {
        Matrix m(n, n, f);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Matrix zero(int r, int c, FieldSpec f) { return Matrix(r, c, f); }

    static Matrix from_rows(const std::vector<std::vector<mpq_class>>& rows, FieldSpec f) {
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        Matrix m(r, c, f);
        for (int i = 0; i < r; ++i) {
            assert(static_cast<int>(rows[i].size()) == c);
            for (int j = 0; j < c; ++j) m.at(i, j) = f.normalize(rows[i][j]);
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    mpq_class& at(int i, int j) {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }
    const mpq_class& at(int i, int j) const {
        assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    void set(int i, int j, const mpq_class& v) { at(i, j) = field_.normalize(v); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Matrix operator*(const Matrix& o) const {
        assert(cols_ == o.rows_);
        Matrix r(rows_, o.cols_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const mpq_class& aik = at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o.at(k, j) == 0) continue;
                    r.at(i, j) += aik * o.at(k, j);
                }
            }
        for (auto& x : r.a_) x = field_.normalize(x);
        return r;
    }

    Matrix operator+(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.add(a_[i], o.a_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.sub(a_[i], o.a_[i]);
        return r;
    }

    Matrix scaled(const mpq_class& c) const {
        Matrix r(rows_, cols_, field_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_.mul(a_[i], c);
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, field_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    static Matrix hstack(const Matrix& a, const Matrix& b) {
        assert(a.rows_ == b.rows_);
        Matrix r(a.rows_, a.cols_ + b.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i) {
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
            for (int j = 0; j < b.cols_; ++j) r.at(i, a.cols_ + j) = b.at(i, j);
        }
        return r;
    }

    static Matrix vstack(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.cols_);
        Matrix r(a.rows_ + b.rows_, a.cols_, a.field_);
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) r.at(a.rows_ + i, j) = b.at(i, j);
        return r;
    }

    /// Block-diagonal assembly.
    static Matrix block_diag(const std::vector<Matrix>& blocks, FieldSpec f) {
        int R = 0, C = 0;
        for (const auto& b : blocks) { R += b.rows_; C += b.cols_; }
        Matrix r(R, C, f);
        int ro = 0, co = 0;
        for (const auto& b : blocks) {
            for (int i = 0; i < b.rows_; ++i)
                for (int j = 0; j < b.cols_; ++j) r.at(ro + i, co + j) = b.at(i, j);
            ro += b.rows_;
            co += b.cols_;
        }
        return r;
    }

    Matrix submatrix(int r0, int c0, int nr, int nc) const {
        Matrix r(nr, nc, field_);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    Matrix col(int j) const { return submatrix(0, j, rows_, 1); }
    Matrix row(int i) const { return submatrix(i, 0, 1, cols_); }

    std::vector<mpq_class> col_vec(int j) const {
        std::vector<mpq_class> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
        return v;
    }

    static Matrix from_col(const std::vector<mpq_class>& v, FieldSpec f) {
        Matrix m(static_cast<int>(v.size()), 1, f);
        for (int i = 0; i < m.rows_; ++i) m.at(i, 0) = f.normalize(v[i]);
        return m;
    }

    /// In-place reduced row echelon form; returns pivot column indices.
    /// Pivot choice: scan columns left to right, take the FIRST row (top-down)
    /// with a nonzero entry.
    std::vector<int> rref_in_place() {
        std::vector<int> pivots;
        int pr = 0;
        for (int pc = 0; pc < cols_ && pr < rows_; ++pc) {
            int sel = -1;
            for (int i = pr; i < rows_; ++i)
                if (at(i, pc) != 0) { sel = i; break; }
            if (sel < 0) continue;
            if (sel != pr)
                for (int j = 0; j < cols_; ++j) std::swap(at(sel, j), at(pr, j));
            mpq_class inv = field_.inv(at(pr, pc));
            for (int j = pc; j < cols_; ++j) at(pr, j) = field_.mul(at(pr, j), inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == pr || at(i, pc) == 0) continue;
                mpq_class c = at(i, pc);
                for (int j = pc; j < cols_; ++j)
                    at(i, j) = field_.sub(at(i, j), field_.mul(c, at(pr, j)));
            }
            pivots.push_back(pc);
            ++pr;
        }
        return pivots;
    }

    Matrix rref(std::vector<int>* pivots_out = nullptr) const {
        Matrix m = *this;
        auto p = m.rref_in_place();
        if (pivots_out) *pivots_out = p;
        return m;
    }

    int rank() const {
        std::vector<int> p;
        rref(&p);
        return static_cast<int>(p.size());
    }

    /// Basis of ker(A) as columns of the result (cols = nullity).
    /// Free variables are taken in increasing column order; each basis vector
    /// has a 1 in its free slot — the standard canonical kernel basis.
    Matrix kernel_basis() const {
        std::vector<int> pivots;
        Matrix R = rref(&pivots);
        std::vector<bool> is_pivot(cols_, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<int> free_cols;
        for (int j = 0; j < cols_; ++j)
            if (!is_pivot[j]) free_cols.push_back(j);
        Matrix K(cols_, static_cast<int>(free_cols.size()), field_);
        for (size_t fi = 0; fi < free_cols.size(); ++fi) {
            int fc = free_cols[fi];
            K.at(fc, static_cast<int>(fi)) = 1;
            for (size_t pi = 0; pi < pivots.size(); ++pi)
                K.at(pivots[pi], static_cast<int>(fi)) = field_.neg(R.at(static_cast<int>(pi), fc));
        }
        return K;
    }

    /// Canonical solution of A x = b (free variables set to 0), or nullopt.
    std::optional<Matrix> solve(const Matrix& b) const {
        assert(b.rows_ == rows_ && b.cols_ == 1);
        Matrix aug = hstack(*this, b);
        std::vector<int> pivots;
        Matrix R = aug.rref(&pivots);
        for (int p : pivots)
            if (p == cols_) return std::nullopt;  // inconsistent
        Matrix x(cols_, 1, field_);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            x.at(pivots[pi], 0) = R.at(static_cast<int>(pi), cols_);
        return x;
    }

    /// Canonical solution of A X = B columnwise, or nullopt if any column fails.
    std::optional<Matrix> solve_many(const Matrix& B) const {
        assert(B.rows_ == rows_);
        Matrix X(cols_, B.cols_, field_);
        for (int j = 0; j < B.cols_; ++j) {
            auto x = solve(B.col(j));
            if (!x) return std::nullopt;
            for (int i = 0; i < cols_; ++i) X.at(i, j) = x->at(i, 0);
        }
        return X;
    }

    /// Columns of A restricted to an independent spanning subset, in original
    /// column order (the pivot columns of A).
    Matrix column_space_basis() const {
        std::vector<int> pivots;
        rref(&pivots);
        Matrix B(rows_, static_cast<int>(pivots.size()), field_);
        for (size_t k = 0; k < pivots.size(); ++k)
            for (int i = 0; i < rows_; ++i) B.at(i, static_cast<int>(k)) = at(i, pivots[k]);
        return B;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (int i = 0; i < rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (int j = 0; j < cols_; ++j) os << (j ? " " : "[") << at(i, j).get_str();
            os << "]" << (i + 1 == rows_ ? "]" : "\n");
        }
        if (rows_ == 0) os << "[]";
        return os.str();
    }

  private:
    int rows_ = 0, cols_ = 0;
    FieldSpec field_;
    std::vector<mpq_class> a_;
};

/// Data of a quotient V / im(S) of V = k^n by a subspace given as columns of S:
/// q : V -> k^m with ker q = im S, and a section e : k^m -> V with q*e = id.
struct QuotientMap {
    Matrix q;  // m x n
    Matrix e;  // n x m
};

/// Deterministic construction of the quotient of k^n by the column space of S.
/// The section picks the non-pivot coordinate subspace of a row-reduced
/// complement, so repeated runs agree exactly.
inline QuotientMap quotient_by_subspace(const Matrix& S) {
    const FieldSpec f = S.field();
    int n = S.rows();
    // Row-reduce S^T: rows span the subspace; pivot columns of the rref mark
    // coordinates that can be eliminated, non-pivot coordinates survive in the
    // quotient.
    std::vector<int> pivots;
    Matrix R = S.transpose().rref(&pivots);
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> freec;
    for (int j = 0; j < n; ++j)
        if (!is_pivot[j]) freec.push_back(j);
    int m = static_cast<int>(freec.size());
    Matrix q(m, n, f), e(n, m, f);
    // q reads off the free coordinates after eliminating pivot coordinates via
    // the rref rows: x_p = -sum over free j of R[p_row][j] * x_j on im S, so the
    // functional x_j + sum_p R[p_row][j] x_p kills the subspace.
    for (int k = 0; k < m; ++k) {
        q.at(k, freec[k]) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            q.at(k, pivots[pi]) = f.neg(R.at(static_cast<int>(pi), freec[k]));
        e.at(freec[k], k) = 1;
    }
    return {q, e};
}

}  // namespace ttower
