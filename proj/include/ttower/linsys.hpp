#pragma once

#include <optional>
#include <vector>

#include "ttower/matrix.hpp"

namespace ttower {

/// Linear system whose unknowns are the entries of several matrix blocks and
/// whose equations have the form  sum_t  L_t * U_{b_t} * R_t  =  C.
/// Equations and unknowns keep their insertion order, so the canonical
/// solution and kernel are deterministic.
class BlockLinearSystem {
  public:
    explicit BlockLinearSystem(FieldSpec f) : field_(f) {}

    int add_block(int rows, int cols) {
        shapes_.emplace_back(rows, cols);
        offsets_.push_back(total_);
        total_ += rows * cols;
        return static_cast<int>(shapes_.size()) - 1;
    }

    struct Term {
        Matrix L;
        int block;
        Matrix R;
    };

    /// Adds the entry-wise equations of sum_t L_t U_{b_t} R_t = C.
    void add_equation(const std::vector<Term>& terms, const Matrix& C) {
        for (auto& t : terms) {
            if (t.L.rows() != C.rows() || t.R.cols() != C.cols() ||
                t.L.cols() != shapes_[t.block].first || t.R.rows() != shapes_[t.block].second)
                throw std::invalid_argument("BlockLinearSystem: term shape mismatch");
        }
        for (int i = 0; i < C.rows(); ++i)
            for (int j = 0; j < C.cols(); ++j) {
                std::vector<mpq_class> row(total_, mpq_class(0));
                for (auto& t : terms) {
                    auto [br, bc] = shapes_[t.block];
                    int off = offsets_[t.block];
                    for (int k = 0; k < br; ++k) {
                        if (t.L.at(i, k) == 0) continue;
                        for (int l = 0; l < bc; ++l) {
                            if (t.R.at(l, j) == 0) continue;
                            int idx = off + k * bc + l;
                            row[idx] = field_.add(row[idx], field_.mul(t.L.at(i, k), t.R.at(l, j)));
                        }
                    }
                }
                rows_.push_back(std::move(row));
                rhs_.push_back(C.at(i, j));
            }
    }

    int unknown_count() const { return total_; }

    Matrix homogeneous_matrix() const {
        Matrix m(static_cast<int>(rows_.size()), total_, field_);
        // Rows recorded before later add_block calls are shorter than total_;
        // the missing trailing coefficients are zero.
        for (size_t i = 0; i < rows_.size(); ++i)
            for (size_t j = 0; j < rows_[i].size(); ++j)
                m.at(static_cast<int>(i), static_cast<int>(j)) = rows_[i][j];
        return m;
    }

    Matrix rhs_column() const {
        Matrix c(static_cast<int>(rhs_.size()), 1, field_);
        for (size_t i = 0; i < rhs_.size(); ++i) c.at(static_cast<int>(i), 0) = rhs_[i];
        return c;
    }

    /// Canonical solution of the full affine system, or nullopt.
    std::optional<std::vector<Matrix>> solve() const {
        auto x = homogeneous_matrix().solve(rhs_column());
        if (!x) return std::nullopt;
        return extract(*x);
    }

    /// Unpack a coordinate column into the matrix blocks.
    std::vector<Matrix> extract(const Matrix& x) const {
        std::vector<Matrix> out;
        for (size_t b = 0; b < shapes_.size(); ++b) {
            auto [r, c] = shapes_[b];
            Matrix m(r, c, field_);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < c; ++j) m.at(i, j) = x.at(offsets_[b] + i * c + j, 0);
            out.push_back(std::move(m));
        }
        return out;
    }

  private:
    FieldSpec field_;
    std::vector<std::pair<int, int>> shapes_;
    std::vector<int> offsets_;
    int total_ = 0;
    std::vector<std::vector<mpq_class>> rows_;
    std::vector<mpq_class> rhs_;
};

}  // namespace ttower
