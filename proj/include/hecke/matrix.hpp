#pragma once

#include <optional>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

/// Dense matrix over a Scalar field, row major.
class ScalarMatrix {
public:
    ScalarMatrix() : rows_(0), cols_(0), f_(nullptr) {}
    ScalarMatrix(const ScalarField* f, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ScalarField* field() const { return f_; }

    const Scalar& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    Scalar& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    static ScalarMatrix identity(const ScalarField* f, int n);
    ScalarMatrix transpose() const;
    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const Scalar& s) const;
    bool operator==(const ScalarMatrix& o) const;
    bool is_zero() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;  // M v

    /// exactly one nonzero per row and per column (any nonzero value)
    bool is_scaled_permutation() const;
    /// scaled permutation with every nonzero equal to one
    bool is_permutation_matrix() const;

    std::string str() const;

private:
    int rows_, cols_;
    const ScalarField* f_;
    std::vector<Scalar> a_;
};

enum class Pivoting { ByColumn, ByRow };

/// Exact rank. GenericQ matrices go through fraction-free (Bareiss)
/// elimination after row denominators are cleared; the other fields use
/// ordinary field elimination. Pivot choice: nonzero candidate of smallest
/// representation size.
long rank(const ScalarMatrix& m, Pivoting mode = Pivoting::ByColumn);

/// one solution of A x = b, if any
std::optional<std::vector<Scalar>> solve(const ScalarMatrix& A, const std::vector<Scalar>& b,
                                         Pivoting mode = Pivoting::ByColumn);

/// basis of the right kernel
std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& A);

/// deterministic basis of the column space (reduced column echelon vectors)
std::vector<std::vector<Scalar>> column_space_basis(const ScalarMatrix& A);

/// Incremental row-echelon accumulator for span computations. Vectors are
/// reduced against the pivots already stored; a nonzero remainder becomes a
/// new pivot row.
class SpanBasis {
public:
    SpanBasis(const ScalarField* f, int dim) : f_(f), dim_(dim) {}

    /// returns true when v enlarged the span
    bool insert(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
    long dim() const { return static_cast<long>(rows_.size()); }

private:
    void reduce(std::vector<Scalar>& v) const;
    const ScalarField* f_;
    int dim_;
    std::vector<std::vector<Scalar>> rows_;  // pivot-normalized, sorted by pivot column
    std::vector<int> pivots_;
};

}  // namespace hecke
