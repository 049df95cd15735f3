#include "hecke/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

ScalarMatrix::ScalarMatrix(const ScalarField* f, int rows, int cols)
    : rows_(rows), cols_(cols), f_(f),
      a_(static_cast<std::size_t>(rows) * cols, Scalar::zero(f)) {}

ScalarMatrix ScalarMatrix::identity(const ScalarField* f, int n) {
    ScalarMatrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix m(f_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_ || f_ != o.f_) throw std::invalid_argument("matrix shape/field mismatch");
    ScalarMatrix m(f_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& bkj = o.at(k, j);
                if (bkj.is_zero()) continue;
                m.at(i, j) += aik * bkj;
            }
        }
    }
    return m;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw std::invalid_argument("matrix shape/field mismatch");
    ScalarMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
    return m;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw std::invalid_argument("matrix shape/field mismatch");
    ScalarMatrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
    return m;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
    ScalarMatrix m = *this;
    for (auto& x : m.a_) x *= s;
    return m;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && f_ == o.f_ && a_ == o.a_;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<Scalar> ScalarMatrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Scalar> out(rows_, Scalar::zero(f_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

bool ScalarMatrix::is_scaled_permutation() const {
    if (rows_ != cols_) return false;
    std::vector<int> row_count(rows_, 0), col_count(cols_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) {
                ++row_count[i];
                ++col_count[j];
            }
    for (int i = 0; i < rows_; ++i)
        if (row_count[i] != 1 || col_count[i] != 1) return false;
    return true;
}

bool ScalarMatrix::is_permutation_matrix() const {
    if (!is_scaled_permutation()) return false;
    for (const auto& x : a_)
        if (!x.is_zero() && !x.is_one()) return false;
    return true;
}

std::string ScalarMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : " ");
        os << "]\n";
    }
    return os.str();
}

namespace {

// column-sweep elimination on a working copy; ByRow transposes first, so a
// single kernel serves both pivot orders
long rank_field_elim(ScalarMatrix m) {
    const ScalarField* f = m.field();
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            std::size_t sz = m.at(i, col).size_estimate();
            if (pivot < 0 || sz < best) {
                pivot = i;
                best = sz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) * inv;
            m.at(i, col) = Scalar::zero(f);
            for (int j = col + 1; j < m.cols(); ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= factor * m.at(r, j);
            }
        }
        ++r;
    }
    return r;
}

// fraction-free (Bareiss) elimination; entries must be polynomial-valued,
// which row denominator clearing guarantees for GenericQ
long rank_bareiss(ScalarMatrix m) {
    const ScalarField* f = m.field();
    for (int i = 0; i < m.rows(); ++i) {
        Poly den = Poly::constant(1);
        for (int j = 0; j < m.cols(); ++j)
            den = poly_lcm(den, std::get<RatFun>(m.at(i, j).value()).den);
        if (den.is_one()) continue;
        Scalar den_scalar = Scalar::zero(f);
        for (int d = 0; d <= den.degree(); ++d) {
            if (den.coeff(d) == 0) continue;
            den_scalar += Scalar::from_rational(f, den.coeff(d)) * Scalar::q_power(f, d);
        }
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) *= den_scalar;
    }
    int r = 0;
    Scalar prev = Scalar::one(f);
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int i = r; i < m.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            std::size_t sz = m.at(i, col).size_estimate();
            if (pivot < 0 || sz < best) {
                pivot = i;
                best = sz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        const Scalar piv = m.at(r, col);
        for (int i = r + 1; i < m.rows(); ++i) {
            const Scalar head = m.at(i, col);
            for (int j = col + 1; j < m.cols(); ++j) {
                Scalar num = piv * m.at(i, j) - head * m.at(r, j);
                m.at(i, j) = num / prev;  // exact by the Bareiss identity
            }
            m.at(i, col) = Scalar::zero(f);
        }
        prev = piv;
        ++r;
    }
    return r;
}

}  // namespace

long rank(const ScalarMatrix& m, Pivoting mode) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    ScalarMatrix work = mode == Pivoting::ByColumn ? m : m.transpose();
    if (m.field()->kind == FieldKind::GenericQ) return rank_bareiss(std::move(work));
    return rank_field_elim(std::move(work));
}

std::optional<std::vector<Scalar>> solve(const ScalarMatrix& A, const std::vector<Scalar>& b,
                                         Pivoting mode) {
    if (static_cast<int>(b.size()) != A.rows()) throw std::invalid_argument("rhs length mismatch");
    const ScalarField* f = A.field();
    // augmented row echelon; pivot scan order differs per mode to provide
    // genuinely distinct elimination paths for cross-checks
    ScalarMatrix m(f, A.rows(), A.cols() + 1);
    for (int i = 0; i < A.rows(); ++i) {
        for (int j = 0; j < A.cols(); ++j) m.at(i, j) = A.at(i, j);
        m.at(i, A.cols()) = b[i];
    }
    std::vector<int> pivot_col_of_row(A.rows(), -1);
    int r = 0;
    for (int col = 0; col < A.cols() && r < A.rows(); ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int i = r; i < A.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            std::size_t sz = m.at(i, col).size_estimate();
            bool better = pivot < 0 || (mode == Pivoting::ByColumn ? sz < best : true);
            if (better) {
                pivot = i;
                best = sz;
                if (mode == Pivoting::ByRow) break;  // first nonzero
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j <= A.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (int j = col; j <= A.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (int j = col; j <= A.cols(); ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= factor * m.at(r, j);
            }
        }
        pivot_col_of_row[r] = col;
        ++r;
    }
    // inconsistent when a zero row has nonzero rhs
    for (int i = r; i < A.rows(); ++i)
        if (!m.at(i, A.cols()).is_zero()) return std::nullopt;
    std::vector<Scalar> x(A.cols(), Scalar::zero(f));
    for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = m.at(i, A.cols());
    return x;
}

std::vector<std::vector<Scalar>> nullspace(const ScalarMatrix& A) {
    const ScalarField* f = A.field();
    ScalarMatrix m = A;
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int col = 0; col < A.cols() && r < A.rows(); ++col) {
        int pivot = -1;
        std::size_t best = 0;
        for (int i = r; i < A.rows(); ++i) {
            if (m.at(i, col).is_zero()) continue;
            std::size_t sz = m.at(i, col).size_estimate();
            if (pivot < 0 || sz < best) {
                pivot = i;
                best = sz;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < A.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (int j = col; j < A.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < A.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (int j = col; j < A.cols(); ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= factor * m.at(r, j);
            }
        }
        pivot_col_of_row.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(A.cols(), false);
    for (int c : pivot_col_of_row) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (int freec = 0; freec < A.cols(); ++freec) {
        if (is_pivot[freec]) continue;
        std::vector<Scalar> v(A.cols(), Scalar::zero(f));
        v[freec] = Scalar::one(f);
        for (int i = 0; i < r; ++i) v[pivot_col_of_row[i]] = -m.at(i, freec);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<std::vector<Scalar>> column_space_basis(const ScalarMatrix& A) {
    // echelonize the transpose; the nonzero rows form the basis
    ScalarMatrix m = A.transpose();
    const ScalarField* f = A.field();
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(r, j), m.at(pivot, j));
        Scalar inv = m.at(r, col).inverse();
        for (int j = col; j < m.cols(); ++j) m.at(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) {
                if (m.at(r, j).is_zero()) continue;
                m.at(i, j) -= factor * m.at(r, j);
            }
        }
        ++r;
    }
    std::vector<std::vector<Scalar>> basis;
    for (int i = 0; i < r; ++i) {
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        for (int j = 0; j < m.cols(); ++j) v[j] = m.at(i, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

void SpanBasis::reduce(std::vector<Scalar>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Scalar& lead = v[pivots_[k]];
        if (lead.is_zero()) continue;
        Scalar factor = lead;  // pivot rows are normalized to pivot value one
        for (int j = 0; j < dim_; ++j) {
            if (rows_[k][j].is_zero()) continue;
            v[j] -= factor * rows_[k][j];
        }
    }
}

bool SpanBasis::insert(std::vector<Scalar> v) {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("span vector length mismatch");
    reduce(v);
    int piv = -1;
    for (int j = 0; j < dim_; ++j)
        if (!v[j].is_zero()) {
            piv = j;
            break;
        }
    if (piv < 0) return false;
    Scalar inv = v[piv].inverse();
    for (auto& x : v) x *= inv;
    // keep existing rows reduced against the new pivot
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Scalar factor = rows_[k][piv];
        if (factor.is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j].is_zero()) continue;
            rows_[k][j] -= factor * v[j];
        }
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool SpanBasis::contains(std::vector<Scalar> v) const {
    reduce(v);
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace hecke
