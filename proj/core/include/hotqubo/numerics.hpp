#pragma once

#include <cstddef>
#include <vector>

#include "hotqubo/errors.hpp"

namespace hotqubo {

using Vector = std::vector<double>;

/// Throws Error if any entry is NaN or infinite.
void check_finite(const Vector& v, const char* what);

/// Dense symmetric matrix; only the lower triangle is stored, so the
/// symmetry invariant holds by construction. Entries must stay finite.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t n) : n_(n), tri_(n * (n + 1) / 2, 0.0) {}

    static SymMatrix identity(std::size_t n);
    /// Builds from a full dense row-major matrix; off-triangle values are
    /// averaged into the stored triangle.
    static SymMatrix from_dense(const std::vector<Vector>& rows);

    std::size_t dim() const { return n_; }

    double operator()(std::size_t i, std::size_t j) const {
        return i >= j ? tri_[i * (i + 1) / 2 + j] : tri_[j * (j + 1) / 2 + i];
    }

    /// Sets entry (i, j) and, implicitly, (j, i).
    void set(std::size_t i, std::size_t j, double value);

    double max_diagonal() const;

    /// Returns s * this.
    SymMatrix scaled(double s) const;

private:
    std::size_t n_ = 0;
    std::vector<double> tri_;
};

/// Lower-triangular Cholesky factor L with L * L^T equal to the source
/// matrix; the diagonal of L is strictly positive.
class CholeskyFactor {
public:
    std::size_t dim() const { return n_; }

    /// Entry L(i, j) for i >= j; zero above the diagonal.
    double lower(std::size_t i, std::size_t j) const {
        return i >= j ? tri_[i * (i + 1) / 2 + j] : 0.0;
    }

private:
    friend CholeskyFactor cholesky(const SymMatrix& m);
    std::size_t n_ = 0;
    std::vector<double> tri_;
};

/// Factors m = L * L^T. A pivot at or below 1e-12 times the largest
/// diagonal entry of m raises NotPositiveDefinite; success doubles as the
/// positive-definiteness certificate used throughout the library.
CholeskyFactor cholesky(const SymMatrix& m);

/// Solves (L * L^T) y = rhs by forward and back substitution.
Vector solve(const CholeskyFactor& f, const Vector& rhs);

/// diag(M^-1) for the factored matrix M, one unit-vector solve per column.
/// All entries are positive for a valid factor.
Vector inverse_diagonal(const CholeskyFactor& f);

/// x^T m x, evaluated as the explicit double sum.
double quad_form(const SymMatrix& m, const Vector& x);

/// m * x.
Vector mat_vec(const SymMatrix& m, const Vector& x);

double dot(const Vector& a, const Vector& b);

}  // namespace hotqubo
