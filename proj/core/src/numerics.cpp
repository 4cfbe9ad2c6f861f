#include "hotqubo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hotqubo {

void check_finite(const Vector& v, const char* what) {
    for (double x : v) {
        if (!std::isfinite(x)) {
            throw Error(std::string("non-finite entry in ") + what);
        }
    }
}

SymMatrix SymMatrix::identity(std::size_t n) {
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix SymMatrix::from_dense(const std::vector<Vector>& rows) {
    const std::size_t n = rows.size();
    SymMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) {
            throw DimensionMismatch("from_dense expects a square matrix");
        }
        for (std::size_t j = 0; j <= i; ++j) {
            m.set(i, j, 0.5 * (rows[i][j] + rows[j][i]));
        }
    }
    return m;
}

void SymMatrix::set(std::size_t i, std::size_t j, double value) {
    if (i >= n_ || j >= n_) {
        throw DimensionMismatch("SymMatrix::set index out of bounds");
    }
    if (!std::isfinite(value)) {
        throw Error("non-finite entry assigned to SymMatrix");
    }
    if (i >= j) {
        tri_[i * (i + 1) / 2 + j] = value;
    } else {
        tri_[j * (j + 1) / 2 + i] = value;
    }
}

double SymMatrix::max_diagonal() const {
    double m = 0.0;
    for (std::size_t i = 0; i < n_; ++i) m = std::max(m, (*this)(i, i));
    return m;
}

SymMatrix SymMatrix::scaled(double s) const {
    SymMatrix out(n_);
    for (std::size_t i = 0; i < tri_.size(); ++i) out.tri_[i] = s * tri_[i];
    return out;
}

CholeskyFactor cholesky(const SymMatrix& m) {
    const std::size_t n = m.dim();
    CholeskyFactor f;
    f.n_ = n;
    f.tri_.assign(n * (n + 1) / 2, 0.0);
    auto at = [&f](std::size_t i, std::size_t j) -> double& {
        return f.tri_[i * (i + 1) / 2 + j];
    };

    // Pivot tolerance relative to the largest diagonal entry of the input;
    // a zero matrix therefore fails on its first pivot.
    const double threshold = 1e-12 * std::max(m.max_diagonal(), 0.0);

    for (std::size_t j = 0; j < n; ++j) {
        double d = m(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= at(j, k) * at(j, k);
        if (!(d > threshold)) {
            throw NotPositiveDefinite("pivot " + std::to_string(j) +
                                      " is not positive");
        }
        const double ljj = std::sqrt(d);
        at(j, j) = ljj;
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
            at(i, j) = s / ljj;
        }
    }
    return f;
}

Vector solve(const CholeskyFactor& f, const Vector& rhs) {
    const std::size_t n = f.dim();
    if (rhs.size() != n) {
        throw DimensionMismatch("solve: rhs has length " +
                                std::to_string(rhs.size()) + ", factor dim " +
                                std::to_string(n));
    }
    Vector y(rhs);
    // L z = rhs
    for (std::size_t i = 0; i < n; ++i) {
        double s = y[i];
        for (std::size_t k = 0; k < i; ++k) s -= f.lower(i, k) * y[k];
        y[i] = s / f.lower(i, i);
    }
    // L^T x = z
    for (std::size_t ii = n; ii-- > 0;) {
        double s = y[ii];
        for (std::size_t k = ii + 1; k < n; ++k) s -= f.lower(k, ii) * y[k];
        y[ii] = s / f.lower(ii, ii);
    }
    return y;
}

Vector inverse_diagonal(const CholeskyFactor& f) {
    const std::size_t n = f.dim();
    Vector out(n);
    Vector unit(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        unit[i] = 1.0;
        out[i] = solve(f, unit)[i];
        unit[i] = 0.0;
    }
    return out;
}

double quad_form(const SymMatrix& m, const Vector& x) {
    const std::size_t n = m.dim();
    if (x.size() != n) {
        throw DimensionMismatch("quad_form: vector length " +
                                std::to_string(x.size()) + ", matrix dim " +
                                std::to_string(n));
    }
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            s += x[i] * m(i, j) * x[j];
        }
    }
    return s;
}

Vector mat_vec(const SymMatrix& m, const Vector& x) {
    const std::size_t n = m.dim();
    if (x.size() != n) {
        throw DimensionMismatch("mat_vec: vector length " +
                                std::to_string(x.size()) + ", matrix dim " +
                                std::to_string(n));
    }
    Vector out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

double dot(const Vector& a, const Vector& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: lengths differ");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace hotqubo
