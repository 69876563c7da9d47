#include "qcausal/qmath.hpp"

#include <cmath>
#include <string>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {

void check_dim(std::size_t n, const char *what) {
    if (n != 2 && n != 4) {
        throw InputError(std::string("ComplexMatrix: ") + what + " must be 2 or 4, got " +
                         std::to_string(n));
    }
}

void check_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvariantError("ComplexMatrix: entries must be finite");
        }
    }
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_dim(rows, "rows");
    check_dim(cols, "cols");
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries)
    : ComplexMatrix(rows, cols) {
    if (entries.size() != rows * cols) {
        throw InputError("ComplexMatrix: expected " + std::to_string(rows * cols) +
                         " entries, got " + std::to_string(entries.size()));
    }
    check_finite(entries);
    std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::initializer_list<Complex> entries)
    : ComplexMatrix(rows, cols, std::span<const Complex>(entries.begin(), entries.size())) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.data_[i * n + i] = 1.0;
    }
    return m;
}

Complex ComplexMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) {
        throw InputError("ComplexMatrix::at: index out of range");
    }
    return (*this)(r, c);
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InputError("ComplexMatrix: shape mismatch in addition");
    }
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_ * a.cols_; ++i) {
        out.data_[i] = a.data_[i] + b.data_[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw InputError("ComplexMatrix: shape mismatch in subtraction");
    }
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_ * a.cols_; ++i) {
        out.data_[i] = a.data_[i] - b.data_[i];
    }
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix &a) {
    ComplexMatrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_ * a.cols_; ++i) {
        out.data_[i] = s * a.data_[i];
    }
    check_finite(out.entries());
    return out;
}

bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) noexcept {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows_ * a.cols_; ++i) {
        if (a.data_[i] != b.data_[i]) {
            return false;
        }
    }
    return true;
}

ComplexMatrix pauli_x() { return ComplexMatrix(2, 2, {0.0, 1.0, 1.0, 0.0}); }

ComplexMatrix pauli_y() {
    using namespace std::complex_literals;
    return ComplexMatrix(2, 2, {0.0, -1i, 1i, 0.0});
}

ComplexMatrix pauli_z() { return ComplexMatrix(2, 2, {1.0, 0.0, 0.0, -1.0}); }

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InputError("matmul: dimension mismatch (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.rows()) + ")");
    }
    std::array<Complex, 16> buf{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                buf[i * b.cols() + j] += aik * b(k, j);
            }
        }
    }
    return ComplexMatrix(a.rows(), b.cols(), std::span<const Complex>(buf.data(), a.rows() * b.cols()));
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != 2 || a.cols() != 2 || b.rows() != 2 || b.cols() != 2) {
        throw InputError("tensor: both factors must be 2x2");
    }
    std::array<Complex, 16> buf{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    buf[(2 * i + k) * 4 + (2 * j + l)] = a(i, j) * b(k, l);
                }
            }
        }
    }
    return ComplexMatrix(4, 4, buf);
}

Complex trace(const ComplexMatrix &a) {
    if (!a.is_square()) {
        throw InputError("trace: matrix is not square");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw InputError("trace_of_product: dimension mismatch");
    }
    Complex sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            sum += a(i, k) * b(k, i);
        }
    }
    return sum;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    std::array<Complex, 16> buf{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            buf[j * a.rows() + i] = std::conj(a(i, j));
        }
    }
    return ComplexMatrix(a.cols(), a.rows(), std::span<const Complex>(buf.data(), a.rows() * a.cols()));
}

ComplexMatrix partial_trace_A(const ComplexMatrix &m) {
    if (m.rows() != 4 || m.cols() != 4) {
        throw InputError("partial_trace_A: expected a 4x4 operator");
    }
    std::array<Complex, 4> buf{};
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
            buf[2 * k + l] = m(k, l) + m(2 + k, 2 + l);
        }
    }
    return ComplexMatrix(2, 2, buf);
}

ComplexMatrix outer(std::span<const Complex> v) {
    const std::size_t n = v.size();
    check_dim(n, "vector length");
    std::array<Complex, 16> buf{};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            buf[i * n + j] = v[i] * std::conj(v[j]);
        }
    }
    return ComplexMatrix(n, n, std::span<const Complex>(buf.data(), n * n));
}

bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b, double tol) noexcept {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - b(i, j)) > tol) {
                return false;
            }
        }
    }
    return true;
}

bool is_hermitian(const ComplexMatrix &a, double tol) noexcept {
    if (!a.is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i; j < a.cols(); ++j) {
            if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) {
                return false;
            }
        }
    }
    return true;
}

HermitianEigen2 eigh2(const ComplexMatrix &a) {
    if (a.rows() != 2 || a.cols() != 2 || !is_hermitian(a)) {
        throw InputError("eigh2: expected a 2x2 Hermitian matrix");
    }
    // a = m I + (bx sx + by sy + bz sz), eigenvalues m -/+ |b|, projectors (I -/+ b.s/|b|)/2.
    const double m = 0.5 * (a(0, 0).real() + a(1, 1).real());
    const double bz = 0.5 * (a(0, 0).real() - a(1, 1).real());
    const double bx = 0.5 * (a(0, 1).real() + a(1, 0).real());
    const double by = 0.5 * (a(1, 0).imag() - a(0, 1).imag());
    const double r = std::sqrt(bx * bx + by * by + bz * bz);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    if (r == 0.0) {
        return {{m, m}, {id, ComplexMatrix(2, 2)}};
    }
    const ComplexMatrix n = (1.0 / r) * (Complex{bx} * pauli_x() + Complex{by} * pauli_y() +
                                         Complex{bz} * pauli_z());
    return {{m - r, m + r}, {0.5 * (id - n), 0.5 * (id + n)}};
}

} // namespace qcausal
