#pragma once

/**
 * @file qmath.hpp
 * Small dense complex matrices for one- and two-qubit operator algebra.
 *
 * Basis ordering is |00>, |01>, |10>, |11> with the first (Alice) qubit as the
 * left tensor factor, i.e. entry[(2i+k),(2j+l)] of A (x) B is A[i,j] * B[k,l].
 */

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>

namespace qcausal {

using Complex = std::complex<double>;

/// Default absolute tolerance for comparisons of O(1) quantities.
inline constexpr double kTolerance = 1e-10;

/**
 * Dense row-major complex matrix with 2 or 4 rows and columns.
 *
 * Storage is inline (no allocation), so values are cheap to copy. Entries are
 * required to be finite.
 */
class ComplexMatrix {
  public:
    static constexpr std::size_t kMaxDim = 4;

    /// Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-major entries; the count must equal rows * cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::span<const Complex> entries);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::initializer_list<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] Complex operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }
    /// Bounds-checked access.
    [[nodiscard]] Complex at(std::size_t r, std::size_t c) const;

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return {data_.data(), rows_ * cols_};
    }

    friend ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);
    friend ComplexMatrix operator*(Complex s, const ComplexMatrix &a);
    friend ComplexMatrix operator*(const ComplexMatrix &a, Complex s) { return s * a; }
    friend ComplexMatrix operator-(const ComplexMatrix &a) { return Complex{-1.0} * a; }
    friend bool operator==(const ComplexMatrix &a, const ComplexMatrix &b) noexcept;

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::array<Complex, kMaxDim * kMaxDim> data_{};
};

/// Pauli and identity matrices.
ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

/// Standard matrix product. Throws InputError on a.cols != b.rows.
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);

/// Kronecker product of two 2x2 matrices (a-index major).
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Sum of diagonal entries. Throws InputError on non-square input.
Complex trace(const ComplexMatrix &a);

/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix &a);

/// Trace over the first qubit of a 4x4 operator: out[k,l] = sum_i m[(2i+k),(2i+l)].
ComplexMatrix partial_trace_A(const ComplexMatrix &m);

/// Projector |v><v| for a column vector v of length 2 or 4.
ComplexMatrix outer(std::span<const Complex> v);

[[nodiscard]] bool approx_equal(const ComplexMatrix &a, const ComplexMatrix &b,
                                double tol = kTolerance) noexcept;
[[nodiscard]] bool is_hermitian(const ComplexMatrix &a, double tol = kTolerance) noexcept;

/// Spectral decomposition of a 2x2 Hermitian matrix, eigenvalues ascending.
struct HermitianEigen2 {
    std::array<double, 2> values;
    /// Orthogonal projectors onto the eigenspaces; projectors[k] pairs with values[k].
    /// When the eigenvalues coincide projectors[0] is I and projectors[1] is zero.
    std::array<ComplexMatrix, 2> projectors;
};

/// Closed-form eigensolver. Throws InputError unless a is 2x2 Hermitian.
HermitianEigen2 eigh2(const ComplexMatrix &a);

} // namespace qcausal
