// Copyright 2026 The Undo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNDO_QMATH_MATRIX_H
#define UNDO_QMATH_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace undo {

using cplx = std::complex<double>;

/// Tolerance for exact-algebra checks (unitarity, normalization, Hermiticity).
inline constexpr double EXACT_TOL = 1e-12;

/// Dense row-major complex matrix. Sized for few-qubit work (dimension <= 8
/// for states, 64 entries at most in practice), so everything is by value.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    ComplexMatrix(size_t rows, size_t cols);
    ComplexMatrix(size_t rows, size_t cols, std::vector<cplx> entries);
    /// Square matrix from nested rows, e.g. {{1, 0}, {0, 1}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix zeros(size_t rows, size_t cols);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const cplx> entries() const { return entries_; }

    cplx &operator()(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const cplx &operator()(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;
    cplx trace() const;

    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator*(cplx scale) const;
    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(cplx scale);

    /// Matrix-vector product.
    std::vector<cplx> apply(std::span<const cplx> vec) const;

    /// Largest entrywise modulus of (this - other).
    double max_abs_diff(const ComplexMatrix &other) const;

    bool is_unitary(double tol = EXACT_TOL) const;
    bool is_hermitian(double tol = EXACT_TOL) const;

    std::string str() const;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<cplx> entries_;
};

inline ComplexMatrix operator*(cplx scale, const ComplexMatrix &m) {
    return m * scale;
}

/// Kronecker product. The left factor owns the most significant index bits,
/// so kron(A, B) acts with A on qubit 0 and B on qubit 1.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Determinant of a 2x2 matrix.
cplx det2(const ComplexMatrix &m);

/// Eigenvalues of a Hermitian matrix in ascending order (cyclic complex
/// Jacobi). Only the Hermitian part of the input is used.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m);

struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;  // columns are eigenvectors
};
HermitianEigen hermitian_eigen(const ComplexMatrix &m);

/// |Tr(A^dagger B)| / dim. Equals 1 exactly when A = e^{i alpha} B for
/// unitary arguments, so it compares gates while ignoring global phase.
double global_phase_fidelity(const ComplexMatrix &a, const ComplexMatrix &b);

namespace gates {
ComplexMatrix I();
ComplexMatrix X();
ComplexMatrix Y();
ComplexMatrix Z();
}  // namespace gates

}  // namespace undo

#endif
