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

#include "undo/qmath/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace undo {

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
}

ComplexMatrix::ComplexMatrix(size_t rows, size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) {
        throw std::invalid_argument(
            "ComplexMatrix: " + std::to_string(entries_.size()) + " entries for a " + std::to_string(rows) + "x" +
            std::to_string(cols) + " matrix");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n, n);
    for (size_t k = 0; k < n; k++) {
        m(k, k) = 1;
    }
    return m;
}

ComplexMatrix ComplexMatrix::zeros(size_t rows, size_t cols) {
    return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &e : out.entries_) {
        e = std::conj(e);
    }
    return out;
}

cplx ComplexMatrix::trace() const {
    if (!is_square()) {
        throw std::invalid_argument("trace of a non-square matrix");
    }
    cplx t = 0;
    for (size_t k = 0; k < rows_; k++) {
        t += (*this)(k, k);
    }
    return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product dimension mismatch");
    }
    ComplexMatrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t k = 0; k < cols_; k++) {
            cplx a = (*this)(r, k);
            if (a == cplx{0}) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; c++) {
                out(r, c) += a * other(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    ComplexMatrix out = *this;
    out += other;
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    ComplexMatrix out = *this;
    out += other * cplx{-1};
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx scale) const {
    ComplexMatrix out = *this;
    out *= scale;
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum dimension mismatch");
    }
    for (size_t k = 0; k < entries_.size(); k++) {
        entries_[k] += other.entries_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(cplx scale) {
    for (auto &e : entries_) {
        e *= scale;
    }
    return *this;
}

std::vector<cplx> ComplexMatrix::apply(std::span<const cplx> vec) const {
    if (vec.size() != cols_) {
        throw std::invalid_argument("matrix-vector dimension mismatch");
    }
    std::vector<cplx> out(rows_);
    for (size_t r = 0; r < rows_; r++) {
        cplx acc = 0;
        for (size_t c = 0; c < cols_; c++) {
            acc += (*this)(r, c) * vec[c];
        }
        out[r] = acc;
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("max_abs_diff dimension mismatch");
    }
    double worst = 0;
    for (size_t k = 0; k < entries_.size(); k++) {
        worst = std::max(worst, std::abs(entries_[k] - other.entries_[k]));
    }
    return worst;
}

bool ComplexMatrix::is_unitary(double tol) const {
    if (!is_square() || rows_ == 0) {
        return false;
    }
    return (adjoint() * *this).max_abs_diff(identity(rows_)) < tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    return is_square() && max_abs_diff(adjoint()) < tol;
}

std::string ComplexMatrix::str() const {
    std::stringstream ss;
    ss.precision(6);
    for (size_t r = 0; r < rows_; r++) {
        ss << (r == 0 ? "[[" : " [");
        for (size_t c = 0; c < cols_; c++) {
            if (c) {
                ss << ", ";
            }
            auto e = (*this)(r, c);
            ss << e.real() << (e.imag() < 0 ? "-" : "+") << std::abs(e.imag()) << "i";
        }
        ss << (r + 1 == rows_ ? "]]" : "]\n");
    }
    return ss.str();
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ar = 0; ar < a.rows(); ar++) {
        for (size_t ac = 0; ac < a.cols(); ac++) {
            cplx s = a(ar, ac);
            for (size_t br = 0; br < b.rows(); br++) {
                for (size_t bc = 0; bc < b.cols(); bc++) {
                    out(ar * b.rows() + br, ac * b.cols() + bc) = s * b(br, bc);
                }
            }
        }
    }
    return out;
}

cplx det2(const ComplexMatrix &m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw std::invalid_argument("det2 needs a 2x2 matrix");
    }
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

HermitianEigen hermitian_eigen(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw std::invalid_argument("hermitian_eigen of a non-square matrix");
    }
    size_t n = m.rows();
    ComplexMatrix a = (m + m.adjoint()) * cplx{0.5};
    ComplexMatrix v = ComplexMatrix::identity(n);

    // Cyclic Jacobi: each rotation zeroes a(p, q) after first making it real
    // with a diagonal phase.
    for (int sweep = 0; sweep < 100; sweep++) {
        double off = 0;
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                off += std::norm(a(p, q));
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (size_t p = 0; p < n; p++) {
            for (size_t q = p + 1; q < n; q++) {
                double mag = std::abs(a(p, q));
                if (mag < 1e-300) {
                    continue;
                }
                cplx phase = a(p, q) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2 * mag);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
                double c = 1 / std::sqrt(1 + t * t);
                double s = t * c;

                // Rotation G acts on columns p, q: G = [[c, s*phase], [-s*conj(phase), c]]
                // arranged so that (G^dagger A G)(p, q) = 0.
                cplx gpp = c;
                cplx gpq = s * phase;
                cplx gqp = -s * std::conj(phase);
                cplx gqq = c;
                for (size_t k = 0; k < n; k++) {
                    cplx akp = a(k, p);
                    cplx akq = a(k, q);
                    a(k, p) = akp * gpp + akq * gqp;
                    a(k, q) = akp * gpq + akq * gqq;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx apk = a(p, k);
                    cplx aqk = a(q, k);
                    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
                }
                for (size_t k = 0; k < n; k++) {
                    cplx vkp = v(k, p);
                    cplx vkq = v(k, q);
                    v(k, p) = vkp * gpp + vkq * gqp;
                    v(k, q) = vkp * gpq + vkq * gqq;
                }
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        return a(x, x).real() < a(y, y).real();
    });
    HermitianEigen result{std::vector<double>(n), ComplexMatrix(n, n)};
    for (size_t k = 0; k < n; k++) {
        result.values[k] = a(order[k], order[k]).real();
        for (size_t r = 0; r < n; r++) {
            result.vectors(r, k) = v(r, order[k]);
        }
    }
    return result;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &m) {
    return hermitian_eigen(m).values;
}

double global_phase_fidelity(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || !a.is_square()) {
        throw std::invalid_argument("global_phase_fidelity dimension mismatch");
    }
    return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

namespace gates {
ComplexMatrix I() {
    return {{1, 0}, {0, 1}};
}
ComplexMatrix X() {
    return {{0, 1}, {1, 0}};
}
ComplexMatrix Y() {
    return {{0, cplx{0, -1}}, {cplx{0, 1}, 0}};
}
ComplexMatrix Z() {
    return {{1, 0}, {0, -1}};
}
}  // namespace gates

}  // namespace undo
