#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "deficitlab/errors.hpp"

namespace deficitlab {

using Complex = std::complex<double>;

enum class Subsystem { A, B };

/// Dense complex matrix, row-major. For bipartite operators the basis
/// index of |i_A> ⊗ |j_B> is i_A * dB + j_B.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);
    /// Outer product |v><w| of two column vectors.
    static ComplexMatrix outer(const std::vector<Complex>& v, const std::vector<Complex>& w);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix operator+(const ComplexMatrix& o) const;
    ComplexMatrix operator-(const ComplexMatrix& o) const;
    ComplexMatrix operator*(const ComplexMatrix& o) const;
    ComplexMatrix operator*(Complex s) const;
    ComplexMatrix& operator+=(const ComplexMatrix& o);

    /// Conjugate transpose.
    ComplexMatrix dagger() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix transpose() const;

    Complex trace() const;
    double frobeniusNorm() const;
    double maxAbs() const;
    /// max_{ij} |this_{ij} - o_{ij}|
    double maxAbsDiff(const ComplexMatrix& o) const;

    bool isHermitian(double tol) const;
    /// (m + m†)/2
    ComplexMatrix hermitianPart() const;

    /// Throws ValidationError on NaN/Inf entries.
    void checkFinite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

inline ComplexMatrix operator*(Complex s, const ComplexMatrix& m) { return m * s; }

/// Kronecker product: (a⊗b)[(i*rb+k),(j*cb+l)] = a[i,j] * b[k,l].
ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product of column vectors.
std::vector<Complex> tensorKet(const std::vector<Complex>& a, const std::vector<Complex>& b);

/// Partial trace of a (dA*dB)-square matrix over the discarded subsystem.
ComplexMatrix partialTrace(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Subsystem keep);

/// Transpose on one tensor factor of a (dA*dB)-square matrix.
ComplexMatrix partialTranspose(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Subsystem which);

} // namespace deficitlab
