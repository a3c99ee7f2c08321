#include "deficitlab/complex_matrix.hpp"

#include <cmath>
#include <limits>

namespace deficitlab {

namespace {
constexpr std::size_t kMaxSide = 1u << 12;

void requireSameShape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
}
} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw ShapeError("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                         " does not match " + std::to_string(rows_) + "x" + std::to_string(cols_));
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("ComplexMatrix: ragged initializer");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(const std::vector<Complex>& v, const std::vector<Complex>& w) {
    ComplexMatrix m(v.size(), w.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < w.size(); ++j) m(i, j) = v[i] * std::conj(w[j]);
    return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
    requireSameShape(*this, o, "add");
    ComplexMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
    requireSameShape(*this, o, "sub");
    ComplexMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    requireSameShape(*this, o, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeError("mul: inner dimensions " + std::to_string(cols_) + " vs " +
                         std::to_string(o.rows_));
    ComplexMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex aik = (*this)(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix r = *this;
    for (auto& e : r.data_) e *= s;
    return r;
}

ComplexMatrix ComplexMatrix::dagger() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix r = *this;
    for (auto& e : r.data_) e = std::conj(e);
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Complex ComplexMatrix::trace() const {
    if (!isSquare()) throw ShapeError("trace: matrix not square");
    Complex t{0.0, 0.0};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobeniusNorm() const {
    double s = 0.0;
    for (const auto& e : data_) s += std::norm(e);
    return std::sqrt(s);
}

double ComplexMatrix::maxAbs() const {
    double m = 0.0;
    for (const auto& e : data_) m = std::max(m, std::abs(e));
    return m;
}

double ComplexMatrix::maxAbsDiff(const ComplexMatrix& o) const {
    requireSameShape(*this, o, "maxAbsDiff");
    double m = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k) m = std::max(m, std::abs(data_[k] - o.data_[k]));
    return m;
}

bool ComplexMatrix::isHermitian(double tol) const {
    if (!isSquare()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

ComplexMatrix ComplexMatrix::hermitianPart() const {
    if (!isSquare()) throw ShapeError("hermitianPart: matrix not square");
    ComplexMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    return r;
}

void ComplexMatrix::checkFinite() const {
    for (const auto& e : data_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
            throw ValidationError("matrix contains non-finite entries");
}

ComplexMatrix tensorProduct(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() * b.rows() > kMaxSide || a.cols() * b.cols() > kMaxSide)
        throw ShapeError("tensorProduct: result dimension too large");
    ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

std::vector<Complex> tensorKet(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    std::vector<Complex> r;
    r.reserve(a.size() * b.size());
    for (const auto& x : a)
        for (const auto& y : b) r.push_back(x * y);
    return r;
}

namespace {
void requireBipartite(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const char* op) {
    if (!m.isSquare() || m.rows() != dA * dB)
        throw ShapeError(std::string(op) + ": matrix side " + std::to_string(m.rows()) +
                         " does not equal dA*dB = " + std::to_string(dA * dB));
}
} // namespace

ComplexMatrix partialTrace(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Subsystem keep) {
    requireBipartite(m, dA, dB, "partialTrace");
    if (keep == Subsystem::A) {
        ComplexMatrix r(dA, dA);
        for (std::size_t i = 0; i < dA; ++i)
            for (std::size_t j = 0; j < dA; ++j)
                for (std::size_t k = 0; k < dB; ++k) r(i, j) += m(i * dB + k, j * dB + k);
        return r;
    }
    ComplexMatrix r(dB, dB);
    for (std::size_t k = 0; k < dB; ++k)
        for (std::size_t l = 0; l < dB; ++l)
            for (std::size_t i = 0; i < dA; ++i) r(k, l) += m(i * dB + k, i * dB + l);
    return r;
}

ComplexMatrix partialTranspose(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Subsystem which) {
    requireBipartite(m, dA, dB, "partialTranspose");
    ComplexMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < dA; ++i)
        for (std::size_t j = 0; j < dA; ++j)
            for (std::size_t k = 0; k < dB; ++k)
                for (std::size_t l = 0; l < dB; ++l) {
                    if (which == Subsystem::A)
                        r(j * dB + k, i * dB + l) = m(i * dB + k, j * dB + l);
                    else
                        r(i * dB + l, j * dB + k) = m(i * dB + k, j * dB + l);
                }
    return r;
}

} // namespace deficitlab
