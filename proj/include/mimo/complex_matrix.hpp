#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mimo {

using Complex = std::complex<double>;
using RealVector = std::vector<double>;
using ComplexVector = std::vector<Complex>;

struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Dense complex matrix, row-major storage.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(const RealVector& d);
    static ComplexMatrix diagonal(const ComplexVector& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ComplexVector& entries() { return data_; }
    const ComplexVector& entries() const { return data_; }

    ComplexMatrix adjoint() const;    // conjugate transpose
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    double frobenius_norm() const;
    bool all_finite() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    ComplexVector data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(double s, ComplexMatrix a);

// y = A x
ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x);
// y = A^H x, without forming the adjoint
ComplexVector adjoint_times(const ComplexMatrix& a, const ComplexVector& x);

// (A + A^H)/2
ComplexMatrix hermitian_part(const ComplexMatrix& a);

// max_ij |A_ij - conj(A_ji)|
double hermitian_deviation(const ComplexMatrix& a);

// ||A - B||_F
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);

RealVector real_diagonal(const ComplexMatrix& a);

}  // namespace mimo
