#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kmfold/rational.hpp"

namespace kmfold {

using IVec = std::vector<std::int64_t>;
using IMat = std::vector<IVec>;
using QVec = std::vector<Rational>;

// Dense exact rational matrix, row-major.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    explicit QMat(const IMat& m);

    static QMat identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    QMat transpose() const;
    bool is_integral() const;
    IMat to_int() const;
    QVec column(std::size_t j) const;

    friend QMat operator*(const QMat& a, const QMat& b);
    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);
    friend QVec operator*(const QMat& a, const QVec& v);
    friend bool operator==(const QMat& a, const QMat& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMat& m);
std::size_t rank(const QMat& m);
Rational det(const QMat& m);
std::optional<QMat> inverse(const QMat& m);
// Basis of the right kernel {x : m x = 0}.
std::vector<QVec> kernel(const QMat& m);
// Some solution of m x = b (free variables set to zero), if one exists.
std::optional<QVec> solve(const QMat& m, const QVec& b);
// Coefficients of det(tI - m), ascending degree; integral for integer input.
std::vector<Rational> charpoly(const QMat& m);

// Same span test for two families of vectors of equal length.
bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim);

// Primitive positive integer vector spanning a one-dimensional kernel.
// Returns nullopt if the kernel is not one-dimensional or has mixed signs.
std::optional<IVec> primitive_positive(const QVec& v);

std::string to_string(const QVec& v);
std::string to_string(const IVec& v);

}  // namespace kmfold
