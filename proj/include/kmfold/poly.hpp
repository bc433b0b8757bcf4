#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kmfold/rational.hpp"

namespace kmfold {

// Integer polynomial in t, coefficients in ascending degree, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::int64_t> coeffs);
    static Poly constant(std::int64_t c) { return Poly({c}); }
    static Poly t() { return Poly({0, 1}); }
    static Poly t_pow_minus_one(int m);  // t^m - 1
    static Poly cyclotomic(int d);
    static Poly from_rational(const std::vector<Rational>& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0; }
    std::int64_t eval(std::int64_t x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    Poly pow(int e) const;

    // Exact division; throws if b does not divide a over the integers.
    friend Poly operator/(const Poly& a, const Poly& b);
    bool divisible_by(const Poly& b) const;

    std::string expanded() const;
    // Product of (t^m-1) factors when the polynomial is a product of
    // cyclotomics, leftovers printed as expanded cyclotomic factors.
    std::string factored() const;

private:
    std::vector<std::int64_t> c_;
    void trim();
    // quotient and remainder over the rationals, requires lead(b) = +-1
    static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
};

}  // namespace kmfold
