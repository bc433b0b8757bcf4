#include "kmfold/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace kmfold {

QMat::QMat(const IMat& m) : r_(m.size()), c_(m.empty() ? 0 : m[0].size()), a_(r_ * c_) {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) a_[i * c_ + j] = Rational(m[i][j]);
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QMat QMat::transpose() const {
    QMat t(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

bool QMat::is_integral() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_integer(); });
}

IMat QMat::to_int() const {
    IMat out(r_, IVec(c_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).to_int();
    return out;
}

QVec QMat::column(std::size_t j) const {
    QVec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

QMat operator*(const QMat& a, const QMat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
    QMat m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.c_; ++j)
                if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
        }
    return m;
}

QMat operator+(const QMat& a, const QMat& b) {
    QMat m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
}

QMat operator-(const QMat& a, const QMat& b) {
    QMat m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
}

QVec operator*(const QMat& a, const QVec& v) {
    if (a.c_ != v.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
    QVec out(a.r_);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t j = 0; j < a.c_; ++j)
            if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
}

std::vector<std::size_t> rref(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        Rational inv = Rational(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            Rational f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const QMat& m) {
    QMat w = m;
    return rref(w).size();
}

Rational det(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: non-square");
    QMat w = m;
    std::size_t n = w.rows();
    Rational d = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && w(p, col).is_zero()) ++p;
        if (p == n) return 0;
        if (p != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(col, j));
            d = -d;
        }
        d *= w(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w(i, col).is_zero()) continue;
            Rational f = w(i, col) / w(col, col);
            for (std::size_t j = col; j < n; ++j) w(i, j) -= f * w(col, j);
        }
    }
    return d;
}

std::optional<QMat> inverse(const QMat& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) return std::nullopt;
    QMat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    QMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<QVec> kernel(const QMat& m) {
    QMat w = m;
    auto piv = rref(w);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        QVec v(m.cols());
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -w(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve(const QMat& m, const QVec& b) {
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    QVec x(m.cols());
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, m.cols());
    return x;
}

// Faddeev-LeVerrier; exact over the rationals.
std::vector<Rational> charpoly(const QMat& m) {
    std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly: non-square");
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    QMat mk(n, n);  // M_0 = 0
    QMat id = QMat::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        QMat cur = mk;
        for (std::size_t i = 0; i < n; ++i) cur(i, i) += c[n - k + 1];
        mk = m * cur;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = -tr / Rational(static_cast<std::int64_t>(k));
    }
    return c;
}

bool same_span(const std::vector<QVec>& a, const std::vector<QVec>& b, std::size_t dim) {
    auto stack = [dim](const std::vector<QVec>& rows) {
        QMat m(rows.size(), dim);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
        return m;
    };
    std::vector<QVec> both = a;
    both.insert(both.end(), b.begin(), b.end());
    std::size_t ra = a.empty() ? 0 : rank(stack(a));
    std::size_t rb = b.empty() ? 0 : rank(stack(b));
    std::size_t rab = both.empty() ? 0 : rank(stack(both));
    return ra == rb && rb == rab;
}

std::optional<IVec> primitive_positive(const QVec& v) {
    std::int64_t l = 1;
    for (const auto& x : v) l = std::lcm(l, x.den());
    IVec out;
    std::int64_t g = 0;
    for (const auto& x : v) {
        std::int64_t y = (x * Rational(l)).to_int();
        out.push_back(y);
        g = std::gcd(g, y);
    }
    if (g == 0) return std::nullopt;
    bool pos = out[0] > 0;
    for (auto& y : out) {
        y /= g;
        if (!pos) y = -y;
        if (y <= 0) return std::nullopt;
    }
    return out;
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}

std::string to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace kmfold
