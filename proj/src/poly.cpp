#include "kmfold/poly.hpp"

#include <map>
#include <stdexcept>

namespace kmfold {

namespace {
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    return detail::narrow(__int128(a) * b);
}
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    return detail::narrow(__int128(a) + b);
}
}  // namespace

Poly::Poly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::t_pow_minus_one(int m) {
    std::vector<std::int64_t> c(m + 1, 0);
    c[0] = -1;
    c[m] += 1;
    return Poly(c);
}

Poly Poly::cyclotomic(int d) {
    Poly p = t_pow_minus_one(d);
    for (int e = 1; e < d; ++e)
        if (d % e == 0) p = p / cyclotomic(e);
    return p;
}

Poly Poly::from_rational(const std::vector<Rational>& c) {
    std::vector<std::int64_t> out;
    for (const auto& x : c) out.push_back(x.to_int());
    return Poly(out);
}

std::int64_t Poly::eval(std::int64_t x) const {
    std::int64_t v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = checked_add(checked_mul(v, x), *it);
    return v;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = checked_add(c[i], b.c_[i]);
    return Poly(c);
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] = checked_add(c[i], -b.c_[i]);
    return Poly(c);
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return Poly(c);
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::domain_error("negative polynomial power");
    Poly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::int64_t lead = b.c_.back();
    std::vector<std::int64_t> rem = a.c_;
    int db = b.degree();
    std::vector<std::int64_t> quo(std::max(0, a.degree() - db + 1), 0);
    for (int k = a.degree() - db; k >= 0; --k) {
        std::int64_t top = rem[k + db];
        if (top == 0) continue;
        if (top % lead != 0) {
            // not divisible over the integers; leave as remainder
            r = Poly(rem);
            q = Poly(quo);
            return;
        }
        std::int64_t f = top / lead;
        quo[k] = f;
        for (int j = 0; j <= db; ++j) rem[k + j] = checked_add(rem[k + j], -checked_mul(f, b.c_[j]));
    }
    q = Poly(quo);
    r = Poly(rem);
}

bool Poly::divisible_by(const Poly& b) const {
    Poly q, r;
    divmod(*this, b, q, r);
    return r.is_zero();
}

Poly operator/(const Poly& a, const Poly& b) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::string Poly::expanded() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int k = degree(); k >= 0; --k) {
        std::int64_t c = c_[k];
        if (c == 0) continue;
        bool first = s.empty();
        if (c < 0)
            s += first ? "-" : "-";
        else if (!first)
            s += "+";
        std::int64_t m = c < 0 ? -c : c;
        if (m != 1 || k == 0) s += std::to_string(m);
        if (k >= 1) s += "t";
        if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
}

std::string Poly::factored() const {
    if (degree() < 1) return expanded();
    // multiplicities of cyclotomic factors
    std::map<int, int> mult;
    Poly rest = *this;
    for (int d = 1; d <= 4 * degree() + 8 && rest.degree() > 0; ++d) {
        Poly phi = cyclotomic(d);
        if (phi.degree() > rest.degree()) continue;
        while (rest.divisible_by(phi)) {
            rest = rest / phi;
            ++mult[d];
        }
    }
    if (!(rest == constant(1))) return expanded();
    // greedy (t^m - 1) extraction, largest m first
    std::map<int, int> uses;
    for (;;) {
        int best = 0;
        for (auto& [m, cnt] : mult) {
            (void)cnt;
            bool ok = true;
            for (int e = 1; e <= m && ok; ++e)
                if (m % e == 0 && mult[e] <= 0) ok = false;
            if (ok && m > best) best = m;
        }
        if (best == 0) break;
        for (int e = 1; e <= best; ++e)
            if (best % e == 0) --mult[e];
        ++uses[best];
    }
    std::string s;
    for (auto& [m, cnt] : uses)
        for (int i = 0; i < cnt; ++i) s += m == 1 ? "(t-1)" : "(t^" + std::to_string(m) + "-1)";
    for (auto& [d, cnt] : mult)
        for (int i = 0; i < cnt; ++i) s += "(" + cyclotomic(d).expanded() + ")";
    return s;
}

}  // namespace kmfold
