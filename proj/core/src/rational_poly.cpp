#include "origami/rational_poly.hpp"

#include <stdexcept>

#include "origami/errors.hpp"

namespace origami {

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rat& c) { return RationalPoly({c}); }

RationalPoly RationalPoly::x() { return RationalPoly({Rat(0), Rat(1)}); }

RationalPoly RationalPoly::monomial(int degree, const Rat& coeff) {
    std::vector<Rat> c(degree + 1, Rat(0));
    c[degree] = coeff;
    return RationalPoly(std::move(c));
}

Rat RationalPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[k];
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(static_cast<int>(k)) * c_[k];
    return RationalPoly(std::move(d));
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<Rat> prod(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    c_ = std::move(prod);
    trim();
    return *this;
}

RationalPoly& RationalPoly::operator*=(const Rat& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

Rat RationalPoly::eval(const Rat& v) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * v + *it;
    return acc;
}

std::complex<double> RationalPoly::eval(const std::complex<double>& v) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * v + std::complex<double>(it->convert_to<double>(), 0.0);
    return acc;
}

std::vector<std::complex<double>> RationalPoly::complex_coeffs() const {
    std::vector<std::complex<double>> out(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k)
        out[k] = std::complex<double>(c_[k].convert_to<double>(), 0.0);
    return out;
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& a,
                                                           const RationalPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RationalPoly r = a;
    std::vector<Rat> q;
    const int db = b.degree();
    if (r.degree() >= db) q.assign(r.degree() - db + 1, Rat(0));
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Rat factor = r.leading() / b.leading();
        q[shift] = factor;
        // r -= factor * x^shift * b
        for (int k = 0; k <= db; ++k) r.c_[k + shift] -= factor * b.c_[k];
        r.trim();
    }
    return {RationalPoly(std::move(q)), std::move(r)};
}

RationalPoly RationalPoly::exact_div(const RationalPoly& a, const RationalPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw RelationViolated("polynomial division expected to be exact");
    return q;
}

RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r = a;
    r *= b;
    return r;
}
RationalPoly operator*(const Rat& s, RationalPoly p) { return p *= s; }
RationalPoly operator-(RationalPoly p) { return p *= Rat(-1); }

} // namespace origami
