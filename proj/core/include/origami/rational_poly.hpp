#pragma once

#include <complex>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace origami {

using Rat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial with exact rational coefficients,
// stored by ascending degree with no trailing zeros.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rat> coeffs);
    static RationalPoly constant(const Rat& c);
    static RationalPoly x();
    static RationalPoly monomial(int degree, const Rat& coeff);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    Rat coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    RationalPoly derivative() const;

    bool operator==(const RationalPoly&) const = default;

    RationalPoly& operator+=(const RationalPoly& o);
    RationalPoly& operator-=(const RationalPoly& o);
    RationalPoly& operator*=(const RationalPoly& o);
    RationalPoly& operator*=(const Rat& s);

    // Exact evaluation.
    Rat eval(const Rat& v) const;
    // Numeric evaluation with coefficients rounded to double.
    std::complex<double> eval(const std::complex<double>& v) const;
    std::vector<std::complex<double>> complex_coeffs() const;

    // Euclidean division: a = q*b + r with deg r < deg b.
    static std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& a,
                                                        const RationalPoly& b);
    // Exact quotient; throws if the remainder is nonzero.
    static RationalPoly exact_div(const RationalPoly& a, const RationalPoly& b);

private:
    void trim();
    std::vector<Rat> c_;
};

RationalPoly operator+(RationalPoly a, const RationalPoly& b);
RationalPoly operator-(RationalPoly a, const RationalPoly& b);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator*(const Rat& s, RationalPoly p);
RationalPoly operator-(RationalPoly p);

} // namespace origami
