#pragma once

#include <utility>
#include <vector>

#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Normalised: leading coefficient nonzero unless the zero polynomial.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPoly constant(const Rational& c) { return RationalPoly({c}); }

    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return (long)c_.size() - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }

    Rational eval(const Rational& t) const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly scaled(const Rational& f) const;

    /// (quotient, remainder) of division by a nonzero polynomial.
    std::pair<RationalPoly, RationalPoly> divmod(const RationalPoly& d) const;

    RationalPoly derivative() const;
    /// Monic gcd.
    static RationalPoly gcd(RationalPoly a, RationalPoly b);
    /// Monic squarefree part: p / gcd(p, p').
    RationalPoly squarefree() const;
    RationalPoly monic() const;

    /// All rational roots (no multiplicity), via divisor enumeration on the
    /// integer-cleared polynomial.
    std::vector<Rational> rational_roots() const;
    /// Factors out all rational roots; returns the rootless cofactor.
    RationalPoly remove_rational_roots() const;

    std::string str() const;

    friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rational> c_;
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
};

/// Unique polynomial of degree < points.size() through the given points.
/// Throws on repeated abscissae.
RationalPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace orbitlab
