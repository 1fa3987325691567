#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "orbitlab/rational.hpp"

namespace orbitlab {

/// Dense matrix over exact rationals, row-major.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static ExactMatrix identity(std::size_t n);
    /// E_{ij}: single 1 at (i, j), zero elsewhere.
    static ExactMatrix unit(std::size_t n, std::size_t i, std::size_t j);
    static ExactMatrix diagonal(const std::vector<Rational>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    ExactMatrix transpose() const;
    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix scaled(const Rational& c) const;
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

    Rational trace() const;
    /// [a, b] = ab - ba.
    static ExactMatrix bracket(const ExactMatrix& a, const ExactMatrix& b);
    /// tr(a b): the trace pairing.
    static Rational trace_form(const ExactMatrix& a, const ExactMatrix& b);

    /// Exact rank via fraction-free (Bareiss) elimination over the integers
    /// after clearing row denominators.
    std::size_t rank() const;
    /// Rank with a reversed column scan order; must agree with rank().
    std::size_t rank_alt_pivot() const;

    /// Exact determinant (square only), fraction-free elimination.
    Rational det() const;

    /// Matrix inverse (square, nonsingular).
    ExactMatrix inverse() const;

    /// Contiguous square block with rows/cols [r0, r0+size) x [c0, c0+size).
    ExactMatrix block(std::size_t r0, std::size_t c0, std::size_t size) const;

    /// Characteristic polynomial coefficients c_0..c_n of det(lambda I - M),
    /// ascending degree (c_n = 1). Faddeev-LeVerrier, exact.
    std::vector<Rational> char_poly() const;

    /// Pfaffian of a skew-symmetric matrix (zero for odd size).
    Rational pfaffian() const;

    std::string str() const;

    const std::vector<Rational>& entries() const { return e_; }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;

    std::size_t rank_impl(bool reverse_cols) const;
};

}  // namespace orbitlab
