#include "orbitlab/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitlab {

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ExactMatrix: ragged rows");
        for (const auto& x : r) e_.push_back(x);
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
    ExactMatrix m(n, n);
    m.at(i, j) = Rational(1);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
    ExactMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in +");
    ExactMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] += o.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in -");
    ExactMatrix r = *this;
    for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] -= o.e_[k];
    return r;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in *");
    ExactMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& c) const {
    ExactMatrix r = *this;
    for (auto& x : r.e_) x *= c;
    return r;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

Rational ExactMatrix::trace() const {
    Rational t;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
    return t;
}

ExactMatrix ExactMatrix::bracket(const ExactMatrix& a, const ExactMatrix& b) {
    return a * b - b * a;
}

Rational ExactMatrix::trace_form(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_ || a.rows_ != b.cols_)
        throw std::invalid_argument("ExactMatrix: shape mismatch in trace_form");
    Rational t;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) t += a.at(i, k) * b.at(k, i);
    return t;
}

namespace {

// Integer matrix obtained by scaling each row by its denominator lcm.
// Row scaling preserves rank.
std::vector<std::vector<mpz_class>> clear_denominators(const ExactMatrix& m) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j)
            z[i][j] = m.at(i, j).num() * (l / m.at(i, j).den());
    }
    return z;
}

}  // namespace

std::size_t ExactMatrix::rank_impl(bool reverse_cols) const {
    auto a = clear_denominators(*this);
    const std::size_t nr = rows_, nc = cols_;
    std::size_t rank = 0;
    mpz_class prev = 1;
    std::vector<std::size_t> cols(nc);
    for (std::size_t j = 0; j < nc; ++j) cols[j] = reverse_cols ? nc - 1 - j : j;

    for (std::size_t cidx = 0; cidx < nc && rank < nr; ++cidx) {
        const std::size_t c = cols[cidx];
        std::size_t piv = rank;
        while (piv < nr && a[piv][c] == 0) ++piv;
        if (piv == nr) continue;
        std::swap(a[rank], a[piv]);
        // Bareiss step: exact integer division by the previous pivot.
        for (std::size_t i = rank + 1; i < nr; ++i) {
            for (std::size_t jdx = cidx + 1; jdx < nc; ++jdx) {
                const std::size_t j = cols[jdx];
                a[i][j] = (a[i][j] * a[rank][c] - a[i][c] * a[rank][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::size_t ExactMatrix::rank() const { return rank_impl(false); }
std::size_t ExactMatrix::rank_alt_pivot() const { return rank_impl(true); }

Rational ExactMatrix::det() const {
    if (!is_square()) throw std::invalid_argument("ExactMatrix: det of non-square");
    const std::size_t n = rows_;
    if (n == 0) return Rational(1);
    // Track the rational row scalings, then run integer Bareiss.
    mpq_class scale = 1;
    auto a = clear_denominators(*this);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), at(i, j).den().get_mpz_t());
        scale /= l;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    mpq_class d(a[n - 1][n - 1]);
    d *= scale;
    if (sign < 0) d = -d;
    return Rational(std::move(d));
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) throw std::invalid_argument("ExactMatrix: inverse of non-square");
    const std::size_t n = rows_;
    // Gauss-Jordan on [M | I] with rational arithmetic.
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = at(i, j);
        a[i][n + i] = Rational(1);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("ExactMatrix: singular matrix in inverse");
        std::swap(a[k], a[piv]);
        const Rational p = a[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) a[k][j] /= p;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k].is_zero()) continue;
            const Rational f = a[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    ExactMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = a[i][n + j];
    return r;
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t c0, std::size_t size) const {
    if (r0 + size > rows_ || c0 + size > cols_)
        throw std::out_of_range("ExactMatrix: block out of range");
    ExactMatrix b(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) b.at(i, j) = at(r0 + i, c0 + j);
    return b;
}

std::vector<Rational> ExactMatrix::char_poly() const {
    if (!is_square()) throw std::invalid_argument("ExactMatrix: char_poly of non-square");
    const std::size_t n = rows_;
    // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(A M_k)/k, M_{k+1} = A M_k + c_{n-k} I.
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    ExactMatrix mk = identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = *this * mk;
        Rational ck = mk.trace() / Rational((long)k);
        ck = -ck;
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return c;
}

Rational ExactMatrix::pfaffian() const {
    if (!is_square()) throw std::invalid_argument("ExactMatrix: pfaffian of non-square");
    const std::size_t n = rows_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j) != -at(j, i))
                throw std::invalid_argument("ExactMatrix: pfaffian of non-skew matrix");
    if (n % 2 == 1) return Rational(0);
    if (n == 0) return Rational(1);
    // Recursive expansion along the first row on index subsets.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    struct Rec {
        const ExactMatrix& m;
        Rational run(std::vector<std::size_t> s) {
            if (s.empty()) return Rational(1);
            Rational acc;
            int sign = 1;
            for (std::size_t j = 1; j < s.size(); ++j) {
                const Rational& a = m.at(s[0], s[j]);
                if (!a.is_zero()) {
                    std::vector<std::size_t> rest;
                    rest.reserve(s.size() - 2);
                    for (std::size_t k = 1; k < s.size(); ++k)
                        if (k != j) rest.push_back(s[k]);
                    acc += Rational(sign) * a * run(std::move(rest));
                }
                sign = -sign;
            }
            return acc;
        }
    } rec{*this};
    return rec.run(idx);
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n" : "") << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).str();
        os << "]";
    }
    return os.str();
}

}  // namespace orbitlab
