#include "orbitlab/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitlab {

std::optional<std::size_t> Subspace::reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rational& c = v[pivots_[r]];
        if (!c.is_zero()) {
            const Rational f = c;  // basis rows have pivot 1
            for (std::size_t j = pivots_[r]; j < ambient_; ++j) v[j] -= f * basis_[r][j];
        }
    }
    for (std::size_t j = 0; j < ambient_; ++j)
        if (!v[j].is_zero()) return j;
    return std::nullopt;
}

void Subspace::insert_row(std::vector<Rational> v, std::size_t pivot) {
    const Rational p = v[pivot];
    for (auto& x : v) x /= p;
    // Back-substitute into existing rows to keep the reduced form.
    for (std::size_t r = 0; r < basis_.size(); ++r) {
        const Rational& c = basis_[r][pivot];
        if (!c.is_zero()) {
            const Rational f = c;
            for (std::size_t j = 0; j < ambient_; ++j) basis_[r][j] -= f * v[j];
        }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const std::size_t idx = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    basis_.insert(basis_.begin() + idx, std::move(v));
}

bool Subspace::add(const std::vector<Rational>& v) {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dim mismatch");
    std::vector<Rational> w = v;
    auto piv = reduce(w);
    if (!piv) return false;
    insert_row(std::move(w), *piv);
    return true;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<std::vector<Rational>>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.add(v);
    return s;
}

Subspace Subspace::kernel(const ExactMatrix& m) {
    const std::size_t n = m.cols();
    // Row-reduce M, then read free-variable solutions.
    Subspace row_space(n);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Rational> r(n);
        for (std::size_t j = 0; j < n; ++j) r[j] = m.at(i, j);
        row_space.add(r);
    }
    const auto& rr = row_space.basis_;
    const auto& piv = row_space.pivots_;
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;

    Subspace ker(n);
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(n);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < rr.size(); ++r) v[piv[r]] = -rr[r][f];
        ker.add(v);
    }
    return ker;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        std::vector<Rational> v(ambient_dim);
        v[i] = Rational(1);
        s.add(v);
    }
    return s;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace: ambient dim mismatch");
    std::vector<Rational> w = v;
    return !reduce(w).has_value();
}

std::optional<std::vector<Rational>> Subspace::coordinates(
    const std::vector<Rational>& v) const {
    if (!contains(v)) return std::nullopt;
    // RREF basis: the coordinate along row r is just v[pivot_r].
    std::vector<Rational> c(basis_.size());
    for (std::size_t r = 0; r < basis_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
}

Subspace Subspace::sum(const Subspace& o) const {
    if (ambient_ != o.ambient_) throw std::invalid_argument("Subspace: ambient dim mismatch");
    Subspace s = *this;
    for (const auto& v : o.basis_) s.add(v);
    return s;
}

Subspace Subspace::sum_of(const std::vector<Subspace>& parts) {
    if (parts.empty()) throw std::invalid_argument("Subspace: empty sum");
    Subspace s = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) s = s.sum(parts[i]);
    return s;
}

std::size_t Subspace::intersection_dim(const Subspace& o) const {
    return dim() + o.dim() - sum(o).dim();
}

std::size_t Subspace::dim_mod(const Subspace& w) const {
    return sum(w).dim() - w.dim();
}

}  // namespace orbitlab
