#pragma once

#include <optional>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

/// A linear subspace of Q^n held as a reduced row-echelon basis. The RREF
/// normal form is unique, so equality of subspaces is equality of bases.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    /// Row span of the given vectors.
    static Subspace span(std::size_t ambient_dim,
                         const std::vector<std::vector<Rational>>& vectors);
    /// Null space of M (solutions of M v = 0), ambient dim = cols(M).
    static Subspace kernel(const ExactMatrix& m);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }

    bool contains(const std::vector<Rational>& v) const;
    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    std::optional<std::vector<Rational>> coordinates(const std::vector<Rational>& v) const;

    /// Adds a vector to the span; returns true if the dimension grew.
    bool add(const std::vector<Rational>& v);

    Subspace sum(const Subspace& o) const;
    static Subspace sum_of(const std::vector<Subspace>& parts);
    std::size_t intersection_dim(const Subspace& o) const;
    /// dim((this + W) / W): independent directions modulo W.
    std::size_t dim_mod(const Subspace& w) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> basis_;   // RREF rows, pivots strictly increasing
    std::vector<std::size_t> pivots_;

    // Reduces v against the basis in place; returns pivot column or nullopt if v -> 0.
    std::optional<std::size_t> reduce(std::vector<Rational>& v) const;
    void insert_row(std::vector<Rational> v, std::size_t pivot);
};

}  // namespace orbitlab
