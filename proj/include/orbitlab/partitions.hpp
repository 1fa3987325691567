#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace orbitlab {

/// Integer partition with weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::size_t> parts);
    /// Parses "3,2,1".
    static Partition parse(const std::string& s);
    /// All partitions of n, lexicographically decreasing.
    static std::vector<Partition> all_of(std::size_t n);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t size() const { return n_; }          // the number partitioned
    std::size_t count() const { return parts_.size(); }
    std::size_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    Partition dual() const;
    /// dim of the nilpotent GL_n orbit with these Jordan block sizes:
    /// n^2 - sum of squared dual parts.
    std::size_t orbit_dim_gl() const;
    /// (r1, r2, r3, ...) -> (r1 + r2 - 1, r3, ...), sorted; partition of n-1.
    Partition collapse() const;

    /// s(i) for i = 1..n: the block index of i under the prefix sums.
    std::vector<std::size_t> s_values() const;

    /// Valid as a nilpotent orbit of so_n: even parts have even multiplicity.
    bool so_admissible() const;
    /// dim of the nilpotent SO_n orbit: (n^2 - sum dual^2 - n + #odd parts)/2...
    /// computed as dim so_n - dim centraliser.
    std::size_t orbit_dim_so() const;

    std::string str() const;
    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }

private:
    std::vector<std::size_t> parts_;
    std::size_t n_ = 0;
};

enum class Colour { White, Red, Green };

/// The white/red/green staircase colouring attached to a nilpotent orbit.
/// Row m (0-based) has n-m cells; the cell at row m, position p (1-based from
/// the left) carries the m-th shift of the generator of degree n-p+1.
class ColourPattern {
public:
    ColourPattern(std::size_t n, std::vector<std::vector<Colour>> rows)
        : n_(n), rows_(std::move(rows)) {}

    std::size_t n() const { return n_; }
    const std::vector<std::vector<Colour>>& rows() const { return rows_; }
    Colour at(std::size_t row, std::size_t pos1) const { return rows_[row][pos1 - 1]; }

    std::size_t count(Colour c) const;
    std::size_t total_cells() const { return n_ * (n_ + 1) / 2; }

    std::string ascii() const;
    std::string svg() const;
    std::string json() const;

    friend bool operator==(const ColourPattern& a, const ColourPattern& b) {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    std::size_t n_;
    std::vector<std::vector<Colour>> rows_;
};

/// Executes the painting recipe literally: red stripes placed leftward from
/// the rightmost non-green box, everything below a stripe painted green.
ColourPattern paint_pattern(const Partition& r);

/// Closed-form colouring: the cell for the m-th shift of the degree-i
/// generator is green iff s(i) <= m <= i-1, red iff m = s(i)-1, else white.
ColourPattern closed_form_pattern(const Partition& r);

}  // namespace orbitlab
