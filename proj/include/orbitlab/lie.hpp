#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/matrix.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/rng.hpp"
#include "orbitlab/subspace.hpp"

namespace orbitlab {

enum class Family { GL, SL, SO, SP };

std::string family_name(Family f);

/// A classical Lie algebra realised as a space of n x n rational matrices,
/// with the trace pairing fixing the identification of the algebra with its
/// dual. Immutable after construction.
///
/// SO is realised with respect to the split diagonal form
/// diag(+1, -1, +1, ...): the alternating signs keep maximal Witt index at
/// every level of the subalgebra chain, so every admissible nilpotent orbit
/// has a rational representative and the chain is plain row/column deletion.
/// (The definite form diag(1,...,1) has no nonzero rational nilpotents at
/// all: a skew nilpotent x would need tr x^2 = -sum x_ij^2 = 0.)
class LieAlgebraSpec {
public:
    /// gl:n, sl:n, so:n, sp:2n. For SO, sign_offset rotates the alternating
    /// diagonal form (used by chain levels).
    static LieAlgebraSpec make(Family f, std::size_t n, std::size_t sign_offset = 0);
    /// Parses "gl:3", "sl:2", "so:5", "sp:4".
    static LieAlgebraSpec parse(const std::string& id);

    Family family() const { return family_; }
    std::size_t n() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    std::size_t rank_l() const { return rank_; }
    /// (dim + rank)/2.
    std::size_t magic_b() const { return (dim() + rank_) / 2; }
    const std::vector<ExactMatrix>& basis() const { return basis_; }
    std::string id() const;

    /// Gram matrix of the trace pairing on the basis (nondegenerate).
    const ExactMatrix& gram() const { return gram_; }
    const ExactMatrix& gram_inverse() const { return gram_inv_; }

    /// diag signs of the SO defining form; empty unless family == SO.
    const std::vector<int>& so_signs() const { return so_signs_; }
    /// The defining symmetric/symplectic form matrix (SO/SP only).
    const ExactMatrix& form() const;

    bool in_algebra(const ExactMatrix& x) const;
    void require_member(const ExactMatrix& x) const;

    /// Basis coordinates of x (throws if x is not in the matrix space).
    std::vector<Rational> coordinates(const ExactMatrix& x) const;
    ExactMatrix from_coordinates(const std::vector<Rational>& c) const;

    /// The skew form x^ with entries <x, [b_i, b_j]> = tr(x [b_i, b_j]).
    ExactMatrix skew_form(const ExactMatrix& x) const;

    /// {xi in g : [xi, x] = 0} in basis coordinates; computed directly and
    /// cross-checked against ker(skew_form(x)).
    Subspace centralizer(const ExactMatrix& x) const;

    /// Same bilinear pairing with a functional given by matrix a, but
    /// restricted to an arbitrary list of elements: entries <a, [u_i, u_j]>.
    ExactMatrix skew_form_on(const ExactMatrix& a,
                             const std::vector<ExactMatrix>& elements) const;

    /// The element of g representing the functional tr(x . ) restricted to
    /// this algebra, i.e. the solution xi of <xi, b_i> = <x, b_i>.
    ExactMatrix project_functional(const ExactMatrix& x) const;

    /// Rejection-samples x with dim centralizer(x) == rank_l.
    ExactMatrix sample_regular(Rng& rng, long bound = 10, int budget = 200) const;

    bool is_regular(const ExactMatrix& x) const;

    /// g x g^-1 for a seeded random g in the adjoint group (GL/SL: random
    /// invertible rational matrix; SO/SP: rational Cayley transform of a
    /// random algebra element). The char polynomial is verified unchanged.
    ExactMatrix random_conjugate(const ExactMatrix& x, Rng& rng, long bound = 2) const;

    /// Random element of the matrix space with coefficients of given height.
    ExactMatrix random_element(Rng& rng, long bound = 10) const;

    /// Orbit dimension dim(Gx) = dim g - dim centralizer(x).
    std::size_t orbit_dim(const ExactMatrix& x) const;

    // --- orbit representatives ---

    /// GL/SL: lower-shift Jordan blocks of the given sizes.
    /// SO: rational representative w.r.t. the split form (partition must have
    /// even parts with even multiplicity).
    ExactMatrix nilpotent_representative(const Partition& r) const;

    /// GL/SL: diagonal matrix. SO: pairwise +/- eigenvalue blocks, one value
    /// per coordinate pair (values.size() == n/2). Rational spectrum.
    ExactMatrix semisimple_representative(const std::vector<Rational>& values) const;

private:
    Family family_;
    std::size_t n_;
    std::size_t rank_;
    std::vector<ExactMatrix> basis_;
    std::vector<int> so_signs_;
    ExactMatrix form_;  // SO: diag signs; SP: the symplectic J
    ExactMatrix gram_, gram_inv_;

    LieAlgebraSpec() : form_(0, 0), gram_(0, 0), gram_inv_(0, 0) {}
};

/// Jordan block sizes of a nilpotent matrix, from the kernel filtration.
Partition jordan_type(const ExactMatrix& nilpotent);

/// Principal sl_2 triple (e, h, f) in gl_n with e the upper Jordan block;
/// relations [h,e] = 2e, [h,f] = -2f, [e,f] = h verified exactly.
/// f + centralizer(e) parameterises the slice of regular elements.
struct PrincipalTriple {
    ExactMatrix e, h, f;
};
PrincipalTriple principal_triple_gl(std::size_t n);

/// A bracket-closed subspace of a LieAlgebraSpec with its own structure
/// constants, for index computations.
class Subalgebra {
public:
    /// Verifies bracket closure; throws otherwise.
    static Subalgebra from(const LieAlgebraSpec& g, const Subspace& space);

    std::size_t dim() const { return basis_mats_.size(); }
    const std::vector<ExactMatrix>& basis_mats() const { return basis_mats_; }

    /// Skew form xi^ of a functional xi (coordinates in the subalgebra basis).
    ExactMatrix functional_skew_form(const std::vector<Rational>& xi) const;

    struct IndexCertificate {
        std::size_t index;                 // dim - max sampled rank
        std::vector<Rational> witness;     // functional achieving the max rank
        std::size_t agreeing_samples;      // samples that achieved the max
    };
    /// Randomized index: certified upper bound from the witness, reported
    /// after `trials` agreeing samples.
    IndexCertificate index(Rng& rng, std::size_t trials = 5, long bound = 10) const;

private:
    std::vector<ExactMatrix> basis_mats_;
    // structure[a][b] = coordinates of [u_a, u_b] in the subalgebra basis
    std::vector<std::vector<std::vector<Rational>>> structure_;
};

/// The subalgebra chain: level m keeps the trailing (n-m) x (n-m) corner
/// (GL: gl_{n-m}; SO: so_{n-m} fixing the first m basis vectors).
class ChainSpec {
public:
    explicit ChainSpec(const LieAlgebraSpec& parent);

    const LieAlgebraSpec& parent() const { return *parent_; }
    /// Number of proper levels below the parent.
    std::size_t depth() const { return levels_.size(); }
    /// m >= 1: the corner algebra at level m (so size n-m).
    const LieAlgebraSpec& level(std::size_t m) const;

    /// South-east corner of size n-m.
    ExactMatrix corner(const ExactMatrix& x, std::size_t m) const;
    /// Embeds an (n-m) x (n-m) matrix into the corner block.
    ExactMatrix embed(const ExactMatrix& y, std::size_t m) const;

private:
    std::shared_ptr<const LieAlgebraSpec> parent_;
    std::vector<std::shared_ptr<const LieAlgebraSpec>> levels_;
};

}  // namespace orbitlab
