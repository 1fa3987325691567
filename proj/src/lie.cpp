#include "orbitlab/lie.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbitlab {

namespace {

int so_sign(std::size_t i, std::size_t offset) {
    return ((i + offset) % 2 == 0) ? 1 : -1;
}

std::vector<Rational> vec_of(const ExactMatrix& m) {
    std::vector<Rational> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::GL: return "gl";
        case Family::SL: return "sl";
        case Family::SO: return "so";
        case Family::SP: return "sp";
    }
    return "?";
}

LieAlgebraSpec LieAlgebraSpec::make(Family f, std::size_t n, std::size_t sign_offset) {
    if (n == 0) throw std::invalid_argument("LieAlgebraSpec: n must be positive");
    LieAlgebraSpec g;
    g.family_ = f;
    g.n_ = n;
    switch (f) {
        case Family::GL: {
            g.rank_ = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    g.basis_.push_back(ExactMatrix::unit(n, i, j));
            break;
        }
        case Family::SL: {
            if (n < 2) throw std::invalid_argument("sl: need n >= 2");
            g.rank_ = n - 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) g.basis_.push_back(ExactMatrix::unit(n, i, j));
            for (std::size_t k = 0; k + 1 < n; ++k) {
                ExactMatrix d(n, n);
                d.at(k, k) = Rational(1);
                d.at(k + 1, k + 1) = Rational(-1);
                g.basis_.push_back(d);
            }
            break;
        }
        case Family::SO: {
            g.rank_ = n / 2;
            g.so_signs_.resize(n);
            for (std::size_t i = 0; i < n; ++i) g.so_signs_[i] = so_sign(i, sign_offset);
            g.form_ = ExactMatrix(n, n);
            for (std::size_t i = 0; i < n; ++i) g.form_.at(i, i) = Rational(g.so_signs_[i]);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    ExactMatrix b(n, n);
                    b.at(i, j) = Rational(1);
                    b.at(j, i) = Rational(-g.so_signs_[i] * g.so_signs_[j]);
                    g.basis_.push_back(b);
                }
            break;
        }
        case Family::SP: {
            if (n % 2 != 0) throw std::invalid_argument("sp: size parameter must be even");
            const std::size_t m = n / 2;
            g.rank_ = m;
            g.form_ = ExactMatrix(n, n);
            for (std::size_t i = 0; i < m; ++i) {
                g.form_.at(i, m + i) = Rational(1);
                g.form_.at(m + i, i) = Rational(-1);
            }
            // x = [[A, B], [C, -A^T]] with B, C symmetric
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    ExactMatrix b(n, n);
                    b.at(i, j) = Rational(1);
                    b.at(m + j, m + i) = Rational(-1);
                    g.basis_.push_back(b);
                }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    ExactMatrix b(n, n);
                    b.at(i, m + j) = Rational(1);
                    b.at(j, m + i) = Rational(1);
                    g.basis_.push_back(b);
                }
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) {
                    ExactMatrix b(n, n);
                    b.at(m + i, j) = Rational(1);
                    b.at(m + j, i) = Rational(1);
                    g.basis_.push_back(b);
                }
            break;
        }
    }
    // Trace-pairing Gram matrix; inverting it checks nondegeneracy.
    const std::size_t d = g.basis_.size();
    g.gram_ = ExactMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            Rational t = ExactMatrix::trace_form(g.basis_[i], g.basis_[j]);
            g.gram_.at(i, j) = t;
            g.gram_.at(j, i) = t;
        }
    g.gram_inv_ = g.gram_.inverse();
    return g;
}

LieAlgebraSpec LieAlgebraSpec::parse(const std::string& id) {
    auto pos = id.find(':');
    if (pos == std::string::npos)
        throw std::invalid_argument("algebra id must look like gl:3, sl:2, so:5, sp:4");
    const std::string fam = id.substr(0, pos);
    const long n = std::stol(id.substr(pos + 1));
    if (n <= 0) throw std::invalid_argument("algebra id: size must be positive");
    if (fam == "gl") return make(Family::GL, (std::size_t)n);
    if (fam == "sl") return make(Family::SL, (std::size_t)n);
    if (fam == "so") return make(Family::SO, (std::size_t)n);
    if (fam == "sp") return make(Family::SP, (std::size_t)n);
    throw std::invalid_argument("algebra id: unknown family '" + fam + "'");
}

std::string LieAlgebraSpec::id() const {
    return family_name(family_) + ":" + std::to_string(n_);
}

const ExactMatrix& LieAlgebraSpec::form() const {
    if (family_ != Family::SO && family_ != Family::SP)
        throw std::logic_error("form(): only SO/SP carry a defining form");
    return form_;
}

bool LieAlgebraSpec::in_algebra(const ExactMatrix& x) const {
    if (x.rows() != n_ || x.cols() != n_) return false;
    switch (family_) {
        case Family::GL: return true;
        case Family::SL: return x.trace().is_zero();
        case Family::SO:
        case Family::SP: return (x.transpose() * form_ + form_ * x).is_zero();
    }
    return false;
}

void LieAlgebraSpec::require_member(const ExactMatrix& x) const {
    if (!in_algebra(x))
        throw std::invalid_argument("element is not in the matrix space of " + id());
}

std::vector<Rational> LieAlgebraSpec::coordinates(const ExactMatrix& x) const {
    require_member(x);
    std::vector<Rational> c;
    c.reserve(dim());
    switch (family_) {
        case Family::GL: {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) c.push_back(x.at(i, j));
            break;
        }
        case Family::SL: {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j)
                    if (i != j) c.push_back(x.at(i, j));
            Rational acc;
            for (std::size_t k = 0; k + 1 < n_; ++k) {
                acc += x.at(k, k);
                c.push_back(acc);
            }
            break;
        }
        case Family::SO: {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = i + 1; j < n_; ++j) c.push_back(x.at(i, j));
            break;
        }
        case Family::SP: {
            const std::size_t m = n_ / 2;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) c.push_back(x.at(i, j));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) c.push_back(x.at(i, m + j));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i; j < m; ++j) c.push_back(x.at(m + i, j));
            break;
        }
    }
    return c;
}

ExactMatrix LieAlgebraSpec::from_coordinates(const std::vector<Rational>& c) const {
    if (c.size() != dim()) throw std::invalid_argument("coordinate length mismatch");
    ExactMatrix x(n_, n_);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k].is_zero()) continue;
        const ExactMatrix& b = basis_[k];
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!b.at(i, j).is_zero()) x.at(i, j) += c[k] * b.at(i, j);
    }
    return x;
}

ExactMatrix LieAlgebraSpec::skew_form(const ExactMatrix& x) const {
    require_member(x);
    const std::size_t d = dim();
    ExactMatrix f(d, d);
    std::vector<ExactMatrix> adx;
    adx.reserve(d);
    for (std::size_t i = 0; i < d; ++i) adx.push_back(ExactMatrix::bracket(x, basis_[i]));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            // tr(x [b_i, b_j]) = tr([x, b_i] b_j)
            Rational t = ExactMatrix::trace_form(adx[i], basis_[j]);
            f.at(i, j) = t;
            f.at(j, i) = -t;
        }
    return f;
}

ExactMatrix LieAlgebraSpec::skew_form_on(const ExactMatrix& a,
                                         const std::vector<ExactMatrix>& elements) const {
    const std::size_t k = elements.size();
    ExactMatrix f(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            Rational t =
                ExactMatrix::trace_form(a, ExactMatrix::bracket(elements[i], elements[j]));
            f.at(i, j) = t;
            f.at(j, i) = -t;
        }
    return f;
}

Subspace LieAlgebraSpec::centralizer(const ExactMatrix& x) const {
    require_member(x);
    const std::size_t d = dim();
    // Columns: vec([b_i, x]); the kernel is the commuting coordinates.
    ExactMatrix m(n_ * n_, d);
    for (std::size_t i = 0; i < d; ++i) {
        auto v = vec_of(ExactMatrix::bracket(basis_[i], x));
        for (std::size_t r = 0; r < v.size(); ++r) m.at(r, i) = v[r];
    }
    Subspace direct = Subspace::kernel(m);
    Subspace via_form = Subspace::kernel(skew_form(x));
    if (!(direct == via_form))
        throw std::logic_error("centralizer: direct solve disagrees with skew-form kernel");
    return direct;
}

ExactMatrix LieAlgebraSpec::project_functional(const ExactMatrix& x) const {
    ExactMatrix rhs(dim(), 1);
    for (std::size_t i = 0; i < dim(); ++i)
        rhs.at(i, 0) = ExactMatrix::trace_form(x, basis_[i]);
    ExactMatrix c = gram_inv_ * rhs;
    std::vector<Rational> cv(dim());
    for (std::size_t i = 0; i < dim(); ++i) cv[i] = c.at(i, 0);
    return from_coordinates(cv);
}

ExactMatrix LieAlgebraSpec::random_element(Rng& rng, long bound) const {
    std::vector<Rational> c(dim());
    for (auto& x : c) x = rng.rational(bound);
    return from_coordinates(c);
}

bool LieAlgebraSpec::is_regular(const ExactMatrix& x) const {
    return Subspace::kernel(skew_form(x)).dim() == rank_;
}

ExactMatrix LieAlgebraSpec::sample_regular(Rng& rng, long bound, int budget) const {
    for (int t = 0; t < budget; ++t) {
        ExactMatrix x = random_element(rng, bound);
        if (is_regular(x)) return x;
    }
    throw std::runtime_error("sample_regular: retry budget exhausted");
}

std::size_t LieAlgebraSpec::orbit_dim(const ExactMatrix& x) const {
    return dim() - Subspace::kernel(skew_form(x)).dim();
}

ExactMatrix LieAlgebraSpec::random_conjugate(const ExactMatrix& x, Rng& rng,
                                             long bound) const {
    require_member(x);
    ExactMatrix g(n_, n_);
    for (int attempt = 0;; ++attempt) {
        if (attempt > 200) throw std::runtime_error("random_conjugate: no invertible sample");
        if (family_ == Family::GL || family_ == Family::SL) {
            for (std::size_t i = 0; i < n_; ++i)
                for (std::size_t j = 0; j < n_; ++j) g.at(i, j) = Rational(rng.integer(bound));
            if (!g.det().is_zero()) break;
        } else {
            // Rational Cayley transform of a random algebra element.
            ExactMatrix s = random_element(rng, bound);
            ExactMatrix ips = ExactMatrix::identity(n_) + s;
            if (ips.det().is_zero()) continue;  // Cayley pole, resample
            g = (ExactMatrix::identity(n_) - s) * ips.inverse();
            break;
        }
    }
    ExactMatrix y = g * x * g.inverse();
    require_member(y);
    if (y.char_poly() != x.char_poly())
        throw std::logic_error("random_conjugate: characteristic polynomial changed");
    return y;
}

ExactMatrix LieAlgebraSpec::nilpotent_representative(const Partition& r) const {
    if (r.size() != n_) throw std::invalid_argument("partition size must equal n");
    if (family_ == Family::GL || family_ == Family::SL) {
        ExactMatrix e(n_, n_);
        std::size_t pos = 0;
        for (auto p : r.parts()) {
            for (std::size_t k = 0; k + 1 < p; ++k) e.at(pos + k + 1, pos + k) = Rational(1);
            pos += p;
        }
        return e;
    }
    if (family_ != Family::SO)
        throw std::invalid_argument("nilpotent_representative: unsupported family");
    if (!r.so_admissible())
        throw std::invalid_argument(
            "partition is not a nilpotent type of so_n (even parts need even multiplicity)");

    // Standard model: nilpotent N and symmetric Gram B assembled blockwise,
    // block scalars chosen so B is congruent to the split alternating form;
    // N is then transported along the congruence.
    ExactMatrix N(n_, n_);
    ExactMatrix B(n_, n_);
    struct HypPair {
        std::size_t p, q;
        Rational beta;
    };
    std::vector<HypPair> hyperbolic;
    std::vector<std::pair<std::size_t, int>> singles;  // (index, +-1 middle value)

    std::size_t next = 0;
    int odd_eps = 1;
    const auto& parts = r.parts();
    for (std::size_t bi = 0; bi < parts.size();) {
        const std::size_t p = parts[bi];
        if (p % 2 == 1) {
            const std::size_t k = (p - 1) / 2;
            // c = eps * (-1)^k puts exactly eps in the middle diagonal slot.
            const Rational c = Rational(odd_eps * ((k % 2 == 0) ? 1 : -1));
            std::vector<std::size_t> w(p);
            for (std::size_t i = 0; i < p; ++i) w[i] = next++;
            for (std::size_t i = 0; i + 1 < p; ++i) N.at(w[i + 1], w[i]) = Rational(1);
            for (std::size_t i = 0; i < p; ++i) {
                const std::size_t j = 2 * k - i;
                B.at(w[i], w[j]) = (i % 2 == 0) ? c : -c;
            }
            for (std::size_t i = 0; i < k; ++i)
                hyperbolic.push_back({w[i], w[2 * k - i], (i % 2 == 0) ? c : -c});
            singles.push_back({w[k], odd_eps});
            odd_eps = -odd_eps;
            bi += 1;
        } else {
            // even parts come in equal consecutive pairs
            const std::size_t m = p;
            std::vector<std::size_t> u(m), v(m);
            for (std::size_t i = 0; i < m; ++i) u[i] = next++;
            for (std::size_t i = 0; i < m; ++i) v[i] = next++;
            for (std::size_t i = 0; i + 1 < m; ++i) {
                N.at(u[i + 1], u[i]) = Rational(1);
                N.at(v[i + 1], v[i]) = Rational(1);
            }
            for (std::size_t i = 0; i < m; ++i) {
                const std::size_t j = m - 1 - i;
                Rational val((i % 2 == 0) ? 1 : -1);
                B.at(u[i], v[j]) = val;
                B.at(v[j], u[i]) = val;
                hyperbolic.push_back({u[i], v[j], val});
            }
            bi += 2;
        }
    }

    // Each hyperbolic pair yields an orthogonal (+1, -1) diagonal pair; each
    // odd-block middle carries its own +-1.
    std::vector<std::vector<Rational>> plus_vecs, minus_vecs;
    for (const auto& hp : hyperbolic) {
        std::vector<Rational> zp(n_), zm(n_);
        zp[hp.p] = Rational(1) / hp.beta;
        zp[hp.q] = Rational(1, 2);
        zm[hp.p] = Rational(1) / hp.beta;
        zm[hp.q] = Rational(-1, 2);
        plus_vecs.push_back(std::move(zp));
        minus_vecs.push_back(std::move(zm));
    }
    for (const auto& s : singles) {
        std::vector<Rational> v(n_);
        v[s.first] = Rational(1);
        (s.second > 0 ? plus_vecs : minus_vecs).push_back(std::move(v));
    }

    ExactMatrix Z(n_, n_);
    std::size_t ip = 0, im = 0;
    for (std::size_t col = 0; col < n_; ++col) {
        const auto& src = (so_signs_[col] > 0) ? plus_vecs[ip++] : minus_vecs[im++];
        for (std::size_t row = 0; row < n_; ++row) Z.at(row, col) = src[row];
    }
    if (!(Z.transpose() * B * Z == form_))
        throw std::logic_error("so nilpotent: congruence construction failed");
    ExactMatrix e = Z.inverse() * N * Z;
    require_member(e);
    if (!(jordan_type(e) == r)) throw std::logic_error("so nilpotent: wrong Jordan type");
    return e;
}

ExactMatrix LieAlgebraSpec::semisimple_representative(
    const std::vector<Rational>& values) const {
    switch (family_) {
        case Family::GL: {
            if (values.size() != n_) throw std::invalid_argument("need n eigenvalues");
            return ExactMatrix::diagonal(values);
        }
        case Family::SL: {
            if (values.size() != n_) throw std::invalid_argument("need n eigenvalues");
            Rational sum;
            for (const auto& v : values) sum += v;
            if (!sum.is_zero()) throw std::invalid_argument("sl: eigenvalues must sum to 0");
            return ExactMatrix::diagonal(values);
        }
        case Family::SO: {
            if (values.size() != n_ / 2)
                throw std::invalid_argument("so: need floor(n/2) pair values");
            ExactMatrix x(n_, n_);
            for (std::size_t t = 0; t < values.size(); ++t) {
                // coordinates (2t, 2t+1) carry opposite form signs, so the
                // symmetric pair block lies in the algebra, spectrum +-a_t.
                x.at(2 * t, 2 * t + 1) = values[t];
                x.at(2 * t + 1, 2 * t) = values[t];
            }
            require_member(x);
            return x;
        }
        case Family::SP:
            throw std::invalid_argument("semisimple_representative: not provided for sp");
    }
    throw std::logic_error("unreachable");
}

Partition jordan_type(const ExactMatrix& x) {
    if (!x.is_square()) throw std::invalid_argument("jordan_type: non-square");
    const std::size_t n = x.rows();
    std::vector<std::size_t> increments;  // dim ker(x^j) - dim ker(x^{j-1})
    ExactMatrix power = ExactMatrix::identity(n);
    std::size_t prev = 0;
    for (std::size_t j = 1; j <= n && prev < n; ++j) {
        power = power * x;
        const std::size_t kd = n - power.rank();
        if (kd == prev) break;
        increments.push_back(kd - prev);
        prev = kd;
    }
    if (prev != n) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    return Partition(increments).dual();
}

PrincipalTriple principal_triple_gl(std::size_t n) {
    if (n < 2) throw std::invalid_argument("principal_triple_gl: need n >= 2");
    ExactMatrix e(n, n), h(n, n), f(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        e.at(i, i + 1) = Rational(1);
        f.at(i + 1, i) = Rational((long)((i + 1) * (n - 1 - i)));
    }
    for (std::size_t i = 0; i < n; ++i) h.at(i, i) = Rational((long)(n - 1) - (long)(2 * i));
    if (!(ExactMatrix::bracket(h, e) == e.scaled(Rational(2))) ||
        !(ExactMatrix::bracket(h, f) == f.scaled(Rational(-2))) ||
        !(ExactMatrix::bracket(e, f) == h))
        throw std::logic_error("principal_triple_gl: relations failed");
    return {e, h, f};
}

Subalgebra Subalgebra::from(const LieAlgebraSpec& g, const Subspace& space) {
    if (space.ambient_dim() != g.dim())
        throw std::invalid_argument("Subalgebra: subspace not in g's coordinates");
    Subalgebra q;
    for (const auto& row : space.basis()) q.basis_mats_.push_back(g.from_coordinates(row));
    const std::size_t k = q.basis_mats_.size();
    q.structure_.assign(k, std::vector<std::vector<Rational>>(k));
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            ExactMatrix br = ExactMatrix::bracket(q.basis_mats_[a], q.basis_mats_[b]);
            auto coords = space.coordinates(g.coordinates(br));
            if (!coords)
                throw std::invalid_argument("Subalgebra: subspace not closed under bracket");
            q.structure_[a][b] = *coords;
            std::vector<Rational> neg = *coords;
            for (auto& x : neg) x = -x;
            q.structure_[b][a] = std::move(neg);
        }
    for (std::size_t a = 0; a < k; ++a) q.structure_[a][a].assign(k, Rational(0));
    return q;
}

ExactMatrix Subalgebra::functional_skew_form(const std::vector<Rational>& xi) const {
    const std::size_t k = dim();
    if (xi.size() != k) throw std::invalid_argument("functional length mismatch");
    ExactMatrix f(k, k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = a + 1; b < k; ++b) {
            Rational t;
            for (std::size_t c = 0; c < k; ++c)
                if (!structure_[a][b][c].is_zero()) t += structure_[a][b][c] * xi[c];
            f.at(a, b) = t;
            f.at(b, a) = -t;
        }
    return f;
}

Subalgebra::IndexCertificate Subalgebra::index(Rng& rng, std::size_t trials,
                                               long bound) const {
    const std::size_t k = dim();
    std::size_t best_rank = 0, agree = 0;
    std::vector<Rational> witness(k);
    const std::size_t budget = 40 * (trials ? trials : 1);
    for (std::size_t s = 0; s < budget && agree < trials; ++s) {
        std::vector<Rational> xi(k);
        for (auto& x : xi) x = rng.rational(bound);
        const std::size_t r = functional_skew_form(xi).rank();
        if (r > best_rank) {
            best_rank = r;
            witness = xi;
            agree = 1;
        } else if (r == best_rank) {
            ++agree;
        }
    }
    return {k - best_rank, witness, agree};
}

ChainSpec::ChainSpec(const LieAlgebraSpec& parent)
    : parent_(std::make_shared<LieAlgebraSpec>(parent)) {
    const std::size_t n = parent.n();
    const Family f = parent.family();
    if (f == Family::SP) throw std::invalid_argument("ChainSpec: no chain for sp");
    const std::size_t smallest = (f == Family::GL) ? 1 : 2;
    for (std::size_t m = 1; n >= m + smallest; ++m)
        levels_.push_back(std::make_shared<LieAlgebraSpec>(
            LieAlgebraSpec::make(f, n - m, (f == Family::SO) ? m : 0)));
}

const LieAlgebraSpec& ChainSpec::level(std::size_t m) const {
    if (m == 0) return *parent_;
    if (m > levels_.size()) throw std::out_of_range("ChainSpec: no such level");
    return *levels_[m - 1];
}

ExactMatrix ChainSpec::corner(const ExactMatrix& x, std::size_t m) const {
    const std::size_t n = parent_->n();
    if (m >= n) throw std::out_of_range("ChainSpec: corner would be empty");
    return x.block(m, m, n - m);
}

ExactMatrix ChainSpec::embed(const ExactMatrix& y, std::size_t m) const {
    const std::size_t n = parent_->n();
    if (y.rows() != n - m || y.cols() != n - m)
        throw std::invalid_argument("ChainSpec: embed size mismatch");
    ExactMatrix x(n, n);
    for (std::size_t i = 0; i < n - m; ++i)
        for (std::size_t j = 0; j < n - m; ++j) x.at(m + i, m + j) = y.at(i, j);
    return x;
}

}  // namespace orbitlab
