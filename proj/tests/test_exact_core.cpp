#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitlab/matrix.hpp"
#include "orbitlab/poly.hpp"
#include "orbitlab/rational.hpp"
#include "orbitlab/rng.hpp"
#include "orbitlab/subspace.hpp"

using namespace orbitlab;

namespace {

Rational Q(long n) { return Rational(n); }
Rational Q(long n, long d) { return Rational(n, d); }

// Independent determinant oracle: Laplace expansion along the first row.
Rational det_oracle(const ExactMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Q(1);
    if (n == 1) return m.at(0, 0);
    Rational acc;
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (!m.at(0, j).is_zero()) {
            ExactMatrix minor(n - 1, n - 1);
            for (std::size_t r = 1; r < n; ++r) {
                std::size_t cc = 0;
                for (std::size_t c = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(r - 1, cc++) = m.at(r, c);
                }
            }
            acc += Rational(sign) * m.at(0, j) * det_oracle(minor);
        }
        sign = -sign;
    }
    return acc;
}

// Independent rank oracle: size of the largest nonvanishing minor.
std::size_t rank_oracle(const ExactMatrix& m) {
    const std::size_t n = m.rows(), c = m.cols();
    std::size_t best = 0;
    for (std::size_t k = 1; k <= std::min(n, c); ++k) {
        // enumerate k-subsets of rows and columns
        std::vector<std::size_t> ri(k), ci(k);
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        bool found = false;
        for (;;) {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            for (;;) {
                ExactMatrix sub(k, k);
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub.at(a, b) = m.at(ri[a], ci[b]);
                if (!det_oracle(sub).is_zero()) {
                    found = true;
                    break;
                }
                std::size_t i = k;
                while (i-- > 0 && ci[i] == c - k + i) {
                }
                if (i == (std::size_t)-1) break;
                ++ci[i];
                for (std::size_t j = i + 1; j < k; ++j) ci[j] = ci[j - 1] + 1;
            }
            if (found) break;
            std::size_t i = k;
            while (i-- > 0 && ri[i] == n - k + i) {
            }
            if (i == (std::size_t)-1) break;
            ++ri[i];
            for (std::size_t j = i + 1; j < k; ++j) ri[j] = ri[j - 1] + 1;
        }
        if (found) best = k;
    }
    return best;
}

ExactMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long bound) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational(bound);
    return m;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational::parse("2/4").str() == "1/2");
    CHECK(Rational::parse("-6/4").str() == "-3/2");
    CHECK(Rational::parse("3/-9").str() == "-1/3");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Q(1, 3) + Q(1, 6) == Q(1, 2));
    CHECK(Q(2, 3) * Q(3, 2) == Q(1));
    CHECK_THROWS(Q(1) / Q(0));
    CHECK(Rational::parse("1/2").den() == 2);
    CHECK(factorial(5) == Q(120));
    CHECK(factorial(0) == Q(1));
}

TEST_CASE("rank basics") {
    CHECK(ExactMatrix::identity(3).rank() == 3);
    CHECK(ExactMatrix(4, 4).rank() == 0);
    // The strongly nilpotent representative of type (2,1) in gl_3:
    // e x_1 = 0, e x_2 = x_1 + x_3, e x_3 = 0, a single nonzero column.
    ExactMatrix e(3, 3);
    e.at(0, 1) = Q(1);
    e.at(2, 1) = Q(1);
    CHECK(e.rank() == 1);
}

TEST_CASE("rank: two pivot orders agree, and match the minor oracle") {
    Rng rng(42);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r = 1 + rng.below(4), c = 1 + rng.below(4);
        ExactMatrix m = random_matrix(rng, r, c, 3);
        const std::size_t rk = m.rank();
        CHECK(rk == m.rank_alt_pivot());
        CHECK(rk == rank_oracle(m));
        CHECK(rk + Subspace::kernel(m).dim() == c);
    }
}

TEST_CASE("kernel basics") {
    CHECK(Subspace::kernel(ExactMatrix::identity(4)).dim() == 0);
    CHECK(Subspace::kernel(ExactMatrix(5, 5)).dim() == 5);
    // Skew form of the regular nilpotent e in sl_2, basis (e, h, f):
    // only nonzero pairing (h, f) -> -2.
    ExactMatrix form(3, 3);
    form.at(1, 2) = Q(-2);
    form.at(2, 1) = Q(2);
    Subspace k = Subspace::kernel(form);
    CHECK(k.dim() == 1);
    CHECK(k.contains({Q(1), Q(0), Q(0)}));
}

TEST_CASE("subspace sums") {
    Subspace v = Subspace::span(3, {{Q(1), Q(0), Q(0)}});
    CHECK(v.sum(v) == v);
    Subspace w = Subspace::span(3, {{Q(0), Q(0), Q(1)}});
    CHECK(v.sum(w).dim() == 2);
    // Kernels of the sl_2 pencil e^ + t f^ at t = 1, 2 are (1,0,1), (1,0,2);
    // together they span <e, f>.
    Subspace k1 = Subspace::span(3, {{Q(1), Q(0), Q(1)}});
    Subspace k2 = Subspace::span(3, {{Q(1), Q(0), Q(2)}});
    Subspace l = Subspace::sum_of({k1, k2});
    CHECK(l.dim() == 2);
    CHECK(l == Subspace::span(3, {{Q(1), Q(0), Q(0)}, {Q(0), Q(0), Q(1)}}));
    CHECK_THROWS(v.sum(Subspace::span(2, {{Q(1), Q(0)}})));
}

TEST_CASE("subspace normal form is order independent") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> vs;
        for (int i = 0; i < 4; ++i) {
            std::vector<Rational> v(5);
            for (auto& x : v) x = rng.rational(4);
            vs.push_back(v);
        }
        Subspace a = Subspace::span(5, vs);
        std::vector<std::vector<Rational>> rev(vs.rbegin(), vs.rend());
        Subspace b = Subspace::span(5, rev);
        CHECK(a == b);
        for (const auto& v : vs) CHECK(a.contains(v));
    }
}

TEST_CASE("subspace coordinates") {
    Subspace s = Subspace::span(3, {{Q(1), Q(1), Q(0)}, {Q(0), Q(1), Q(1)}});
    auto c = s.coordinates({Q(1), Q(2), Q(1)});
    REQUIRE(c.has_value());
    // reconstruct
    std::vector<Rational> back(3);
    for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t j = 0; j < 3; ++j) back[j] += (*c)[r] * s.basis()[r][j];
    CHECK(back == std::vector<Rational>{Q(1), Q(2), Q(1)});
    CHECK(!s.coordinates({Q(1), Q(0), Q(0)}).has_value());
}

TEST_CASE("interpolation basics") {
    auto p1 = interpolate({{Q(0), Q(1)}, {Q(1), Q(1)}});
    CHECK(p1.degree() == 0);
    CHECK(p1.coeff(0) == Q(1));

    auto p2 = interpolate({{Q(0), Q(0)}, {Q(1), Q(1)}, {Q(2), Q(4)}});
    CHECK(p2 == RationalPoly({Q(0), Q(0), Q(1)}));

    // det(x + t diag(1,0)) for x = [[0,1],[1,0]]: constant -1, so the
    // directional derivative of det along diag(1,0) vanishes at x.
    ExactMatrix x{{Q(0), Q(1)}, {Q(1), Q(0)}};
    ExactMatrix a = ExactMatrix::diagonal({Q(1), Q(0)});
    std::vector<std::pair<Rational, Rational>> pts;
    for (long t = 0; t <= 2; ++t) {
        ExactMatrix xt = x + a.scaled(Q(t));
        pts.push_back({Q(t), xt.det()});
    }
    auto p3 = interpolate(pts);
    CHECK(p3.coeff(0) == Q(-1));
    CHECK(p3.coeff(1) == Q(0));

    CHECK_THROWS(interpolate({{Q(1), Q(1)}, {Q(1), Q(2)}}));
}

TEST_CASE("interpolate after evaluate is the identity") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t deg = rng.below(5);
        std::vector<Rational> cs(deg + 1);
        for (auto& c : cs) c = rng.rational(5);
        RationalPoly p(cs);
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t t = 0; t <= deg; ++t) pts.push_back({Q((long)t), p.eval(Q((long)t))});
        CHECK(interpolate(pts) == p);
    }
}

TEST_CASE("determinant against Laplace oracle") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        ExactMatrix m = random_matrix(rng, 4, 4, 4);
        CHECK(m.det() == det_oracle(m));
    }
    CHECK(ExactMatrix::identity(3).det() == Q(1));
}

TEST_CASE("inverse") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m = random_matrix(rng, 3, 3, 5);
        if (m.det().is_zero()) continue;
        CHECK(m * m.inverse() == ExactMatrix::identity(3));
    }
    CHECK_THROWS(ExactMatrix(2, 2).inverse());
}

TEST_CASE("char poly") {
    ExactMatrix d = ExactMatrix::diagonal({Q(1), Q(2), Q(3)});
    auto c = d.char_poly();
    // (l-1)(l-2)(l-3) = l^3 - 6 l^2 + 11 l - 6
    CHECK(c == std::vector<Rational>{Q(-6), Q(11), Q(-6), Q(1)});
    ExactMatrix n(3, 3);
    n.at(0, 1) = Q(1);
    n.at(1, 2) = Q(1);
    CHECK(n.char_poly() == std::vector<Rational>{Q(0), Q(0), Q(0), Q(1)});
}

TEST_CASE("pfaffian") {
    ExactMatrix s2{{Q(0), Q(3)}, {Q(-3), Q(0)}};
    CHECK(s2.pfaffian() == Q(3));
    // Pf^2 = det for a random skew 4x4.
    Rng rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                m.at(i, j) = rng.rational(4);
                m.at(j, i) = -m.at(i, j);
            }
        Rational pf = m.pfaffian();
        CHECK(pf * pf == m.det());
        // explicit 4x4 formula
        CHECK(pf == m.at(0, 1) * m.at(2, 3) - m.at(0, 2) * m.at(1, 3) +
                        m.at(0, 3) * m.at(1, 2));
    }
    CHECK_THROWS(ExactMatrix{{Q(0), Q(1)}, {Q(1), Q(0)}}.pfaffian());
}

TEST_CASE("poly arithmetic, gcd, roots") {
    // (t-1)^2 (t+2) = t^3 - 3t + 2
    RationalPoly p({Q(2), Q(-3), Q(0), Q(1)});
    auto sf = p.squarefree();
    // squarefree part (t-1)(t+2) = t^2 + t - 2
    CHECK(sf == RationalPoly({Q(-2), Q(1), Q(1)}));
    auto roots = p.rational_roots();
    CHECK(roots.size() == 2);
    bool has1 = false, hasm2 = false;
    for (const auto& r : roots) {
        has1 = has1 || r == Q(1);
        hasm2 = hasm2 || r == Q(-2);
    }
    CHECK(has1);
    CHECK(hasm2);
    CHECK(p.remove_rational_roots().degree() == 0);

    RationalPoly a({Q(1), Q(1)});        // t + 1
    RationalPoly b({Q(-1), Q(0), Q(1)});  // t^2 - 1
    CHECK(RationalPoly::gcd(a * a, b) == a.monic());
    auto [q, r] = b.divmod(a);
    CHECK(r.is_zero());
    CHECK(q == RationalPoly({Q(-1), Q(1)}));

    // root 2/3 survives denominator clearing
    RationalPoly c({Q(-2, 3), Q(1)});
    auto rr = (c * c).rational_roots();
    REQUIRE(rr.size() == 1);
    CHECK(rr[0] == Q(2, 3));
}

TEST_CASE("rng determinism") {
    Rng a(123), b(123);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng c(123);
    Rng c1 = c.split(1);
    Rng c2 = c.split(1);
    CHECK(c1.next_u64() != c2.next_u64());  // split advances the parent
    for (int i = 0; i < 50; ++i) {
        Rng d(1000 + i);
        Rational r = d.rational(10);
        CHECK(r.num() <= 10);
        CHECK(r.den() <= 10);
        CHECK(r.den() >= 1);
    }
}
