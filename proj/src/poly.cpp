#include "orbitlab/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace orbitlab {

Rational RationalPoly::eval(const Rational& t) const {
    Rational acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * t + c_[k];
    return acc;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) + o.coeff(k);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = coeff(k) - o.coeff(k);
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::scaled(const Rational& f) const {
    std::vector<Rational> r = c_;
    for (auto& x : r) x *= f;
    return RationalPoly(std::move(r));
}

std::pair<RationalPoly, RationalPoly> RationalPoly::divmod(const RationalPoly& d) const {
    if (d.is_zero()) throw std::domain_error("RationalPoly: division by zero polynomial");
    std::vector<Rational> rem = c_;
    std::vector<Rational> quo;
    const long dd = d.degree();
    while ((long)rem.size() - 1 >= dd) {
        while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        if ((long)rem.size() - 1 < dd) break;
        const std::size_t shift = rem.size() - 1 - dd;
        const Rational q = rem.back() / d.c_.back();
        if (quo.size() < shift + 1) quo.resize(shift + 1);
        quo[shift] = q;
        for (std::size_t k = 0; k <= (std::size_t)dd; ++k) rem[shift + k] -= q * d.c_[k];
        rem.pop_back();
    }
    return {RationalPoly(std::move(quo)), RationalPoly(std::move(rem))};
}

RationalPoly RationalPoly::derivative() const {
    if (c_.size() <= 1) return RationalPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = Rational((long)k) * c_[k];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / c_.back());
}

RationalPoly RationalPoly::gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalPoly RationalPoly::squarefree() const {
    if (is_zero() || degree() == 0) return monic();
    RationalPoly g = gcd(*this, derivative());
    return divmod(g).first.monic();
}

std::vector<Rational> RationalPoly::rational_roots() const {
    std::vector<Rational> roots;
    if (is_zero() || degree() == 0) return roots;
    // Clear denominators to an integer polynomial.
    mpz_class l = 1;
    for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    std::vector<mpz_class> z(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) z[k] = c_[k].num() * (l / c_[k].den());
    // Strip powers of t.
    std::size_t low = 0;
    while (low < z.size() && z[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 >= z.size()) return roots;
    mpz_class a0 = z[low], an = z.back();
    if (a0 < 0) a0 = -a0;
    if (an < 0) an = -an;

    auto divisors = [](const mpz_class& m) {
        std::vector<mpz_class> ds;
        mpz_class d = 1;
        for (; d * d <= m; ++d) {
            if (m % d == 0) {
                ds.push_back(d);
                if (d * d != m) ds.push_back(m / d);
            }
        }
        return ds;
    };
    const auto ps = divisors(a0);
    const auto qs = divisors(an);
    for (const auto& p : ps)
        for (const auto& q : qs)
            for (int s : {1, -1}) {
                Rational cand(mpq_class(s * p, q));
                if (eval(cand).is_zero()) {
                    bool seen = false;
                    for (const auto& r : roots) seen = seen || r == cand;
                    if (!seen) roots.push_back(cand);
                }
            }
    return roots;
}

RationalPoly RationalPoly::remove_rational_roots() const {
    RationalPoly p = *this;
    bool changed = true;
    while (changed && !p.is_zero() && p.degree() > 0) {
        changed = false;
        for (const auto& r : p.rational_roots()) {
            RationalPoly lin({-r, Rational(1)});
            while (p.degree() > 0 && p.eval(r).is_zero()) {
                p = p.divmod(lin).first;
                changed = true;
            }
        }
    }
    return p;
}

std::string RationalPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k >= 1) os << "*t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    return os.str();
}

RationalPoly interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("interpolate: repeated abscissa");
    // Newton's divided differences.
    std::vector<Rational> coef(n), xs(n);
    for (std::size_t i = 0; i < n; ++i) {
        coef[i] = points[i].second;
        xs[i] = points[i].first;
    }
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n; i-- > level;)
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
    RationalPoly p;
    for (std::size_t i = n; i-- > 0;) {
        RationalPoly lin({-xs[i], Rational(1)});
        p = p * lin + RationalPoly::constant(coef[i]);
    }
    return p;
}

}  // namespace orbitlab
