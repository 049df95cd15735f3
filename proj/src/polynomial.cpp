#include "hecke/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

namespace {
const mpq_class kZero = 0;
}

Poly::Poly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const mpq_class& c) {
    Poly p;
    if (c != 0) p.c_ = {c};
    return p;
}

Poly Poly::monomial(const mpq_class& c, int degree) {
    Poly p;
    if (c != 0) {
        p.c_.assign(degree + 1, mpq_class(0));
        p.c_[degree] = c;
    }
    return p;
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

const mpq_class& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const mpq_class& Poly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()), mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return Poly(std::move(r));
}

Poly Poly::operator-() const {
    std::vector<mpq_class> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            r[i + j] += c_[i] * o.c_[j];
        }
    }
    return Poly(std::move(r));
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpq_class a = c_[i];
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::size_t Poly::size_estimate() const {
    std::size_t s = 1;
    for (const auto& x : c_) {
        s += mpz_size(x.get_num().get_mpz_t()) + mpz_size(x.get_den().get_mpz_t());
    }
    return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<mpq_class> rem(a.coeffs());
    std::vector<mpq_class> quo(a.degree() - b.degree() + 1, mpq_class(0));
    const mpq_class& lead = b.leading();
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (rem[i] == 0) continue;
        mpq_class f = rem[i] / lead;
        quo[i - b.degree()] = f;
        for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.coeff(j);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Poly poly_make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    std::vector<mpq_class> c(a.coeffs());
    mpq_class lead = a.leading();
    for (auto& x : c) x /= lead;
    return Poly(std::move(c));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(a);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return poly_make_monic(poly_exact_div(a * b, poly_gcd(a, b)));
}

PolyXgcd poly_xgcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(1), s1;
    Poly t0, t1 = Poly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s = s0 - q * s1;
        Poly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (!r0.is_zero()) {
        mpq_class lead = r0.leading();
        Poly inv = Poly::constant(1 / lead);
        r0 = inv * r0;
        s0 = inv * s0;
        t0 = inv * t0;
    }
    return {r0, s0, t0};
}

int euler_phi(int l) {
    int result = l;
    int m = l;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

Poly cyclotomic_polynomial(int l) {
    if (l < 1) throw std::invalid_argument("cyclotomic order must be >= 1");
    // x^l - 1 divided by the product of the lower cyclotomic polynomials
    std::vector<mpq_class> top(l + 1, mpq_class(0));
    top[0] = -1;
    top[l] = 1;
    Poly num((std::vector<mpq_class>(top)));
    for (int d = 1; d < l; ++d) {
        if (l % d == 0) num = poly_exact_div(num, cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace hecke
