#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke {

/// Dense univariate polynomial with exact rational coefficients.
/// Coefficient i is the coefficient of x^i; trailing zeros are trimmed,
/// so the zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<mpq_class> coeffs);
    static Poly constant(const mpq_class& c);
    static Poly monomial(const mpq_class& c, int degree);

    // degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    const mpq_class& coeff(int i) const;
    const mpq_class& leading() const;
    const std::vector<mpq_class>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    mpq_class eval(const mpq_class& x) const;

    /// Renders with "q" as the variable, ascending powers: "1 - q + 3/2*q^2".
    std::string str() const;

    std::size_t size_estimate() const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// quotient and remainder; divisor must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

/// exact division, throws if the remainder is nonzero
Poly poly_exact_div(const Poly& a, const Poly& b);

/// monic gcd (gcd of anything with 0 is the other argument made monic)
Poly poly_gcd(Poly a, Poly b);

Poly poly_lcm(const Poly& a, const Poly& b);

Poly poly_make_monic(const Poly& a);

/// extended euclid: g = gcd(a,b) monic with g = s*a + t*b
struct PolyXgcd {
    Poly g, s, t;
};
PolyXgcd poly_xgcd(const Poly& a, const Poly& b);

/// the l-th cyclotomic polynomial, l >= 1
Poly cyclotomic_polynomial(int l);

/// Euler phi
int euler_phi(int l);

}  // namespace hecke
