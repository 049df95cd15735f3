#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hecke/polynomial.hpp"

namespace hecke {

struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DivisionByZero : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class FieldKind { RationalQ, PrimeField, CyclotomicRoot, GenericQ };

/// Rational function in q over the rationals; denominator monic, gcd cancelled.
struct RatFun {
    Poly num;
    Poly den = Poly::constant(1);
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

/// Exact coefficient field with a distinguished invertible parameter q.
///
/// Fields are interned: the factory functions return pointers with program
/// lifetime, so scalars can hold plain field pointers and field identity is
/// pointer identity.
class ScalarField {
public:
    FieldKind kind;
    std::string descriptor;  // canonical descriptor, e.g. "gf:p=2,q=1"

    // RationalQ
    mpq_class rational_q;
    // PrimeField
    std::int64_t p = 0;
    std::int64_t prime_q = 0;
    // CyclotomicRoot
    int ell = 0;
    int degree = 0;  // euler_phi(ell)
    Poly minimal_poly;

    static const ScalarField* rational(const mpq_class& q);
    static const ScalarField* prime(std::int64_t p, std::int64_t q);
    static const ScalarField* cyclotomic(int ell);
    static const ScalarField* generic();

    /// Descriptor grammar: "rational:q=<rat>", "gf:p=<int>,q=<int>",
    /// "cyclotomic:l=<int>", "generic".
    static const ScalarField* parse(const std::string& descriptor);

    bool q_is_one() const;

private:
    ScalarField() = default;
    static const ScalarField* intern(ScalarField f);
};

class Scalar {
public:
    Scalar() : f_(nullptr) {}

    static Scalar zero(const ScalarField* f);
    static Scalar one(const ScalarField* f);
    static Scalar from_int(const ScalarField* f, long v);
    static Scalar from_rational(const ScalarField* f, const mpq_class& v);
    /// q^k, k may be negative
    static Scalar q_power(const ScalarField* f, long k);

    const ScalarField* field() const { return f_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// canonical string form per field variant
    std::string str() const;

    /// rough representation size, used for pivot selection
    std::size_t size_estimate() const;

    /// true when the value is 0 or +-q^k for some integer k
    bool is_signed_q_monomial() const;

    /// evaluate a GenericQ value at a rational point (denominator must not vanish)
    mpq_class eval_at(const mpq_class& c) const;

    using CycVec = std::vector<mpq_class>;
    using Value = std::variant<mpq_class, std::int64_t, CycVec, RatFun>;
    const Value& value() const { return v_; }

private:
    Scalar(const ScalarField* f, Value v) : f_(f), v_(std::move(v)) {}
    void check_same_field(const Scalar& o) const;

    const ScalarField* f_;
    Value v_;
};

}  // namespace hecke
