#include "hecke/scalar.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace hecke {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t p) {
    std::int64_t r = a % p;
    return r < 0 ? r + p : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    // p < 2^31, so the product fits in a signed 64-bit integer
    return (a * b) % p;
}

std::int64_t mod_pow(std::int64_t a, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    a = mod_pos(a, p);
    while (e > 0) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) {
    if (a % p == 0) throw DivisionByZero("division by zero in prime field");
    return mod_pow(a, p - 2, p);
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

RatFun ratfun_normalize(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator in rational function");
    if (num.is_zero()) return RatFun{Poly(), Poly::constant(1)};
    Poly g = poly_gcd(num, den);
    if (g.degree() > 0) {
        num = poly_exact_div(num, g);
        den = poly_exact_div(den, g);
    }
    mpq_class lead = den.leading();
    if (lead != 1) {
        Poly inv = Poly::constant(1 / lead);
        num = inv * num;
        den = inv * den;
    }
    return RatFun{std::move(num), std::move(den)};
}

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    v.canonicalize();
    return v;
}

std::int64_t parse_int(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

}  // namespace

const ScalarField* ScalarField::intern(ScalarField f) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<ScalarField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(f.descriptor);
    if (it == registry.end()) {
        auto owned = std::unique_ptr<ScalarField>(new ScalarField(std::move(f)));
        it = registry.emplace(owned->descriptor, std::move(owned)).first;
    }
    return it->second.get();
}

const ScalarField* ScalarField::rational(const mpq_class& q) {
    if (q == 0) throw std::invalid_argument("q must be nonzero");
    ScalarField f;
    f.kind = FieldKind::RationalQ;
    mpq_class qc = q;
    qc.canonicalize();
    f.rational_q = qc;
    f.descriptor = "rational:q=" + qc.get_str();
    return intern(std::move(f));
}

const ScalarField* ScalarField::prime(std::int64_t p, std::int64_t q) {
    if (!is_prime(p) || p > (std::int64_t{1} << 31) - 1)
        throw std::invalid_argument("modulus must be a prime below 2^31");
    if (mod_pos(q, p) == 0) throw std::invalid_argument("q must be a unit mod p");
    ScalarField f;
    f.kind = FieldKind::PrimeField;
    f.p = p;
    f.prime_q = mod_pos(q, p);
    f.descriptor = "gf:p=" + std::to_string(p) + ",q=" + std::to_string(f.prime_q);
    return intern(std::move(f));
}

const ScalarField* ScalarField::cyclotomic(int ell) {
    if (ell < 2) throw std::invalid_argument("cyclotomic order must be >= 2");
    ScalarField f;
    f.kind = FieldKind::CyclotomicRoot;
    f.ell = ell;
    f.minimal_poly = cyclotomic_polynomial(ell);
    f.degree = f.minimal_poly.degree();
    f.descriptor = "cyclotomic:l=" + std::to_string(ell);
    return intern(std::move(f));
}

const ScalarField* ScalarField::generic() {
    ScalarField f;
    f.kind = FieldKind::GenericQ;
    f.descriptor = "generic";
    return intern(std::move(f));
}

const ScalarField* ScalarField::parse(const std::string& descriptor) {
    auto colon = descriptor.find(':');
    std::string head = descriptor.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : descriptor.substr(colon + 1);
    if (head == "generic") {
        if (!rest.empty()) throw std::invalid_argument("unexpected parameters: " + descriptor);
        return generic();
    }
    std::map<std::string, std::string> kv;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad field descriptor: " + descriptor);
        kv[item.substr(0, eq)] = item.substr(eq + 1);
    }
    if (head == "rational") {
        if (kv.size() != 1 || !kv.count("q")) throw std::invalid_argument("bad field descriptor: " + descriptor);
        return rational(parse_rational(kv["q"]));
    }
    if (head == "gf") {
        if (kv.size() != 2 || !kv.count("p") || !kv.count("q"))
            throw std::invalid_argument("bad field descriptor: " + descriptor);
        return prime(parse_int(kv["p"]), parse_int(kv["q"]));
    }
    if (head == "cyclotomic") {
        if (kv.size() != 1 || !kv.count("l")) throw std::invalid_argument("bad field descriptor: " + descriptor);
        return cyclotomic(static_cast<int>(parse_int(kv["l"])));
    }
    throw std::invalid_argument("unknown field kind: " + descriptor);
}

bool ScalarField::q_is_one() const {
    switch (kind) {
        case FieldKind::RationalQ: return rational_q == 1;
        case FieldKind::PrimeField: return prime_q == 1;
        case FieldKind::CyclotomicRoot: return false;  // ell >= 2
        case FieldKind::GenericQ: return false;
    }
    return false;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (f_ != o.f_) throw FieldMismatch("scalars from different fields");
}

Scalar Scalar::zero(const ScalarField* f) { return from_int(f, 0); }
Scalar Scalar::one(const ScalarField* f) { return from_int(f, 1); }

Scalar Scalar::from_int(const ScalarField* f, long v) {
    return from_rational(f, mpq_class(v));
}

Scalar Scalar::from_rational(const ScalarField* f, const mpq_class& v) {
    switch (f->kind) {
        case FieldKind::RationalQ: return Scalar(f, v);
        case FieldKind::PrimeField: {
            if (v.get_den() != 1) {
                std::int64_t num = mod_pos(mpz_fdiv_ui(v.get_num().get_mpz_t(), f->p), f->p);
                std::int64_t den = mod_pos(mpz_fdiv_ui(v.get_den().get_mpz_t(), f->p), f->p);
                return Scalar(f, mod_mul(num, mod_inv(den, f->p), f->p));
            }
            std::int64_t r = mpz_fdiv_ui(v.get_num().get_mpz_t(), f->p);
            return Scalar(f, mod_pos(r, f->p));
        }
        case FieldKind::CyclotomicRoot: {
            CycVec c(f->degree, mpq_class(0));
            c[0] = v;
            return Scalar(f, std::move(c));
        }
        case FieldKind::GenericQ:
            return Scalar(f, RatFun{Poly::constant(v), Poly::constant(1)});
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::q_power(const ScalarField* f, long k) {
    switch (f->kind) {
        case FieldKind::RationalQ: {
            mpq_class r = 1;
            mpq_class base = k >= 0 ? f->rational_q : mpq_class(1) / f->rational_q;
            long e = k >= 0 ? k : -k;
            for (long i = 0; i < e; ++i) r *= base;
            return Scalar(f, r);
        }
        case FieldKind::PrimeField: {
            std::int64_t base = k >= 0 ? f->prime_q : mod_inv(f->prime_q, f->p);
            return Scalar(f, mod_pow(base, k >= 0 ? k : -k, f->p));
        }
        case FieldKind::CyclotomicRoot: {
            long e = ((k % f->ell) + f->ell) % f->ell;  // q^ell = 1
            Poly qe = Poly::monomial(1, static_cast<int>(e));
            Poly red = poly_divmod(qe, f->minimal_poly).second;
            CycVec c(f->degree, mpq_class(0));
            for (int i = 0; i <= red.degree(); ++i) c[i] = red.coeff(i);
            return Scalar(f, std::move(c));
        }
        case FieldKind::GenericQ: {
            if (k >= 0) return Scalar(f, RatFun{Poly::monomial(1, static_cast<int>(k)), Poly::constant(1)});
            return Scalar(f, RatFun{Poly::constant(1), Poly::monomial(1, static_cast<int>(-k))});
        }
    }
    throw std::logic_error("unreachable");
}

bool Scalar::is_zero() const {
    switch (f_->kind) {
        case FieldKind::RationalQ: return std::get<mpq_class>(v_) == 0;
        case FieldKind::PrimeField: return std::get<std::int64_t>(v_) == 0;
        case FieldKind::CyclotomicRoot: {
            for (const auto& x : std::get<CycVec>(v_))
                if (x != 0) return false;
            return true;
        }
        case FieldKind::GenericQ: return std::get<RatFun>(v_).num.is_zero();
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(f_); }

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    switch (f_->kind) {
        case FieldKind::RationalQ:
            return Scalar(f_, mpq_class(std::get<mpq_class>(v_) + std::get<mpq_class>(o.v_)));
        case FieldKind::PrimeField:
            return Scalar(f_, (std::get<std::int64_t>(v_) + std::get<std::int64_t>(o.v_)) % f_->p);
        case FieldKind::CyclotomicRoot: {
            CycVec c = std::get<CycVec>(v_);
            const CycVec& d = std::get<CycVec>(o.v_);
            for (std::size_t i = 0; i < c.size(); ++i) c[i] += d[i];
            return Scalar(f_, std::move(c));
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            const RatFun& b = std::get<RatFun>(o.v_);
            return Scalar(f_, ratfun_normalize(a.num * b.den + b.num * a.den, a.den * b.den));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator-() const {
    switch (f_->kind) {
        case FieldKind::RationalQ: return Scalar(f_, mpq_class(-std::get<mpq_class>(v_)));
        case FieldKind::PrimeField: return Scalar(f_, mod_pos(-std::get<std::int64_t>(v_), f_->p));
        case FieldKind::CyclotomicRoot: {
            CycVec c = std::get<CycVec>(v_);
            for (auto& x : c) x = -x;
            return Scalar(f_, std::move(c));
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            return Scalar(f_, RatFun{-a.num, a.den});
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    switch (f_->kind) {
        case FieldKind::RationalQ:
            return Scalar(f_, mpq_class(std::get<mpq_class>(v_) * std::get<mpq_class>(o.v_)));
        case FieldKind::PrimeField:
            return Scalar(f_, mod_mul(std::get<std::int64_t>(v_), std::get<std::int64_t>(o.v_), f_->p));
        case FieldKind::CyclotomicRoot: {
            const CycVec& a = std::get<CycVec>(v_);
            const CycVec& b = std::get<CycVec>(o.v_);
            Poly pa{std::vector<mpq_class>(a)};
            Poly pb{std::vector<mpq_class>(b)};
            Poly red = poly_divmod(pa * pb, f_->minimal_poly).second;
            CycVec c(f_->degree, mpq_class(0));
            for (int i = 0; i <= red.degree(); ++i) c[i] = red.coeff(i);
            return Scalar(f_, std::move(c));
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            const RatFun& b = std::get<RatFun>(o.v_);
            return Scalar(f_, ratfun_normalize(a.num * b.num, a.den * b.den));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    switch (f_->kind) {
        case FieldKind::RationalQ:
            return Scalar(f_, mpq_class(1 / std::get<mpq_class>(v_)));
        case FieldKind::PrimeField:
            return Scalar(f_, mod_inv(std::get<std::int64_t>(v_), f_->p));
        case FieldKind::CyclotomicRoot: {
            const CycVec& a = std::get<CycVec>(v_);
            Poly pa{std::vector<mpq_class>(a)};
            // pa is invertible mod the (irreducible) minimal polynomial
            PolyXgcd x = poly_xgcd(pa, f_->minimal_poly);
            if (!x.g.is_one()) throw std::logic_error("cyclotomic inverse failed");
            Poly red = poly_divmod(x.s, f_->minimal_poly).second;
            CycVec c(f_->degree, mpq_class(0));
            for (int i = 0; i <= red.degree(); ++i) c[i] = red.coeff(i);
            return Scalar(f_, std::move(c));
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            return Scalar(f_, ratfun_normalize(a.den, a.num));
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    if (o.is_zero()) throw DivisionByZero("division by zero");
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const {
    switch (f_->kind) {
        case FieldKind::RationalQ: return std::get<mpq_class>(v_).get_str();
        case FieldKind::PrimeField: return std::to_string(std::get<std::int64_t>(v_));
        case FieldKind::CyclotomicRoot:
            return Poly(std::vector<mpq_class>(std::get<CycVec>(v_))).str();
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            if (a.den.is_one()) return a.num.str();
            return "(" + a.num.str() + ")/(" + a.den.str() + ")";
        }
    }
    return "";
}

std::size_t Scalar::size_estimate() const {
    switch (f_->kind) {
        case FieldKind::RationalQ: {
            const mpq_class& x = std::get<mpq_class>(v_);
            return 1 + mpz_size(x.get_num().get_mpz_t()) + mpz_size(x.get_den().get_mpz_t());
        }
        case FieldKind::PrimeField: return 1;
        case FieldKind::CyclotomicRoot: {
            std::size_t s = 1;
            for (const auto& x : std::get<CycVec>(v_))
                s += mpz_size(x.get_num().get_mpz_t()) + mpz_size(x.get_den().get_mpz_t());
            return s;
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            return a.num.size_estimate() + a.den.size_estimate();
        }
    }
    return 1;
}

bool Scalar::is_signed_q_monomial() const {
    if (is_zero()) return true;
    switch (f_->kind) {
        case FieldKind::RationalQ:
        case FieldKind::PrimeField:
        case FieldKind::CyclotomicRoot: {
            if (f_->q_is_one()) return is_one() || (-*this).is_one();
            // walk q^k incrementally in both directions
            long limit = f_->kind == FieldKind::CyclotomicRoot ? f_->ell : 64;
            Scalar up = one(f_);
            Scalar down = one(f_);
            Scalar q = q_power(f_, 1);
            Scalar qinv = q.inverse();
            for (long k = 0; k <= limit; ++k) {
                if (up == *this || -up == *this) return true;
                if (down == *this || -down == *this) return true;
                up = up * q;
                down = down * qinv;
            }
            return false;
        }
        case FieldKind::GenericQ: {
            const RatFun& a = std::get<RatFun>(v_);
            auto monomial = [](const Poly& p) {
                if (p.is_zero()) return false;
                for (int i = 0; i < p.degree(); ++i)
                    if (p.coeff(i) != 0) return false;
                return p.leading() == 1 || p.leading() == -1;
            };
            return monomial(a.num) && monomial(a.den);
        }
    }
    return false;
}

mpq_class Scalar::eval_at(const mpq_class& c) const {
    if (f_->kind != FieldKind::GenericQ)
        throw std::logic_error("eval_at only applies to generic-q scalars");
    const RatFun& a = std::get<RatFun>(v_);
    mpq_class den = a.den.eval(c);
    if (den == 0) throw DivisionByZero("denominator vanishes at evaluation point");
    return a.num.eval(c) / den;
}

}  // namespace hecke
