// Coefficient fields: exact rationals (GMP-backed) and prime fields Fp.
//
// Rational values are kept in canonical mpq form (normalized sign, reduced
// fraction).  Prime-field elements are stored as integer residues in [0, p)
// inside the same mpq container so every layer above sees a single scalar
// type; all arithmetic goes through Field so the reduction mod p is never
// skipped.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqmod {

using Coeff = mpq_class;

enum class FieldKind { Rationals, Prime };

struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint32_t p = 0;  // modulus when kind == Prime

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(std::uint32_t p) {
        if (!is_prime_u32(p)) throw std::invalid_argument("FieldSpec: modulus is not prime: " + std::to_string(p));
        return {FieldKind::Prime, p};
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    static bool is_prime_u32(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }
};

// Arithmetic over a FieldSpec.  Every result is canonical: reduced mpq for
// rationals, integer residue in [0, p) for Fp.
class Field {
public:
    Field() : spec_(FieldSpec::rationals()) {}
    explicit Field(FieldSpec spec) : spec_(spec) {}

    const FieldSpec& spec() const { return spec_; }

    Coeff zero() const { return Coeff(0); }
    Coeff one() const { return Coeff(1); }

    Coeff from_long(long v) const { return canon(Coeff(v)); }

    // Canonicalize an arbitrary rational into this field.
    Coeff canon(const Coeff& a) const {
        if (spec_.kind == FieldKind::Rationals) {
            Coeff r = a;
            r.canonicalize();
            return r;
        }
        // num * den^{-1} mod p
        mpz_class num = a.get_num() % spec_.p;
        if (num < 0) num += spec_.p;
        mpz_class den = a.get_den() % spec_.p;
        if (den == 0) throw std::domain_error("Field: denominator divisible by p");
        return Coeff(num * inv_mod(den));
    }

    Coeff add(const Coeff& a, const Coeff& b) const { return canon_fast(a + b); }
    Coeff sub(const Coeff& a, const Coeff& b) const { return canon_fast(a - b); }
    Coeff mul(const Coeff& a, const Coeff& b) const { return canon_fast(a * b); }
    Coeff neg(const Coeff& a) const { return canon_fast(-a); }

    Coeff inv(const Coeff& a) const {
        if (a == 0) throw std::domain_error("Field: division by zero");
        if (spec_.kind == FieldKind::Rationals) return Coeff(1) / a;
        return Coeff(inv_mod(a.get_num()));
    }

    Coeff div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

    bool is_zero(const Coeff& a) const { return a == 0; }

private:
    // Inputs already canonical, so sums/products only need the mod-p fold.
    Coeff canon_fast(const Coeff& a) const {
        if (spec_.kind == FieldKind::Rationals) return a;
        mpz_class r = a.get_num() % spec_.p;
        if (r < 0) r += spec_.p;
        return Coeff(r);
    }

    mpz_class inv_mod(const mpz_class& a) const {
        mpz_class r, m(spec_.p);
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
            throw std::domain_error("Field: element not invertible mod p");
        return r;
    }

    FieldSpec spec_;
};

}  // namespace eqmod
