#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ttower {

/// Exact coefficient field: the rationals or a prime field F_p (p < 2^16).
/// Scalars are carried as mpq_class throughout; over F_p they are kept
/// normalized to integers in [0, p).
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    unsigned long p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime(unsigned long p) {
        if (p < 2 || p >= (1UL << 16) || !is_prime(p))
            throw std::invalid_argument("FieldSpec: p must be a prime < 2^16, got " + std::to_string(p));
        return FieldSpec{Kind::Prime, p};
    }

    bool operator==(const FieldSpec&) const = default;

    static bool is_prime(unsigned long n) {
        if (n < 2) return false;
        for (unsigned long d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    mpq_class normalize(const mpq_class& x) const {
        if (kind == Kind::Rationals) {
            mpq_class r = x;
            r.canonicalize();
            return r;
        }
        // a/b mod p: numerator reduced times inverse of denominator.
        mpz_class num = x.get_num() % mpz_class(p);
        mpz_class den = x.get_den() % mpz_class(p);
        if (num < 0) num += p;
        if (den < 0) den += p;
        if (den == 0) throw std::domain_error("FieldSpec: denominator divisible by p");
        mpz_class r = (num * inv_mod(den)) % mpz_class(p);
        return mpq_class(r);
    }

    mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
    mpq_class neg(const mpq_class& a) const { return normalize(-a); }

    mpq_class inv(const mpq_class& a) const {
        if (a == 0) throw std::domain_error("FieldSpec: division by zero");
        if (kind == Kind::Rationals) return mpq_class(1) / a;
        mpq_class n = normalize(a);
        return mpq_class(inv_mod(n.get_num()));
    }

    mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }

  private:
    // Extended Euclid inverse mod p; argument in [1, p).
    mpz_class inv_mod(const mpz_class& a) const {
        mpz_class r;
        if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
            throw std::domain_error("FieldSpec: not invertible mod p");
        return r;
    }
};

}  // namespace ttower
