#pragma once

#include <iosfwd>
#include <vector>

#include "blockscope/local_context.hpp"
#include "blockscope/numeric.hpp"

namespace blockscope {

// An exact element of a cyclotomic field, stored over the power basis
// 1, z, ..., z^(phi(n)-1) of Q(zeta_n) after reduction modulo the n-th
// cyclotomic polynomial. The representation is canonical: the conductor is
// minimal (rationals have conductor 1), so two elements are equal iff their
// conductors and coefficient vectors coincide. Immutable after construction.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rat(0)} {}
    explicit Cyclotomic(const Rat& r) : conductor_(1), coeffs_{r} {
        coeffs_[0].canonicalize();
    }
    explicit Cyclotomic(long long n) : Cyclotomic(Rat(static_cast<long>(n))) {}
    explicit Cyclotomic(const Int& n) : Cyclotomic(Rat(n)) {}

    // zeta_n^e in canonical form.
    static Cyclotomic root_of_unity(long long n, long long e);

    long long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
    bool is_rational() const { return conductor_ == 1; }
    const Rat& rational_value() const; // requires is_rational()
    // Integer coordinates over the power basis (the power basis is an
    // integral basis, so this detects algebraic integers).
    bool is_integral() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic inverse() const; // throws UsageError("zero inverse") on 0

    bool operator==(const Cyclotomic& o) const {
        return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }
    // Arbitrary total order (for deterministic containers).
    bool operator<(const Cyclotomic& o) const;

    // The Galois automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
    Cyclotomic galois(long long k) const;
    Cyclotomic conjugate() const;

    std::string to_string() const;

private:
    Cyclotomic(long long n, std::vector<Rat> reduced, bool alreadyCanonical);
    static Cyclotomic make(long long n, std::vector<Rat> poly); // reduces + canonicalizes

    // Raw coefficients of this element embedded into Q(zeta_N), n | N.
    std::vector<Rat> embedded_coeffs(long long N) const;
    void canonicalize();
    bool try_descend(long long k); // rewrite over Q(zeta_k) when invariant

    long long conductor_;
    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c);

// Residue map to F_p[x]/(f) determined by zeta_{p^t} -> 1 and
// zeta_{m'} -> x^(m/m'). Requires the p'-part of the conductor to divide
// ctx.m and all denominators to be coprime to p.
FiniteFieldElem reduce_mod_prime(const Cyclotomic& a, const LocalContext& ctx);

// Valuation at the prime of ctx, in units of the element's own field:
// v(p) = ramification_index(ctx, conductor(a)). Throws on a = 0.
long long p_valuation(const Cyclotomic& a, const LocalContext& ctx);

// Same valuation normalized so that v(p) = 1 (exact rational); this is the
// scale on which elementary-divisor exponents live.
Rat p_valuation_rational(const Cyclotomic& a, const LocalContext& ctx);

} // namespace blockscope
