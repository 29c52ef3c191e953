#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "blockscope/errors.hpp"

namespace blockscope {

using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long overloads; go through these.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat to_rat(long long num, long long den = 1) {
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
}
// Remainder in [0, m) of n mod m for small positive m.
inline long long mod_ll(const Int& n, long long m) {
    return static_cast<long long>(
        mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m)));
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

bool is_prime_ll(long long n);

// Distinct prime divisors, ascending.
std::vector<long long> prime_divisors(long long n);

// (prime, multiplicity) pairs, ascending primes.
std::vector<std::pair<long long, int>> factorize(long long n);

long long euler_phi(long long n);

int valuation_ll(long long n, long long p);
long long p_part_ll(long long n, long long p);
long long p_prime_part_ll(long long n, long long p);

// Integer power; callers keep exponents desk-scale.
long long pow_ll(long long base, int exp);

long long mulmod_ll(long long a, long long b, long long m);
long long powmod_ll(long long base, long long exp, long long m);
long long powmod_ll(long long base, const Int& exp, long long m);
// Throws UsageError when gcd(a, m) != 1.
long long invmod_ll(long long a, long long m);

// Multiplicative order of a modulo m (gcd(a, m) = 1 expected).
long long mult_order(long long a, long long m);

// Residues in [1, n] coprime to n, ascending. units_mod(1) = {1}.
std::vector<long long> units_mod(long long n);

int v_p(const Int& n, long long p);
int v_p(const Rat& q, long long p); // q != 0

// Canonical "num/den" rendering, e.g. "5/3", "1/1", "-2/7".
std::string rat_string(const Rat& q);

} // namespace blockscope
