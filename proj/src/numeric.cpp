#include "blockscope/numeric.hpp"

#include <algorithm>

namespace blockscope {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }
long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long euler_phi(long long n) {
    long long r = n;
    for (long long p : prime_divisors(n)) r = r / p * (p - 1);
    return r;
}

int valuation_ll(long long n, long long p) {
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

long long p_part_ll(long long n, long long p) {
    long long r = 1;
    while (n % p == 0) { n /= p; r *= p; }
    return r;
}

long long p_prime_part_ll(long long n, long long p) {
    while (n % p == 0) n /= p;
    return n;
}

long long pow_ll(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

long long mulmod_ll(long long a, long long b, long long m) {
    return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long powmod_ll(long long base, long long exp, long long m) {
    long long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    while (exp > 0) {
        if (exp & 1) r = mulmod_ll(r, base, m);
        base = mulmod_ll(base, base, m);
        exp >>= 1;
    }
    return r;
}

long long powmod_ll(long long base, const Int& exp, long long m) {
    long long r = 1 % m;
    base %= m;
    if (base < 0) base += m;
    const size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = mulmod_ll(r, r, m);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = mulmod_ll(r, base, m);
    }
    return r;
}

long long invmod_ll(long long a, long long m) {
    long long t = 0, newt = 1, r = m, newr = ((a % m) + m) % m;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw UsageError("invmod: arguments not coprime");
    return ((t % m) + m) % m;
}

long long mult_order(long long a, long long m) {
    if (m == 1) return 1;
    long long x = ((a % m) + m) % m;
    if (std::gcd(x, m) != 1) throw UsageError("mult_order: arguments not coprime");
    long long ord = 1, y = x;
    while (y != 1) {
        y = mulmod_ll(y, x, m);
        ++ord;
    }
    return ord;
}

std::vector<long long> units_mod(long long n) {
    std::vector<long long> out;
    if (n == 1) return {1};
    for (long long k = 1; k <= n; ++k)
        if (std::gcd(k, n) == 1) out.push_back(k);
    return out;
}

int v_p(const Int& n, long long p) {
    if (n == 0) throw UsageError("v_p: valuation of zero");
    Int q = n, P = to_int(p);
    int v = 0;
    while (mpz_divisible_p(q.get_mpz_t(), P.get_mpz_t())) {
        q /= P;
        ++v;
    }
    return v;
}

int v_p(const Rat& q, long long p) {
    if (q == 0) throw UsageError("v_p: valuation of zero");
    return v_p(Int(q.get_num()), p) - v_p(Int(q.get_den()), p);
}

std::string rat_string(const Rat& q) {
    Rat c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

} // namespace blockscope
