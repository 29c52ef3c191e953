#include "blockscope/intpoly.hpp"

#include <functional>
#include <map>
#include <mutex>

namespace blockscope {

ZPoly zp_trim(ZPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return zp_trim(std::move(r));
}

ZPoly zp_divexact_monic(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a;
    if (b.empty() || b.back() != 1) throw Error("zp_divexact_monic: divisor not monic");
    if (rem.size() < b.size()) {
        if (zp_trim(rem).empty()) return {};
        throw Error("zp_divexact_monic: inexact division");
    }
    ZPoly q(rem.size() - b.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = rem[i + b.size() - 1];
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j) rem[i + j] -= c * b[j];
    }
    if (!zp_trim(rem).empty()) throw Error("zp_divexact_monic: inexact division");
    return zp_trim(std::move(q));
}

const ZPoly& cyclotomic_polynomial(long long n) {
    static std::map<long long, ZPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::function<const ZPoly&(long long)> get = [&](long long k) -> const ZPoly& {
        auto jt = cache.find(k);
        if (jt != cache.end()) return jt->second;
        ZPoly num(k + 1, Int(0));
        num[0] = -1;
        num[k] = 1;
        for (long long d = 1; d < k; ++d)
            if (k % d == 0) num = zp_divexact_monic(num, get(d));
        return cache.emplace(k, std::move(num)).first->second;
    };
    return get(n);
}

// --- F_p[x] ----------------------------------------------------------

PPoly pp_trim(PPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

PPoly pp_from_z(const ZPoly& a, long long p) {
    PPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = mod_ll(a[i], p);
    return pp_trim(std::move(r));
}

PPoly pp_add(const PPoly& a, const PPoly& b, long long p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long long v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        r[i] = v % p;
    }
    return pp_trim(std::move(r));
}

PPoly pp_sub(const PPoly& a, const PPoly& b, long long p) {
    PPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) {
        long long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        r[i] = ((v % p) + p) % p;
    }
    return pp_trim(std::move(r));
}

PPoly pp_mul(const PPoly& a, const PPoly& b, long long p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + mulmod_ll(a[i], b[j], p)) % p;
    }
    return pp_trim(std::move(r));
}

std::pair<PPoly, PPoly> pp_divmod(const PPoly& a, const PPoly& b, long long p) {
    PPoly rem = a;
    PPoly bb = pp_trim(b);
    if (bb.empty()) throw Error("pp_divmod: division by zero polynomial");
    long long inv = invmod_ll(bb.back(), p);
    if (rem.size() < bb.size()) return {{}, pp_trim(std::move(rem))};
    PPoly q(rem.size() - bb.size() + 1, 0);
    for (size_t i = q.size(); i-- > 0;) {
        long long c = mulmod_ll(rem[i + bb.size() - 1], inv, p);
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < bb.size(); ++j) {
                long long v = rem[i + j] - mulmod_ll(c, bb[j], p);
                rem[i + j] = ((v % p) + p) % p;
            }
    }
    return {pp_trim(std::move(q)), pp_trim(std::move(rem))};
}

PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, long long p) {
    return pp_divmod(pp_mul(a, b, p), mod, p).second;
}

PPoly pp_monic(const PPoly& a, long long p) {
    PPoly r = pp_trim(a);
    if (r.empty()) return r;
    long long inv = invmod_ll(r.back(), p);
    for (auto& c : r) c = mulmod_ll(c, inv, p);
    return r;
}

PPoly pp_gcd(PPoly a, PPoly b, long long p) {
    a = pp_trim(std::move(a));
    b = pp_trim(std::move(b));
    while (!b.empty()) {
        PPoly r = pp_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return pp_monic(a, p);
}

PPoly pp_powmod(const PPoly& base, const Int& exp, const PPoly& mod, long long p) {
    PPoly r{1};
    PPoly b = pp_divmod(base, mod, p).second;
    const size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    if (exp == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = pp_mulmod(r, r, mod, p);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = pp_mulmod(r, b, mod, p);
    }
    return r;
}

namespace {

// Candidate polynomial number `t`: base-p digits of t + p, so the sweep
// runs through every nonconstant polynomial eventually.
PPoly split_candidate(long long t, long long p) {
    PPoly h;
    long long v = t + p;
    while (v > 0) {
        h.push_back(v % p);
        v /= p;
    }
    return pp_trim(std::move(h));
}

// Splits a monic squarefree product of degree-d irreducibles into one
// irreducible factor, deterministically.
PPoly find_irreducible_factor(PPoly g, long long d, long long p) {
    while (static_cast<long long>(g.size()) - 1 > d) {
        Int pd;
        mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(d));
        bool split = false;
        for (long long trial = 0; !split; ++trial) {
            PPoly h0 = split_candidate(trial, p);
            PPoly h;
            if (p == 2) {
                // Trace map of h0 into F_2.
                PPoly acc{};
                PPoly cur = pp_divmod(h0, g, p).second;
                for (long long i = 0; i < d; ++i) {
                    acc = pp_add(acc, cur, p);
                    cur = pp_mulmod(cur, cur, g, p);
                }
                h = acc;
            } else {
                // h0^((p^d - 1)/2) - 1.
                Int e = (pd - 1) / 2;
                h = pp_powmod(h0, e, g, p);
                h = pp_sub(h, PPoly{1}, p);
            }
            PPoly s = pp_gcd(h, g, p);
            if (!s.empty() && s.size() > 1 && s.size() < g.size()) {
                PPoly other = pp_divmod(g, s, p).first;
                g = (s.size() <= other.size()) ? s : pp_monic(other, p);
                split = true;
            }
            if (trial > 64 + 8 * p * static_cast<long long>(g.size()))
                throw Error("equal-degree splitting did not converge");
        }
    }
    return pp_monic(g, p);
}

} // namespace

std::vector<PPoly> irreducible_factors_of_cyclotomic(long long m, long long p,
                                                     int maxCount) {
    if (m % p == 0) throw UsageError("cyclotomic factorization: p divides m");
    const long long d = mult_order(p % m == 0 ? 1 : p % m, m);
    PPoly g = pp_monic(pp_from_z(cyclotomic_polynomial(m), p), p);
    std::vector<PPoly> out;
    while (!g.empty() && g.size() > 1 && static_cast<int>(out.size()) < maxCount) {
        PPoly f = find_irreducible_factor(g, d, p);
        out.push_back(f);
        g = pp_monic(pp_divmod(g, f, p).first, p);
    }
    return out;
}

// --- Hensel ----------------------------------------------------------

namespace {

Int mod_pos(const Int& a, const Int& M) {
    Int r = a % M;
    if (r < 0) r += M;
    return r;
}

ZPoly zp_reduce(ZPoly a, const Int& M) {
    for (auto& c : a) c = mod_pos(c, M);
    return zp_trim(std::move(a));
}

ZPoly zp_add_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) + (i < b.size() ? b[i] : Int(0));
        r[i] = mod_pos(v, M);
    }
    return zp_trim(std::move(r));
}

ZPoly zp_sub_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    ZPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int v = (i < a.size() ? a[i] : Int(0)) - (i < b.size() ? b[i] : Int(0));
        r[i] = mod_pos(v, M);
    }
    return zp_trim(std::move(r));
}

ZPoly zp_mul_mod(const ZPoly& a, const ZPoly& b, const Int& M) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return zp_reduce(std::move(r), M);
}

// Quotient/remainder by a monic divisor, coefficients mod M.
std::pair<ZPoly, ZPoly> zp_divmod_monic_mod(ZPoly a, const ZPoly& b, const Int& M) {
    if (b.empty() || b.back() != 1) throw Error("zp_divmod_monic_mod: divisor not monic");
    a = zp_reduce(std::move(a), M);
    if (a.size() < b.size()) return {{}, a};
    ZPoly q(a.size() - b.size() + 1, Int(0));
    for (size_t i = q.size(); i-- > 0;) {
        Int c = (i + b.size() - 1 < a.size()) ? a[i + b.size() - 1] : Int(0);
        q[i] = c;
        if (c != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[i + j] = mod_pos(a[i + j] - c * b[j], M);
    }
    return {zp_trim(std::move(q)), zp_trim(std::move(a))};
}

ZPoly zp_from_pp(const PPoly& a) {
    ZPoly r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = to_int(a[i]);
    return r;
}

} // namespace

ZPoly zp_mod_monic(ZPoly a, const ZPoly& b, const Int& M) {
    return zp_divmod_monic_mod(std::move(a), b, M).second;
}

ZPoly hensel_lift_cyclotomic_factor(long long m, const PPoly& f, long long p,
                                    long long N) {
    const ZPoly& phi = cyclotomic_polynomial(m);
    if (N < 1) throw UsageError("hensel lift: N must be positive");

    PPoly phiP = pp_from_z(phi, p);
    PPoly gP = pp_monic(pp_divmod(phiP, f, p).first, p);

    // Bezout s*f + t*g = 1 mod p via extended Euclid.
    PPoly r0 = f, r1 = gP;
    PPoly s0{1}, s1{}, t0{}, t1{1};
    while (!pp_trim(r1).empty()) {
        auto [q, r2] = pp_divmod(r0, r1, p);
        PPoly s2 = pp_sub(s0, pp_mul(q, s1, p), p);
        PPoly t2 = pp_sub(t0, pp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("hensel lift: factor and cofactor not coprime");
    long long lead = invmod_ll(r0[0], p);
    for (auto& c : s0) c = mulmod_ll(c, lead, p);
    for (auto& c : t0) c = mulmod_ll(c, lead, p);

    ZPoly F = zp_from_pp(f), G = zp_from_pp(gP);
    ZPoly S = zp_from_pp(s0), T = zp_from_pp(t0);
    Int M = to_int(p);
    Int target;
    mpz_ui_pow_ui(target.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(N));

    while (M < target) {
        Int M2 = M * M;
        if (M2 > target) M2 = target; // final partial step still valid
        ZPoly E = zp_sub_mod(zp_reduce(phi, M2), zp_mul_mod(F, G, M2), M2);
        // F += (T*E mod F); G += S*E + ((T*E) div F)*G.
        ZPoly TE = zp_mul_mod(T, E, M2);
        auto [q, dF] = zp_divmod_monic_mod(TE, F, M2);
        ZPoly dG = zp_add_mod(zp_mul_mod(S, E, M2), zp_mul_mod(q, G, M2), M2);
        F = zp_add_mod(F, dF, M2);
        G = zp_add_mod(G, dG, M2);
        // Refresh the Bezout pair modulo M2.
        ZPoly R = zp_sub_mod(
            zp_add_mod(zp_mul_mod(S, F, M2), zp_mul_mod(T, G, M2), M2), ZPoly{Int(1)},
            M2);
        ZPoly oneMinusR = zp_sub_mod(ZPoly{Int(1)}, R, M2);
        ZPoly S2 = zp_mul_mod(S, oneMinusR, M2);
        ZPoly T2 = zp_mul_mod(T, oneMinusR, M2);
        auto [qs, S3] = zp_divmod_monic_mod(S2, G, M2);
        T2 = zp_add_mod(T2, zp_mul_mod(qs, F, M2), M2);
        S = std::move(S3);
        T = zp_reduce(std::move(T2), M2);
        M = M2;
    }
    // Sanity: F monic of the original degree, and F | Phi_m mod p^N.
    if (F.size() != f.size() || F.back() != 1)
        throw Error("hensel lift: degree drift");
    ZPoly rem = zp_divmod_monic_mod(zp_reduce(phi, target), F, target).second;
    if (!rem.empty()) throw Error("hensel lift: lifted factor does not divide");
    return F;
}

} // namespace blockscope
