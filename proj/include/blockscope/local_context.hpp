#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "blockscope/intpoly.hpp"
#include "blockscope/numeric.hpp"

namespace blockscope {

class LocalContext;

// Element of F_p[x]/(f); coefficient vector of length deg(f).
struct FiniteFieldElem {
    std::vector<long long> coeffs;

    bool operator==(const FiniteFieldElem& o) const { return coeffs == o.coeffs; }
    bool operator!=(const FiniteFieldElem& o) const { return coeffs != o.coeffs; }
    bool operator<(const FiniteFieldElem& o) const { return coeffs < o.coeffs; }
    bool is_zero() const {
        for (long long c : coeffs)
            if (c) return false;
        return true;
    }
};

// Fixes one prime ideal over p in the m-th cyclotomic field: p, the
// p'-conductor m, one monic irreducible factor f of Phi_m mod p of degree
// d = ord_m(p), and a cache of Hensel lifts f_N of f modulo p^N. Immutable
// except for the internally synchronized lift cache.
class LocalContext {
public:
    // variant selects among the distinct irreducible factors of Phi_m mod p
    // (all block/section results are factor-independent; variants exist so
    // tests can assert exactly that).
    LocalContext(long long p, long long m, int variant = 0);

    long long p() const { return p_; }
    long long m() const { return m_; }
    long long degree() const { return d_; }
    const PPoly& f() const { return f_; }
    int variant() const { return variant_; }
    static int factor_count(long long p, long long m);

    // f_N with f_N = f (mod p) and f_N | Phi_m (mod p^N).
    ZPoly hensel_lift(long long N) const;

    // --- residue field arithmetic -------------------------------------
    FiniteFieldElem ff_zero() const;
    FiniteFieldElem ff_one() const;
    FiniteFieldElem ff_from_int(const Int& n) const;
    // Image of zeta_m^e, i.e. x^e mod f.
    FiniteFieldElem ff_root_power(long long e) const;
    FiniteFieldElem ff_add(const FiniteFieldElem& a, const FiniteFieldElem& b) const;
    FiniteFieldElem ff_sub(const FiniteFieldElem& a, const FiniteFieldElem& b) const;
    FiniteFieldElem ff_mul(const FiniteFieldElem& a, const FiniteFieldElem& b) const;
    FiniteFieldElem ff_inv(const FiniteFieldElem& a) const;
    FiniteFieldElem ff_neg(const FiniteFieldElem& a) const;
    FiniteFieldElem ff_from_poly(const PPoly& poly) const;

private:
    long long p_;
    long long m_;
    long long d_;
    int variant_;
    PPoly f_;
    mutable std::map<long long, ZPoly> lifts_;
    mutable std::mutex mu_;
};

// Ramification index of Q(zeta_conductor) over p: phi(p-part of conductor).
long long ramification_index(const LocalContext& ctx, long long conductor);

} // namespace blockscope
