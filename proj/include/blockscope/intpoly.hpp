#pragma once

#include <vector>

#include "blockscope/numeric.hpp"

namespace blockscope {

// Dense little-endian polynomials. ZPoly over Z, PPoly over F_p with
// int64 residues in [0, p). The zero polynomial is the empty vector.
using ZPoly = std::vector<Int>;
using PPoly = std::vector<long long>;

// --- Z[x] ------------------------------------------------------------

ZPoly zp_trim(ZPoly a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
// Exact division by a monic divisor; throws Error if a remainder is left.
ZPoly zp_divexact_monic(const ZPoly& a, const ZPoly& b);

// n-th cyclotomic polynomial, cached and thread-safe.
const ZPoly& cyclotomic_polynomial(long long n);

// --- F_p[x] ----------------------------------------------------------

PPoly pp_trim(PPoly a);
PPoly pp_from_z(const ZPoly& a, long long p);
PPoly pp_add(const PPoly& a, const PPoly& b, long long p);
PPoly pp_sub(const PPoly& a, const PPoly& b, long long p);
PPoly pp_mul(const PPoly& a, const PPoly& b, long long p);
PPoly pp_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, long long p);
// Quotient/remainder by an arbitrary nonzero divisor.
std::pair<PPoly, PPoly> pp_divmod(const PPoly& a, const PPoly& b, long long p);
PPoly pp_monic(const PPoly& a, long long p);
PPoly pp_gcd(PPoly a, PPoly b, long long p);
PPoly pp_powmod(const PPoly& base, const Int& exp, const PPoly& mod, long long p);

// Distinct monic irreducible factors of Phi_m mod p (p coprime to m),
// deterministic order, at most maxCount of them. Every factor has degree
// ord_m(p).
std::vector<PPoly> irreducible_factors_of_cyclotomic(long long m, long long p,
                                                     int maxCount);

// --- lifting ----------------------------------------------------------

// Lifts the factor f of Phi_m mod p to f_N with f_N = f (mod p) and
// f_N * cofactor = Phi_m (mod p^N), by quadratic iteration. Returns the
// monic f_N with coefficients in [0, p^N).
ZPoly hensel_lift_cyclotomic_factor(long long m, const PPoly& f, long long p,
                                    long long N);

// Remainder of a modulo the monic divisor b, coefficients mod M.
ZPoly zp_mod_monic(ZPoly a, const ZPoly& b, const Int& M);

} // namespace blockscope
