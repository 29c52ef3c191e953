#include "blockscope/local_context.hpp"

namespace blockscope {

LocalContext::LocalContext(long long p, long long m, int variant)
    : p_(p), m_(m), variant_(variant) {
    if (!is_prime_ll(p)) throw UsageError("LocalContext: p must be prime");
    if (m < 1 || m % p == 0) throw UsageError("LocalContext: m must be coprime to p");
    auto factors = irreducible_factors_of_cyclotomic(m, p, variant + 1);
    if (static_cast<int>(factors.size()) <= variant)
        throw UsageError("LocalContext: factor variant out of range");
    f_ = factors[variant];
    d_ = static_cast<long long>(f_.size()) - 1;
    long long expected = (m == 1) ? 1 : mult_order(p % m, m);
    if (d_ != expected) throw Error("LocalContext: factor degree mismatch");
}

int LocalContext::factor_count(long long p, long long m) {
    long long d = (m == 1) ? 1 : mult_order(p % m, m);
    return static_cast<int>(euler_phi(m) / d);
}

ZPoly LocalContext::hensel_lift(long long N) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = lifts_.find(N);
    if (it != lifts_.end()) return it->second;
    ZPoly f = hensel_lift_cyclotomic_factor(m_, f_, p_, N);
    lifts_.emplace(N, f);
    return f;
}

FiniteFieldElem LocalContext::ff_zero() const {
    return FiniteFieldElem{std::vector<long long>(d_, 0)};
}

FiniteFieldElem LocalContext::ff_one() const {
    auto e = ff_zero();
    if (d_ > 0) e.coeffs[0] = 1;
    return e;
}

FiniteFieldElem LocalContext::ff_from_int(const Int& n) const {
    auto e = ff_zero();
    e.coeffs[0] = mod_ll(n, p_);
    return e;
}

FiniteFieldElem LocalContext::ff_from_poly(const PPoly& poly) const {
    PPoly r = pp_divmod(poly, f_, p_).second;
    auto e = ff_zero();
    for (size_t i = 0; i < r.size(); ++i) e.coeffs[i] = r[i];
    return e;
}

FiniteFieldElem LocalContext::ff_root_power(long long e) const {
    e %= m_;
    if (e < 0) e += m_;
    PPoly x(e + 1, 0);
    x[e] = 1;
    return ff_from_poly(x);
}

FiniteFieldElem LocalContext::ff_add(const FiniteFieldElem& a,
                                     const FiniteFieldElem& b) const {
    auto e = ff_zero();
    for (long long i = 0; i < d_; ++i) e.coeffs[i] = (a.coeffs[i] + b.coeffs[i]) % p_;
    return e;
}

FiniteFieldElem LocalContext::ff_sub(const FiniteFieldElem& a,
                                     const FiniteFieldElem& b) const {
    auto e = ff_zero();
    for (long long i = 0; i < d_; ++i)
        e.coeffs[i] = ((a.coeffs[i] - b.coeffs[i]) % p_ + p_) % p_;
    return e;
}

FiniteFieldElem LocalContext::ff_neg(const FiniteFieldElem& a) const {
    return ff_sub(ff_zero(), a);
}

FiniteFieldElem LocalContext::ff_mul(const FiniteFieldElem& a,
                                     const FiniteFieldElem& b) const {
    return ff_from_poly(pp_mul(pp_trim(a.coeffs), pp_trim(b.coeffs), p_));
}

FiniteFieldElem LocalContext::ff_inv(const FiniteFieldElem& a) const {
    PPoly av = pp_trim(a.coeffs);
    if (av.empty()) throw UsageError("finite field: zero inverse");
    // Extended Euclid against f.
    PPoly r0 = f_, r1 = av, t0{}, t1{1};
    while (!pp_trim(r1).empty()) {
        auto [q, r2] = pp_divmod(r0, r1, p_);
        PPoly t2 = pp_sub(t0, pp_mul(q, t1, p_), p_);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("finite field: non-invertible element");
    long long s = invmod_ll(r0[0], p_);
    for (auto& c : t0) c = mulmod_ll(c, s, p_);
    return ff_from_poly(t0);
}

long long ramification_index(const LocalContext& ctx, long long conductor) {
    long long t = p_part_ll(conductor, ctx.p());
    return euler_phi(t);
}

} // namespace blockscope
