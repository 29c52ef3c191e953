#include "blockscope/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace blockscope {

namespace {

// Rational polynomial reduced modulo Phi_n; result has size phi(n).
std::vector<Rat> reduce_mod_phi(std::vector<Rat> poly, long long n) {
    const ZPoly& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1; // = euler_phi(n)
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    for (size_t i = poly.size(); i-- > deg;) {
        Rat c = poly[i];
        if (c != 0) {
            // poly -= c * x^(i-deg) * phi
            for (size_t j = 0; j < phi.size(); ++j) {
                Rat t(phi[j]);
                poly[i - deg + j] -= c * t;
            }
        }
    }
    poly.resize(deg, Rat(0));
    for (auto& c : poly) c.canonicalize();
    return poly;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Substitute x -> x^s into poly, then reduce modulo Phi_n.
std::vector<Rat> substitute_power(const std::vector<Rat>& poly, long long s,
                                  long long n) {
    std::vector<Rat> out(static_cast<size_t>(n), Rat(0));
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        long long e = static_cast<long long>(i) * s % n;
        out[static_cast<size_t>(e)] += poly[i];
    }
    return reduce_mod_phi(std::move(out), n);
}

// Solve E * x = b exactly; E given column-wise, consistent by construction.
std::vector<Rat> solve_columns(std::vector<std::vector<Rat>> cols,
                               std::vector<Rat> b) {
    const size_t rows = b.size(), ncols = cols.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(ncols + 1, Rat(0)));
    for (size_t j = 0; j < ncols; ++j)
        for (size_t i = 0; i < rows; ++i) m[i][j] = cols[j][i];
    for (size_t i = 0; i < rows; ++i) m[i][ncols] = b[i];

    size_t r = 0;
    std::vector<long long> pivCol;
    for (size_t c = 0; c < ncols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] == 0) ++pr;
        if (pr == rows) {
            pivCol.push_back(-1);
            continue;
        }
        std::swap(m[pr], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (size_t j = c; j <= ncols; ++j) {
            m[r][j] *= inv;
            m[r][j].canonicalize();
        }
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j <= ncols; ++j) {
                m[i][j] -= f * m[r][j];
                m[i][j].canonicalize();
            }
        }
        pivCol.push_back(static_cast<long long>(r));
        ++r;
    }
    // Consistency: remaining rows of b must be zero.
    for (size_t i = r; i < rows; ++i)
        if (m[i][ncols] != 0) throw Error("cyclotomic: inconsistent subfield solve");
    std::vector<Rat> x(ncols, Rat(0));
    for (size_t c = 0; c < ncols; ++c)
        if (pivCol[c] >= 0) x[c] = m[static_cast<size_t>(pivCol[c])][ncols];
    return x;
}

} // namespace

Cyclotomic::Cyclotomic(long long n, std::vector<Rat> reduced, bool)
    : conductor_(n), coeffs_(std::move(reduced)) {}

Cyclotomic Cyclotomic::make(long long n, std::vector<Rat> poly) {
    Cyclotomic c(n, reduce_mod_phi(std::move(poly), n), true);
    c.canonicalize();
    return c;
}

Cyclotomic Cyclotomic::root_of_unity(long long n, long long e) {
    if (n < 1) throw UsageError("root_of_unity: n must be positive");
    e %= n;
    if (e < 0) e += n;
    long long g = std::gcd(e, n);
    long long n1 = n / g, e1 = e / g;
    std::vector<Rat> poly(e1 + 1, Rat(0));
    poly[e1] = 1;
    return make(n1, std::move(poly));
}

const Rat& Cyclotomic::rational_value() const {
    if (!is_rational()) throw UsageError("cyclotomic: not a rational value");
    return coeffs_[0];
}

bool Cyclotomic::is_integral() const {
    for (const auto& c : coeffs_)
        if (c.get_den() != 1) return false;
    return true;
}

std::vector<Rat> Cyclotomic::embedded_coeffs(long long N) const {
    if (N == conductor_) return coeffs_;
    if (N % conductor_ != 0) throw Error("cyclotomic: bad embedding target");
    return substitute_power(coeffs_, N / conductor_, N);
}

void Cyclotomic::canonicalize() {
    for (auto& c : coeffs_) c.canonicalize();
    bool descended = true;
    while (descended && conductor_ > 1) {
        descended = false;
        for (long long q : prime_divisors(conductor_)) {
            if (try_descend(conductor_ / q)) {
                descended = true;
                break;
            }
        }
    }
}

bool Cyclotomic::try_descend(long long k) {
    const long long n = conductor_;
    // Gal(Q_n / Q_k) = { j mod n : j = 1 (mod k), gcd(j, n) = 1 }.
    const long long q = n / k;
    for (long long t = 1; t < q; ++t) {
        long long j = 1 + t * k;
        if (std::gcd(j, n) != 1) continue;
        if (substitute_power(coeffs_, j, n) != coeffs_) return false;
    }
    // Invariant under the subgroup: rewrite over the power basis of Q_k.
    const long long phiK = euler_phi(k);
    std::vector<std::vector<Rat>> cols;
    cols.reserve(phiK);
    for (long long b = 0; b < phiK; ++b) {
        std::vector<Rat> pow(static_cast<size_t>(b) + 1, Rat(0));
        pow[b] = 1;
        cols.push_back(substitute_power(pow, q, n)); // (zeta_k)^b = zeta_n^(q b)
    }
    std::vector<Rat> sol = solve_columns(std::move(cols), coeffs_);
    conductor_ = k;
    coeffs_ = std::move(sol);
    coeffs_.resize(phiK, Rat(0));
    for (auto& c : coeffs_) c.canonicalize();
    return true;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
        c.canonicalize();
    }
    return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (is_rational() && o.is_rational())
        return Cyclotomic(coeffs_[0] + o.coeffs_[0]);
    long long N = lcm_ll(conductor_, o.conductor_);
    std::vector<Rat> a = embedded_coeffs(N), b = o.embedded_coeffs(N);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return make(N, std::move(a));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (is_rational() && o.is_rational())
        return Cyclotomic(coeffs_[0] * o.coeffs_[0]);
    if (is_rational()) return o * *this;
    if (o.is_rational()) {
        if (o.coeffs_[0] == 0) return Cyclotomic();
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_) {
            c *= o.coeffs_[0];
            c.canonicalize();
        }
        return r;
    }
    long long N = lcm_ll(conductor_, o.conductor_);
    return make(N, poly_mul(embedded_coeffs(N), o.embedded_coeffs(N)));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw UsageError("zero inverse");
    if (is_rational()) return Cyclotomic(Rat(1) / coeffs_[0]);
    // Extended Euclid against Phi_n over Q; Phi_n is irreducible, so the
    // gcd is a nonzero constant.
    const ZPoly& phiZ = cyclotomic_polynomial(conductor_);
    std::vector<Rat> r0(phiZ.size());
    for (size_t i = 0; i < phiZ.size(); ++i) r0[i] = Rat(phiZ[i]);
    std::vector<Rat> r1 = coeffs_;
    while (!r1.empty() && r1.back() == 0) r1.pop_back();
    std::vector<Rat> t0{}, t1{Rat(1)};
    auto polyTrim = [](std::vector<Rat>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    while (true) {
        polyTrim(r1);
        if (r1.empty()) break;
        // divide r0 by r1
        std::vector<Rat> q(std::max<size_t>(r0.size(), r1.size()), Rat(0));
        std::vector<Rat> rem = r0;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, Rat(0));
            Rat lead = r1.back();
            for (size_t i = q.size(); i-- > 0;) {
                Rat c = rem[i + r1.size() - 1] / lead;
                c.canonicalize();
                q[i] = c;
                if (c != 0)
                    for (size_t j = 0; j < r1.size(); ++j) {
                        rem[i + j] -= c * r1[j];
                        rem[i + j].canonicalize();
                    }
            }
            rem.resize(r1.size() - 1);
        } else {
            q.clear();
        }
        polyTrim(rem);
        // t2 = t0 - q * t1
        std::vector<Rat> t2 = t0;
        if (!q.empty() && !t1.empty()) {
            std::vector<Rat> qt = poly_mul(q, t1);
            t2.resize(std::max(t2.size(), qt.size()), Rat(0));
            for (size_t i = 0; i < qt.size(); ++i) t2[i] -= qt[i];
        }
        for (auto& c : t2) c.canonicalize();
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.size() != 1) throw Error("cyclotomic: inverse failed (Phi_n reducible?)");
    Rat scale = Rat(1) / r0[0];
    for (auto& c : t0) {
        c *= scale;
        c.canonicalize();
    }
    return make(conductor_, std::move(t0));
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

Cyclotomic Cyclotomic::galois(long long k) const {
    long long n = conductor_;
    long long kk = ((k % n) + n) % n;
    if (n == 1) kk = 1;
    if (std::gcd(kk, n) != 1) throw UsageError("invalid Galois index");
    if (n == 1 || kk == 1) return *this;
    // Automorphisms preserve the (normal) subfield the element generates,
    // so the result is already conductor-minimal.
    return Cyclotomic(n, substitute_power(coeffs_, kk, n), true);
}

Cyclotomic Cyclotomic::conjugate() const { return galois(conductor_ - 1); }

std::string Cyclotomic::to_string() const {
    std::ostringstream os;
    if (is_rational()) {
        os << coeffs_[0];
        return os.str();
    }
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i] << "*z" << conductor_ << "^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) {
    return os << c.to_string();
}

// --- reduction and valuation ------------------------------------------

FiniteFieldElem reduce_mod_prime(const Cyclotomic& a, const LocalContext& ctx) {
    const long long p = ctx.p(), m = ctx.m();
    const long long n = a.conductor();
    const long long pt = p_part_ll(n, p);
    const long long mPrime = n / pt;
    if (m % mPrime != 0)
        throw UsageError("reduce_mod_prime: conductor outside context");

    // zeta_n = zeta_{p^t}^alpha * zeta_{m'}^beta via CRT; zeta_{p^t} -> 1.
    long long beta = (pt == 1) ? 1 : ((mPrime == 1) ? 0 : invmod_ll(pt % mPrime, mPrime));
    PPoly acc(m, 0);
    const auto& coeffs = a.coeffs();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const Rat& c = coeffs[i];
        if (c == 0) continue;
        Int den = c.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
            throw UsageError("not p-integral");
        long long nv = mod_ll(c.get_num(), p);
        long long dv = mod_ll(den, p);
        long long val = mulmod_ll(nv, invmod_ll(dv, p), p);
        long long e = (mPrime == 1) ? 0 : ((static_cast<long long>(i) % mPrime) * beta) % mPrime;
        long long exp = (m / mPrime) * e % m;
        acc[exp] = (acc[exp] + val) % p;
    }
    return ctx.ff_from_poly(acc);
}

namespace {

// Valuation of a nonzero element of Q(zeta_{m''}) (p unramified there),
// normalized with v(p) = 1, via the Hensel-lifted modulus.
long long unramified_valuation(const Cyclotomic& beta, const LocalContext& ctx) {
    const long long p = ctx.p(), m = ctx.m();
    if (beta.is_rational()) return v_p(beta.rational_value(), p);

    const long long mq = beta.conductor();
    if (m % mq != 0) throw Error("unramified_valuation: conductor drift");
    for (long long N = 8; N <= 4096; N *= 2) {
        Int pN;
        mpz_ui_pow_ui(pN.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(N));
        ZPoly fN = ctx.hensel_lift(N);
        // Map: zeta_{m''}^i -> x^((m/m'')*i), coefficients mod p^N.
        ZPoly img(m, Int(0));
        const auto& coeffs = beta.coeffs();
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] == 0) continue;
            if (coeffs[i].get_den() != 1)
                throw Error("unramified_valuation: non-integral input");
            long long exp = (m / mq) * static_cast<long long>(i) % m;
            img[exp] += coeffs[i].get_num();
        }
        ZPoly red = zp_mod_monic(std::move(img), fN, pN);
        long long best = -1;
        for (const Int& c : red) {
            if (c == 0) continue;
            int v = v_p(c, p);
            if (best < 0 || v < best) best = v;
        }
        if (best >= 0 && best < N) return best;
    }
    throw Error("p_valuation: precision cap exceeded (internal error)");
}

} // namespace

long long p_valuation(const Cyclotomic& a, const LocalContext& ctx) {
    if (a.is_zero()) throw UsageError("valuation of zero");
    const long long p = ctx.p();
    const long long n = a.conductor();
    const long long pt = p_part_ll(n, p);
    const long long mPrime = n / pt;
    if (ctx.m() % mPrime != 0) throw UsageError("p_valuation: conductor outside context");
    const long long e = euler_phi(pt);

    // Clear denominators: v(a) = v(D*a) - e * v_p(D).
    Int D(1);
    for (const auto& c : a.coeffs()) {
        Int den = c.get_den();
        D = D / gcd(D, den) * den;
    }
    Cyclotomic integral = a * Cyclotomic(Rat(D));
    long long shift = e * v_p(Rat(D), p);

    // Relative norm down to the p'-part subfield Q_{m'}.
    Cyclotomic beta = integral;
    if (pt > 1) {
        for (long long t = 1; t < pt; ++t) {
            long long j = 1 + t * mPrime;
            if (std::gcd(j, n) != 1) continue;
            beta = beta * integral.galois(j);
        }
    }
    return unramified_valuation(beta, ctx) - shift;
}

Rat p_valuation_rational(const Cyclotomic& a, const LocalContext& ctx) {
    long long e = ramification_index(ctx, a.conductor());
    return to_rat(p_valuation(a, ctx), e);
}

} // namespace blockscope
