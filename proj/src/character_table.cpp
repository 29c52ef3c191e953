#include "blockscope/character_table.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace blockscope {

namespace {

std::string coord(const std::string& what, int i, int j) {
    std::ostringstream os;
    os << what << " (" << i << ", " << j << ")";
    return os.str();
}

} // namespace

CharacterTable::CharacterTable(std::string name, long long order,
                               std::vector<ClassInfo> classes,
                               std::map<long long, std::vector<int>> powerMaps,
                               std::vector<std::vector<Cyclotomic>> irreducibles)
    : name_(std::move(name)),
      order_(order),
      classes_(std::move(classes)),
      powerMaps_(std::move(powerMaps)),
      irreducibles_(std::move(irreducibles)),
      caches_(std::make_shared<Caches>()) {
    exponent_ = 1;
    for (const auto& c : classes_) exponent_ = lcm_ll(exponent_, c.elementOrder);
}

long long CharacterTable::degree(int chi) const {
    const Cyclotomic& d = irreducibles_[chi][0];
    if (!d.is_rational() || d.rational_value().get_den() != 1)
        throw ValidationError("degree of character " + std::to_string(chi) +
                              " is not a rational integer");
    return d.rational_value().get_num().get_si();
}

std::vector<std::string> CharacterTable::validate(bool lenient) const {
    std::vector<std::string> warnings;
    const int k = num_classes();
    if (k == 0) throw ValidationError("table has no classes");
    if (order_ < 1) throw ValidationError("group order must be positive");
    if (classes_[0].size != 1 || classes_[0].elementOrder != 1)
        throw ValidationError("first class must be the identity (size 1, order 1)");
    if (static_cast<int>(irreducibles_.size()) != k)
        throw ValidationError("irreducibles must form a square matrix: got " +
                              std::to_string(irreducibles_.size()) + " rows for " +
                              std::to_string(k) + " classes");
    for (int i = 0; i < k; ++i)
        if (static_cast<int>(irreducibles_[i].size()) != k)
            throw ValidationError("irreducibles row " + std::to_string(i) +
                                  " has wrong length");

    long long sizeSum = 0;
    for (int i = 0; i < k; ++i) {
        const auto& c = classes_[i];
        if (c.size < 1 || c.centralizer < 1)
            throw ValidationError("class " + std::to_string(i) +
                                  ": size and centralizer must be positive");
        if (c.size * c.centralizer != order_)
            throw ValidationError("class " + std::to_string(i) +
                                  ": size * centralizer != |G|");
        if (c.elementOrder < 1 || order_ % c.elementOrder != 0)
            throw ValidationError("class " + std::to_string(i) +
                                  ": element order does not divide |G|");
        if (c.inverseClass < 0 || c.inverseClass >= k)
            throw ValidationError("class " + std::to_string(i) +
                                  ": inverse class out of range");
        const auto& ic = classes_[c.inverseClass];
        if (ic.inverseClass != i || ic.size != c.size ||
            ic.elementOrder != c.elementOrder)
            throw ValidationError("class " + std::to_string(i) +
                                  ": inverse class inconsistent");
        sizeSum += c.size;
    }
    if (sizeSum != order_)
        throw ValidationError("class sizes do not sum to |G|");

    // Degrees: positive rational integers.
    for (int i = 0; i < k; ++i) {
        const Cyclotomic& d = irreducibles_[i][0];
        if (!d.is_rational() || d.rational_value().get_den() != 1 ||
            d.rational_value() <= 0)
            throw ValidationError("character " + std::to_string(i) +
                                  " has non-positive-integer degree");
    }

    // Conductors divide exp(G).
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (exponent_ % irreducibles_[i][j].conductor() != 0)
                throw ValidationError(
                    "value conductor does not divide exp(G) at " +
                    coord("(character, class)", i, j));

    // Values against inverse classes: chi(g^-1) = conj(chi(g)).
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (irreducibles_[i][classes_[j].inverseClass] !=
                irreducibles_[i][j].conjugate())
                throw ValidationError("value at inverse class mismatch at " +
                                      coord("(character, class)", i, j));

    // Power maps: required for every prime dividing |G|, consistent with
    // element orders.
    for (long long q : prime_divisors(order_)) {
        auto it = powerMaps_.find(q);
        if (it == powerMaps_.end())
            throw ValidationError("powerMaps incomplete: missing prime " +
                                  std::to_string(q));
        const auto& pm = it->second;
        if (static_cast<int>(pm.size()) != k)
            throw ValidationError("powerMaps for prime " + std::to_string(q) +
                                  " has wrong length");
        for (int i = 0; i < k; ++i) {
            if (pm[i] < 0 || pm[i] >= k)
                throw ValidationError("powerMaps for prime " + std::to_string(q) +
                                      " out of range at class " + std::to_string(i));
            long long o = classes_[i].elementOrder;
            long long expected = o / std::gcd(q, o);
            if (classes_[pm[i]].elementOrder != expected)
                throw ValidationError("powerMaps for prime " + std::to_string(q) +
                                      " inconsistent with element orders at class " +
                                      std::to_string(i));
        }
    }
    for (const auto& [q, pm] : powerMaps_) {
        if (!is_prime_ll(q))
            throw ValidationError("powerMaps key " + std::to_string(q) +
                                  " is not prime");
        (void)pm;
    }

    // Row orthogonality.
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Cyclotomic s;
            for (int j = 0; j < k; ++j)
                s = s + Cyclotomic(to_rat(classes_[j].size)) * irreducibles_[a][j] *
                            irreducibles_[b][j].conjugate();
            Cyclotomic expect =
                (a == b) ? Cyclotomic(to_rat(order_)) : Cyclotomic();
            if (s != expect)
                throw ValidationError("row orthogonality failure at characters " +
                                      coord("", a, b));
        }

    // Column orthogonality.
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            Cyclotomic s;
            for (int i = 0; i < k; ++i)
                s = s + irreducibles_[i][a] * irreducibles_[i][b].conjugate();
            Cyclotomic expect =
                (a == b) ? Cyclotomic(to_rat(classes_[a].centralizer)) : Cyclotomic();
            if (s != expect)
                throw ValidationError("column orthogonality failure at classes " +
                                      coord("", a, b));
        }

    // Brauer permutation lemma per odd prime (derived check).
    for (long long q : prime_divisors(order_)) {
        if (q == 2) continue;
        if (!brauer_permutation_lemma_holds(q)) {
            std::string msg = "Brauer permutation lemma fails for p = " +
                              std::to_string(q);
            if (lenient)
                warnings.push_back(msg);
            else
                throw ValidationError(msg);
        }
    }
    return warnings;
}

std::vector<int> CharacterTable::galois_class_action(long long k) const {
    const long long n = order_;
    long long kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1) throw UsageError("invalid Galois index");
    long long key = kk % exponent_;
    {
        std::lock_guard<std::mutex> lock(caches_->mu);
        auto it = caches_->classAction.find(key);
        if (it != caches_->classAction.end()) return it->second;
    }
    const int kc = num_classes();
    std::vector<int> perm(kc, -1);
    for (int j = 0; j < kc; ++j) {
        // Column of sigma_k applied to class j.
        std::vector<Cyclotomic> col(kc);
        for (int i = 0; i < kc; ++i) col[i] = irreducibles_[i][j].galois(kk);
        int match = -1;
        for (int l = 0; l < kc; ++l) {
            if (classes_[l].size != classes_[j].size ||
                classes_[l].elementOrder != classes_[j].elementOrder)
                continue;
            bool ok = true;
            for (int i = 0; i < kc && ok; ++i) ok = (irreducibles_[i][l] == col[i]);
            if (ok) {
                match = l;
                break;
            }
        }
        if (match < 0)
            throw ValidationError("table inconsistent: no Galois image for class " +
                                  std::to_string(j));
        perm[j] = match;
    }
    std::lock_guard<std::mutex> lock(caches_->mu);
    caches_->classAction.emplace(key, perm);
    return perm;
}

std::vector<int> CharacterTable::galois_character_action(long long k) const {
    const long long n = order_;
    long long kk = ((k % n) + n) % n;
    if (std::gcd(kk, n) != 1) throw UsageError("invalid Galois index");
    long long key = kk % exponent_;
    {
        std::lock_guard<std::mutex> lock(caches_->mu);
        auto it = caches_->charAction.find(key);
        if (it != caches_->charAction.end()) return it->second;
    }
    const int kc = num_classes();
    std::vector<int> perm(kc, -1);
    for (int i = 0; i < kc; ++i) {
        std::vector<Cyclotomic> row(kc);
        for (int j = 0; j < kc; ++j) row[j] = irreducibles_[i][j].galois(kk);
        int match = -1;
        for (int l = 0; l < kc; ++l) {
            bool ok = true;
            for (int j = 0; j < kc && ok; ++j) ok = (irreducibles_[l][j] == row[j]);
            if (ok) {
                match = l;
                break;
            }
        }
        if (match < 0)
            throw ValidationError(
                "table inconsistent: no Galois image for character " +
                std::to_string(i));
        perm[i] = match;
    }
    std::lock_guard<std::mutex> lock(caches_->mu);
    caches_->charAction.emplace(key, perm);
    return perm;
}

int CharacterTable::power_class(int k, long long e) const {
    long long o = classes_[k].elementOrder;
    long long r = ((e % o) + o) % o;
    if (r == 0) return identity_class_index();
    int cur = k;
    // Peel off the primes dividing |G| via stored maps.
    for (long long q : prime_divisors(order_)) {
        auto it = powerMaps_.find(q);
        while (r % q == 0) {
            if (it == powerMaps_.end())
                throw ValidationError("powerMaps incomplete: missing prime " +
                                      std::to_string(q));
            cur = it->second[cur];
            r /= q;
        }
    }
    if (r == 1) return cur;
    // Remaining exponent is coprime to |G|: a Galois permutation.
    return galois_class_action(r)[cur];
}

std::vector<int> CharacterTable::power_map(long long k) const {
    std::vector<int> out(num_classes());
    for (int i = 0; i < num_classes(); ++i) out[i] = power_class(i, k);
    return out;
}

int CharacterTable::p_factor_class(int k, long long p) const {
    long long o = classes_[k].elementOrder;
    int v = valuation_ll(o, p);
    if (v == 0) return identity_class_index();
    long long pv = pow_ll(p, v);
    long long u = o / pv;
    if (u == 1) return k;
    long long e = u * invmod_ll(u % pv, pv);
    return power_class(k, e);
}

SectionPartition CharacterTable::p_sections(long long p) const {
    SectionPartition sp;
    sp.p = p;
    const int k = num_classes();
    std::vector<int> factor(k);
    for (int i = 0; i < k; ++i) factor[i] = p_factor_class(i, p);
    for (int i = 0; i < k; ++i) {
        if (factor[i] == i) sp.representatives.push_back(i);
    }
    sp.memberClasses.resize(sp.representatives.size());
    for (int i = 0; i < k; ++i) {
        auto it = std::find(sp.representatives.begin(), sp.representatives.end(),
                            factor[i]);
        if (it == sp.representatives.end())
            throw ValidationError("table inconsistent: p-factor of class " +
                                  std::to_string(i) + " is not a p-element class");
        sp.memberClasses[it - sp.representatives.begin()].push_back(i);
    }
    return sp;
}

Int CharacterTable::class_mult_coefficient(int K, int L, int M) const {
    Cyclotomic s;
    const int k = num_classes();
    for (int i = 0; i < k; ++i) {
        Cyclotomic t = irreducibles_[i][K] * irreducibles_[i][L] *
                       irreducibles_[i][M].conjugate();
        s = s + t * Cyclotomic(Rat(1) / to_rat(degree(i)));
    }
    s = s * Cyclotomic(to_rat(classes_[K].size * classes_[L].size, order_));
    if (!s.is_rational() || s.rational_value().get_den() != 1 ||
        s.rational_value() < 0)
        throw ValidationError("table inconsistent: structure constant a(" +
                              std::to_string(K) + "," + std::to_string(L) + "," +
                              std::to_string(M) + ") is not a nonnegative integer");
    return s.rational_value().get_num();
}

bool CharacterTable::brauer_permutation_lemma_holds(long long p) const {
    if (p == 2 || !is_prime_ll(p))
        throw UsageError("Brauer permutation lemma check requires an odd prime");
    const long long n = order_;
    const long long mPrime = p_prime_part_ll(n, p);
    std::vector<std::vector<int>> classPerms, charPerms;
    for (long long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1 || k % mPrime != 1 % mPrime) continue;
        classPerms.push_back(galois_class_action(k));
        charPerms.push_back(galois_character_action(k));
    }
    auto orbitSizes = [&](const std::vector<std::vector<int>>& perms) {
        const int k = num_classes();
        std::vector<int> parent(k);
        for (int i = 0; i < k; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& perm : perms)
            for (int i = 0; i < k; ++i) {
                int a = find(i), b = find(perm[i]);
                if (a != b) parent[a] = b;
            }
        std::map<int, int> count;
        for (int i = 0; i < k; ++i) count[find(i)]++;
        std::vector<int> sizes;
        for (auto& [root, c] : count) sizes.push_back(c);
        std::sort(sizes.begin(), sizes.end());
        return sizes;
    };
    return orbitSizes(classPerms) == orbitSizes(charPerms);
}

int CharacterTable::trivial_character_index() const {
    const Cyclotomic one{Rat(1)};
    for (int i = 0; i < num_classes(); ++i) {
        bool ok = true;
        for (int j = 0; j < num_classes() && ok; ++j)
            ok = (irreducibles_[i][j] == one);
        if (ok) return i;
    }
    throw ValidationError("table inconsistent: no trivial character");
}

} // namespace blockscope
