#include "blockscope/unit_group.hpp"

#include <algorithm>
#include <set>

namespace blockscope {

bool UnitSubgroup::contains(long long k) const {
    long long r = ((k % modulus) + modulus) % modulus;
    if (modulus == 1) r = 1;
    return std::binary_search(members.begin(), members.end(), r == 0 ? modulus : r);
}

UnitSubgroup UnitSubgroup::full(long long n) {
    return UnitSubgroup{n, units_mod(n)};
}

std::vector<long long> UnitSubgroup::generators() const {
    std::vector<long long> gens;
    std::set<long long> span{1 % modulus == 0 ? modulus : 1};
    for (long long g : members) {
        if (span.count(g)) continue;
        gens.push_back(g);
        // Close the span under multiplication by the new generator.
        std::set<long long> next = span;
        bool grew = true;
        while (grew) {
            grew = false;
            for (long long a : std::set<long long>(next)) {
                long long v = mulmod_ll(a, g, modulus);
                if (v == 0) v = modulus;
                if (next.insert(v).second) grew = true;
            }
        }
        span = std::move(next);
        if (span.size() == members.size()) break;
    }
    return gens;
}

UnitSubgroup UnitSubgroup::congruent_one_mod(long long n, long long m) {
    if (n % m != 0) throw UsageError("congruent_one_mod: m must divide n");
    UnitSubgroup g;
    g.modulus = n;
    for (long long k : units_mod(n))
        if (k % m == 1 % m) g.members.push_back(k);
    return g;
}

UnitSubgroup UnitSubgroup::join(const UnitSubgroup& other) const {
    if (modulus != other.modulus) throw UsageError("unit subgroup modulus mismatch");
    std::set<long long> prod;
    for (long long a : members)
        for (long long b : other.members) {
            long long v = mulmod_ll(a, b, modulus);
            prod.insert(v == 0 ? modulus : v);
        }
    return UnitSubgroup{modulus, std::vector<long long>(prod.begin(), prod.end())};
}

UnitSubgroup UnitSubgroup::intersect(const UnitSubgroup& other) const {
    if (modulus != other.modulus) throw UsageError("unit subgroup modulus mismatch");
    UnitSubgroup g;
    g.modulus = modulus;
    std::set_intersection(members.begin(), members.end(), other.members.begin(),
                          other.members.end(), std::back_inserter(g.members));
    return g;
}

UnitSubgroup UnitSubgroup::image_mod(long long d) const {
    if (modulus % d != 0) throw UsageError("image_mod: d must divide the modulus");
    std::set<long long> img;
    for (long long a : members) {
        long long v = a % d;
        img.insert(v == 0 ? d : v);
    }
    return UnitSubgroup{d, std::vector<long long>(img.begin(), img.end())};
}

UnitSubgroup field_stabilizer(const std::vector<Cyclotomic>& values, long long n) {
    for (const auto& v : values)
        if (n % v.conductor() != 0)
            throw UsageError("field_stabilizer: conductor does not divide modulus");
    UnitSubgroup g;
    g.modulus = n;
    for (long long k : units_mod(n)) {
        bool fixes = true;
        for (const auto& v : values) {
            if (v.galois(k) != v) {
                fixes = false;
                break;
            }
        }
        if (fixes) g.members.push_back(k);
    }
    return g;
}

long long field_index_p_part(const UnitSubgroup& H, const UnitSubgroup& U,
                             long long p) {
    // |<H,U> : H| = |U : H n U| since (Z/n)^* is abelian.
    UnitSubgroup meet = H.intersect(U);
    long long index = U.order() / meet.order();
    return p_part_ll(index, p);
}

} // namespace blockscope
