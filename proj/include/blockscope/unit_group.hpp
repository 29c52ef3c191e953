#pragma once

#include <vector>

#include "blockscope/cyclotomic.hpp"

namespace blockscope {

// A subgroup of (Z/nZ)^*, stored as its sorted member list. These encode
// Galois groups Gal(Q_n / K) for the subfields K in play.
struct UnitSubgroup {
    long long modulus = 1;
    std::vector<long long> members; // sorted, contains 1

    bool contains(long long k) const;
    long long order() const { return static_cast<long long>(members.size()); }
    // A generating set (greedy; empty for the trivial subgroup).
    std::vector<long long> generators() const;

    static UnitSubgroup full(long long n);
    // { k : k = 1 (mod m), gcd(k, n) = 1 } = Gal(Q_n / Q_m) for m | n.
    static UnitSubgroup congruent_one_mod(long long n, long long m);

    UnitSubgroup join(const UnitSubgroup& other) const; // product subgroup
    UnitSubgroup intersect(const UnitSubgroup& other) const;
    // Image under reduction (Z/n)^* -> (Z/d)^*, d | n.
    UnitSubgroup image_mod(long long d) const;

    bool operator==(const UnitSubgroup& o) const {
        return modulus == o.modulus && members == o.members;
    }
};

// Gal(Q_n / Q(values)): all sigma_k fixing every value. Conductors must
// divide n.
UnitSubgroup field_stabilizer(const std::vector<Cyclotomic>& values, long long n);

// p-part of |<H, U> : H| (same modulus).
long long field_index_p_part(const UnitSubgroup& H, const UnitSubgroup& U,
                             long long p);

} // namespace blockscope
