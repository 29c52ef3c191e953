#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "blockscope/cyclotomic.hpp"

namespace blockscope {

struct ClassInfo {
    std::string name;
    long long size = 0;            // |K|
    long long centralizer = 0;     // |C_G(g_K)|
    long long elementOrder = 0;    // o(g_K)
    int inverseClass = -1;         // index of the class of inverses
};

struct SectionPartition {
    long long p = 0;
    std::vector<int> representatives;             // p-element class indices
    std::vector<std::vector<int>> memberClasses;  // aligned with representatives
};

// Immutable character table: classes with sizes/orders/power maps plus the
// full matrix of irreducible character values (rows = characters, columns =
// classes). All values are canonical cyclotomics. Derived-data caches are
// internally synchronized; operations are pure.
class CharacterTable {
public:
    CharacterTable(std::string name, long long order,
                   std::vector<ClassInfo> classes,
                   std::map<long long, std::vector<int>> powerMaps,
                   std::vector<std::vector<Cyclotomic>> irreducibles);

    const std::string& name() const { return name_; }
    long long order() const { return order_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    const std::vector<ClassInfo>& classes() const { return classes_; }
    const ClassInfo& cls(int k) const { return classes_.at(k); }
    const std::map<long long, std::vector<int>>& power_maps() const {
        return powerMaps_;
    }
    const std::vector<std::vector<Cyclotomic>>& irreducibles() const {
        return irreducibles_;
    }
    const Cyclotomic& value(int chi, int k) const { return irreducibles_[chi][k]; }
    long long degree(int chi) const; // chi(1) as a plain integer

    long long exponent() const { return exponent_; }

    // Structural and orthogonality validation; throws ValidationError with
    // class/character coordinates. With lenient = true the Brauer
    // permutation-lemma check only produces warnings (returned list).
    std::vector<std::string> validate(bool lenient = false) const;

    // K |-> class of g_K^k for arbitrary k >= 0, composed from the stored
    // prime power maps and Galois column matching for the coprime part.
    std::vector<int> power_map(long long k) const;
    int power_class(int k, long long e) const;

    // Class of the p-part of g_K.
    int p_factor_class(int k, long long p) const;
    SectionPartition p_sections(long long p) const;

    // Structure constant a_{KLM} of the class algebra.
    Int class_mult_coefficient(int K, int L, int M) const;

    // sigma_k acting on columns / rows; requires gcd(k, |G|) = 1.
    std::vector<int> galois_class_action(long long k) const;
    std::vector<int> galois_character_action(long long k) const;

    // Orbit-size multisets of the p-part Galois group on characters and
    // classes agree (p odd).
    bool brauer_permutation_lemma_holds(long long p) const;

    int trivial_character_index() const;
    int identity_class_index() const { return 0; }
    bool is_p_regular_class(int k, long long p) const {
        return classes_[k].elementOrder % p != 0;
    }

private:
    std::string name_;
    long long order_;
    std::vector<ClassInfo> classes_;
    std::map<long long, std::vector<int>> powerMaps_;
    std::vector<std::vector<Cyclotomic>> irreducibles_;
    long long exponent_;

    struct Caches {
        std::mutex mu;
        std::map<long long, std::vector<int>> classAction;
        std::map<long long, std::vector<int>> charAction;
    };
    std::shared_ptr<Caches> caches_; // shared so the table stays movable/copyable
};

} // namespace blockscope
