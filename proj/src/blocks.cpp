#include "blockscope/blocks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace blockscope {

std::vector<Cyclotomic> central_character(const CharacterTable& table, int chi) {
    const int k = table.num_classes();
    std::vector<Cyclotomic> omega(k);
    Rat invDeg = Rat(1) / to_rat(table.degree(chi));
    for (int j = 0; j < k; ++j) {
        omega[j] = table.value(chi, j) *
                   Cyclotomic(to_rat(table.cls(j).size) * invDeg);
        if (!omega[j].is_integral())
            throw ValidationError(
                "table inconsistent: central character of character " +
                std::to_string(chi) + " not integral at class " + std::to_string(j));
    }
    return omega;
}

LocalContext block_context(const CharacterTable& table, long long p, int variant) {
    return LocalContext(p, p_prime_part_ll(table.exponent(), p), variant);
}

namespace {

void fill_defect_and_heights(const CharacterTable& table, long long p, Block& b) {
    const int a = valuation_ll(table.order(), p);
    int minV = a;
    for (int chi : b.characters)
        minV = std::min(minV, valuation_ll(table.degree(chi), p));
    b.defect = a - minV;
    b.heights.clear();
    for (int chi : b.characters)
        b.heights.push_back(valuation_ll(table.degree(chi), p) - minV);
}

void assign_galois_orbits(const CharacterTable& table, std::vector<Block>& blocks) {
    const int nb = static_cast<int>(blocks.size());
    std::vector<int> parent(nb);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto blockIndexOf = [&](const std::vector<int>& chars) {
        for (int i = 0; i < nb; ++i)
            if (blocks[i].characters == chars) return i;
        throw ValidationError(
            "table inconsistent: Galois image of a block is not a block");
    };
    for (long long k : units_mod(table.exponent())) {
        if (k == 1) continue;
        auto perm = table.galois_character_action(k);
        for (int i = 0; i < nb; ++i) {
            std::vector<int> image;
            image.reserve(blocks[i].characters.size());
            for (int chi : blocks[i].characters) image.push_back(perm[chi]);
            std::sort(image.begin(), image.end());
            int j = blockIndexOf(image);
            if (blocks[i].defect != blocks[j].defect)
                throw ValidationError(
                    "table inconsistent: Galois conjugate blocks with different "
                    "defects");
            int a = find(i), b = find(j);
            if (a != b) parent[a] = b;
        }
    }
    std::map<int, int> ids;
    for (int i = 0; i < nb; ++i) {
        int r = find(i);
        auto it = ids.find(r);
        if (it == ids.end()) it = ids.emplace(r, static_cast<int>(ids.size())).first;
        blocks[i].galoisOrbitId = it->second;
    }
}

void canonical_sort(std::vector<Block>& blocks) {
    std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
        if (a.defect != b.defect) return a.defect > b.defect;
        return a.characters.front() < b.characters.front();
    });
}

} // namespace

std::vector<Block> block_partition(const CharacterTable& table, long long p) {
    if (!is_prime_ll(p)) throw UsageError("block_partition: p must be prime");
    if (table.order() % p != 0) {
        // Semisimple case: singleton blocks of defect 0.
        std::vector<Block> blocks;
        for (int i = 0; i < table.num_classes(); ++i) {
            Block b;
            b.p = p;
            b.characters = {i};
            b.defect = 0;
            b.heights = {0};
            blocks.push_back(std::move(b));
        }
        canonical_sort(blocks);
        assign_galois_orbits(table, blocks);
        return blocks;
    }
    LocalContext ctx = block_context(table, p);
    return block_partition(table, p, ctx);
}

std::vector<Block> block_partition(const CharacterTable& table, long long p,
                                   const LocalContext& ctx) {
    if (!is_prime_ll(p)) throw UsageError("block_partition: p must be prime");
    const int k = table.num_classes();
    std::map<std::vector<FiniteFieldElem>, std::vector<int>> groups;
    for (int chi = 0; chi < k; ++chi) {
        auto omega = central_character(table, chi);
        std::vector<FiniteFieldElem> sig;
        sig.reserve(k);
        for (int j = 0; j < k; ++j) sig.push_back(reduce_mod_prime(omega[j], ctx));
        groups[std::move(sig)].push_back(chi);
    }
    std::vector<Block> blocks;
    for (auto& [sig, chars] : groups) {
        Block b;
        b.p = p;
        b.characters = chars;
        std::sort(b.characters.begin(), b.characters.end());
        fill_defect_and_heights(table, p, b);
        blocks.push_back(std::move(b));
    }
    // Sanity: the principal block has full defect and some height-zero
    // character exists in every block.
    for (const auto& b : blocks) {
        if (std::find(b.heights.begin(), b.heights.end(), 0) == b.heights.end())
            throw ValidationError("table inconsistent: block without height-zero "
                                  "character");
    }
    canonical_sort(blocks);
    assign_galois_orbits(table, blocks);
    return blocks;
}

std::vector<int> defect_class_support(const CharacterTable& table, const Block& B) {
    std::vector<int> support;
    for (int j = 0; j < table.num_classes(); ++j) {
        for (int chi : B.characters) {
            if (!table.value(chi, j).is_zero()) {
                support.push_back(j);
                break;
            }
        }
    }
    return support;
}

bool is_defect_group_normal(const CharacterTable& table, const Block& B) {
    // D is normal iff the union of the conjugates of D has exactly |D|
    // elements; that union is the set of p-elements in the block's support.
    long long total = 0;
    for (int j : defect_class_support(table, B)) {
        long long o = table.cls(j).elementOrder;
        if (p_part_ll(o, B.p) == o) total += table.cls(j).size;
    }
    Int size = to_int(total);
    Int dOrder;
    mpz_ui_pow_ui(dOrder.get_mpz_t(), static_cast<unsigned long>(B.p),
                  static_cast<unsigned long>(B.defect));
    return size == dOrder;
}

std::vector<std::vector<int>> p_conjugacy_orbits(const CharacterTable& table,
                                                 const Block& B) {
    const long long n = table.order();
    const long long mPrime = p_prime_part_ll(n, B.p);
    std::vector<int> parent(table.num_classes());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (long long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1 || k % mPrime != 1 % mPrime) continue;
        auto perm = table.galois_character_action(k);
        for (int chi : B.characters) {
            if (!B.contains(perm[chi]))
                throw ValidationError(
                    "table inconsistent: p-conjugate characters in different "
                    "blocks");
            int a = find(chi), b = find(perm[chi]);
            if (a != b) parent[a] = b;
        }
    }
    std::map<int, std::vector<int>> orbitMap;
    for (int chi : B.characters) orbitMap[find(chi)].push_back(chi);
    std::vector<std::vector<int>> orbits;
    for (auto& [root, orbit] : orbitMap) orbits.push_back(orbit);
    std::sort(orbits.begin(), orbits.end());
    return orbits;
}

long long l_of_block(const CharacterTable& table, const Block& B) {
    // Exact rank of the block's value matrix on p-regular classes.
    std::vector<int> regular;
    for (int j = 0; j < table.num_classes(); ++j)
        if (table.is_p_regular_class(j, B.p)) regular.push_back(j);
    std::vector<std::vector<Cyclotomic>> m;
    for (int chi : B.characters) {
        std::vector<Cyclotomic> row;
        row.reserve(regular.size());
        for (int j : regular) row.push_back(table.value(chi, j));
        m.push_back(std::move(row));
    }
    long long rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < m.size() && col < regular.size(); ++col) {
        size_t piv = r;
        while (piv < m.size() && m[piv][col].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        Cyclotomic inv = m[r][col].inverse();
        for (size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][col].is_zero()) continue;
            Cyclotomic f = m[i][col] * inv;
            for (size_t j = col; j < regular.size(); ++j)
                m[i][j] = m[i][j] - f * m[r][j];
        }
        ++rank;
        ++r;
    }
    return rank;
}

namespace {

// Incremental row-echelon basis over the residue field.
struct EchelonBasis {
    const LocalContext* ctx;
    std::vector<std::pair<size_t, std::vector<FiniteFieldElem>>> rows; // (pivot, vec)

    // Reduces v against the basis; returns the pivot position or npos if v
    // is dependent. Does not insert.
    static constexpr size_t npos = static_cast<size_t>(-1);
    size_t reduce(std::vector<FiniteFieldElem>& v) const {
        for (const auto& [piv, row] : rows) {
            if (v[piv].is_zero()) continue;
            FiniteFieldElem f = ctx->ff_mul(v[piv], ctx->ff_inv(row[piv]));
            for (size_t j = 0; j < v.size(); ++j)
                v[j] = ctx->ff_sub(v[j], ctx->ff_mul(f, row[j]));
        }
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) return j;
        return npos;
    }
    bool try_insert(std::vector<FiniteFieldElem> v) {
        size_t piv = reduce(v);
        if (piv == npos) return false;
        rows.emplace_back(piv, std::move(v));
        return true;
    }
};

} // namespace

std::vector<std::vector<int>> block_splitting(const CharacterTable& table,
                                              const std::vector<Block>& blocks,
                                              const LocalContext& ctx) {
    const int k = table.num_classes();
    const int nb = static_cast<int>(blocks.size());
    const long long p = ctx.p();

    // Reduced coefficient rows of K+ e_B over the class-sum basis:
    // t[K][M] = (|K|/|G|) sum_{chi in B} chi(g_K) conj(chi(g_M)).
    std::vector<std::vector<std::vector<FiniteFieldElem>>> rows(
        nb, std::vector<std::vector<FiniteFieldElem>>(k));
    for (int b = 0; b < nb; ++b) {
        for (int K = 0; K < k; ++K) {
            std::vector<FiniteFieldElem> row(k);
            Rat scale = to_rat(table.cls(K).size, table.order());
            for (int M = 0; M < k; ++M) {
                Cyclotomic s;
                for (int chi : blocks[b].characters)
                    s = s + table.value(chi, K) * table.value(chi, M).conjugate();
                row[M] = reduce_mod_prime(s * Cyclotomic(scale), ctx);
            }
            rows[b][K] = std::move(row);
        }
    }

    // Classes in greedy order: largest p'-part of |K| first, ties by index.
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        long long pa = p_prime_part_ll(table.cls(a).size, p);
        long long pb = p_prime_part_ll(table.cls(b).size, p);
        if (pa != pb) return pa > pb;
        return a < b;
    });

    auto attempt = [&](bool backtrack) -> std::optional<std::vector<std::vector<int>>> {
        std::vector<EchelonBasis> bases(nb);
        std::vector<std::vector<int>> chosen(nb);
        for (int b = 0; b < nb; ++b) bases[b].ctx = &ctx;

        std::function<bool(size_t)> go = [&](size_t pos) -> bool {
            if (pos == order.size()) {
                for (int b = 0; b < nb; ++b)
                    if (static_cast<long long>(chosen[b].size()) != blocks[b].k())
                        return false;
                return true;
            }
            int K = order[pos];
            for (int b = 0; b < nb; ++b) {
                if (static_cast<long long>(chosen[b].size()) >= blocks[b].k())
                    continue;
                std::vector<FiniteFieldElem> v = rows[b][K];
                if (!bases[b].try_insert(std::move(v))) continue;
                chosen[b].push_back(K);
                if (go(pos + 1)) return true;
                if (!backtrack) return false; // greedy: first fit only
                chosen[b].pop_back();
                bases[b].rows.pop_back();
            }
            return false;
        };
        if (go(0)) {
            for (auto& c : chosen) std::sort(c.begin(), c.end());
            return chosen;
        }
        return std::nullopt;
    };

    if (auto greedy = attempt(false)) return *greedy;
    if (auto full = attempt(true)) return *full;
    throw Error("splitting search exhausted");
}

} // namespace blockscope
