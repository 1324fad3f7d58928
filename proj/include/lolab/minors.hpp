#ifndef LOLAB_MINORS_HPP_
#define LOLAB_MINORS_HPP_

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lolab/subsets.hpp"

// Minor maps, minor chains, the I(f) variable selection and the
// chain-intersection condition.

namespace lolab {

struct MinorMap {
    int source_arity = 0;  // n
    int target_arity = 0;  // m
    std::vector<int> image;  // image[i-1] = pi(i), values in [m]

    MinorMap() = default;
    MinorMap(int source, int target, std::vector<int> image_);
    static MinorMap identity(int n);
    bool is_identity() const;

    // {i : pi(i) in S}, for a mask S over [m].
    std::uint32_t preimage(std::uint32_t target_set) const;

    friend bool operator==(const MinorMap&, const MinorMap&) = default;
};

// second o first (apply `first`, then `second`).
MinorMap compose(const MinorMap& first, const MinorMap& second);

// g(S) = f(preimage(pi, S)). Minors of polymorphisms stay polymorphisms;
// callers who need the guarantee assert it.
PolyTable apply_minor(const PolyTable& f, const MinorMap& pi);

// f_1, pi_12, f_2, ..., f_l with f_{i+1} = f_i^pi (asserted on construction).
struct MinorChain {
    std::vector<PolyTable> tables;
    std::vector<MinorMap> maps;  // maps[i] sends tables[i] to tables[i+1]

    MinorChain(std::vector<PolyTable> tables_, std::vector<MinorMap> maps_);
    std::size_t length() const { return tables.size(); }
};

enum class SelectionBranch { Small2Set, LowArityDictator, Singleton1Set, Pair1Set };

struct SelectionSet {
    std::uint32_t set = 0;  // |I(f)| <= 3
    SelectionBranch branch = SelectionBranch::Small2Set;

    friend bool operator==(const SelectionSet&, const SelectionSet&) = default;
};

// Branch 1: the minimum-size, lexicographically least small 2-set.
// Branch 2 (arity <= 6): the unique dictating variable.
// Branch 3 (arity >= 7, no small 2-set): the dictator t of the
// deterministic pure saturation; {t} if f({t}) = 1, else {t,b} with the
// least b making f({t,b}) = 1.
SelectionSet select_I(const PolyTable& f);

// Optional memo for select_I keyed by encoded table; chains built from a
// small family pool repeat tables heavily.
using SelectionCache = std::unordered_map<std::string, SelectionSet>;

struct ChainWitness {
    bool ok = false;  // false = VIOLATION (build-stopping)
    int i = 0, j = 0;  // 1-based chain positions, i < j
};

ChainWitness chain_condition(const MinorChain& chain, SelectionCache* cache = nullptr);

// Deterministic per seed: picks a family polymorphism (projection, block
// family, threshold family or a saturation), then applies random minor
// maps. Guarantees at least one non-identity map for length >= 2.
MinorChain random_chain(std::uint64_t seed, int max_arity = 9, int length = 4);

}  // namespace lolab

#endif
