#include "lolab/minors.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "lolab/families.hpp"
#include "lolab/recolour.hpp"
#include "lolab/structure.hpp"

namespace lolab {

MinorMap::MinorMap(int source, int target, std::vector<int> image_)
    : source_arity(source), target_arity(target), image(std::move(image_)) {
    check_arity(source);
    check_arity(target);
    if (image.size() != static_cast<std::size_t>(source))
        throw std::invalid_argument("minor map image has wrong length");
    for (int v : image)
        if (v < 1 || v > target)
            throw std::invalid_argument("minor map image value out of range");
}

MinorMap MinorMap::identity(int n) {
    std::vector<int> image(n);
    for (int i = 0; i < n; ++i) image[i] = i + 1;
    return MinorMap(n, n, std::move(image));
}

bool MinorMap::is_identity() const {
    if (source_arity != target_arity) return false;
    for (int i = 0; i < source_arity; ++i)
        if (image[i] != i + 1) return false;
    return true;
}

std::uint32_t MinorMap::preimage(std::uint32_t target_set) const {
    std::uint32_t out = 0;
    for (int i = 0; i < source_arity; ++i)
        if ((target_set >> (image[i] - 1)) & 1) out |= std::uint32_t{1} << i;
    return out;
}

MinorMap compose(const MinorMap& first, const MinorMap& second) {
    if (first.target_arity != second.source_arity)
        throw std::invalid_argument("minor maps do not compose");
    std::vector<int> image(first.source_arity);
    for (int i = 0; i < first.source_arity; ++i)
        image[i] = second.image[first.image[i] - 1];
    return MinorMap(first.source_arity, second.target_arity, std::move(image));
}

PolyTable apply_minor(const PolyTable& f, const MinorMap& pi) {
    if (pi.source_arity != f.arity)
        throw std::invalid_argument("minor map arity does not match table");
    std::vector<std::uint8_t> values(std::size_t{1} << pi.target_arity);
    for (std::uint32_t s = 0; s < values.size(); ++s) values[s] = f(pi.preimage(s));
    return PolyTable(pi.target_arity, f.target_size, std::move(values));
}

MinorChain::MinorChain(std::vector<PolyTable> tables_, std::vector<MinorMap> maps_)
    : tables(std::move(tables_)), maps(std::move(maps_)) {
    if (tables.empty() || maps.size() + 1 != tables.size())
        throw std::invalid_argument("chain shape mismatch");
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (!(apply_minor(tables[i], maps[i]) == tables[i + 1]))
            throw std::invalid_argument("chain link is not the stated minor");
}

SelectionSet select_I(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);

    // Branch 1: smallest (then lexicographically least) small 2-set.
    std::uint32_t best = 0;
    int best_size = 4;
    for (std::uint32_t m = 1; m <= full; ++m) {
        const int size = popcount(m);
        if (size <= 3 && f(m) == 2 && size < best_size) {
            best = m;
            best_size = size;
        }
    }
    if (best != 0) return {best, SelectionBranch::Small2Set};

    if (f.arity <= 6) {
        const std::set<int> dict = dictating_variables(f);
        if (dict.size() != 1)
            throw std::logic_error(
                "low-arity polymorphism without a unique dictating variable");
        return {std::uint32_t{1} << (*dict.begin() - 1),
                SelectionBranch::LowArityDictator};
    }

    // Branch 3: dictator of the deterministic pure saturation.
    const SaturationResult sat = saturate(f);
    if (!sat.pure)
        throw std::logic_error("deterministic saturation of a small-2-set-free "
                               "polymorphism is not pure");
    const std::set<int> dict = dictating_variables(sat.result);
    if (dict.size() != 1)
        throw std::logic_error("pure saturation without a unique dictating variable");
    const int t = *dict.begin();
    const std::uint32_t tbit = std::uint32_t{1} << (t - 1);
    if (f(tbit) == 1) return {tbit, SelectionBranch::Singleton1Set};
    for (int b = 1; b <= f.arity; ++b) {
        if (b == t) continue;
        const std::uint32_t pair = tbit | (std::uint32_t{1} << (b - 1));
        if (f(pair) == 1) return {pair, SelectionBranch::Pair1Set};
    }
    throw std::logic_error("no 2-element 1-set through the dictator exists");
}

namespace {

SelectionSet select_cached(const PolyTable& f, SelectionCache* cache) {
    if (!cache) return select_I(f);
    const std::string key = encode_table(f);
    auto it = cache->find(key);
    if (it == cache->end()) it = cache->emplace(key, select_I(f)).first;
    return it->second;
}

}  // namespace

ChainWitness chain_condition(const MinorChain& chain, SelectionCache* cache) {
    const std::size_t l = chain.length();
    std::vector<SelectionSet> selections;
    selections.reserve(l);
    for (const PolyTable& f : chain.tables)
        selections.push_back(select_cached(f, cache));

    for (std::size_t i = 0; i < l; ++i) {
        MinorMap composed = MinorMap::identity(chain.tables[i].arity);
        for (std::size_t j = i + 1; j < l; ++j) {
            composed = compose(composed, chain.maps[j - 1]);
            const std::uint32_t pre = composed.preimage(selections[j].set);
            if (pre == 0)
                throw std::logic_error("empty preimage of a selection set");
            if (pre & selections[i].set)
                return {true, static_cast<int>(i) + 1, static_cast<int>(j) + 1};
        }
    }
    return {false, 0, 0};
}

MinorChain random_chain(std::uint64_t seed, int max_arity, int length) {
    if (length < 1 || max_arity < 7 || max_arity > 9)
        throw std::invalid_argument("random_chain: unsupported parameters");
    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt);
        const auto pick = [&rng](int lo, int hi) {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        };

        const int n = pick(7, max_arity);
        const int t = pick(1, n);
        std::vector<int> vars(n);
        for (int i = 0; i < n; ++i) vars[i] = i;
        std::shuffle(vars.begin(), vars.end(), rng);
        std::uint32_t block = 0;
        for (int i = 0; i < 7; ++i) block |= std::uint32_t{1} << vars[i];

        PolyTable f;
        switch (pick(0, 4)) {
            case 0: f = projection(n, t); break;
            case 1: f = block_family_f(n, t, block); break;
            case 2: f = block_family_g(n, t, block); break;
            case 3: f = threshold_family(n, t, pick(1, n)); break;
            default: f = saturate(block_family_f(n, t, block)).result; break;
        }

        std::vector<PolyTable> tables{f};
        std::vector<MinorMap> maps;
        bool nontrivial = false;
        for (int step = 1; step < length; ++step) {
            const int src = tables.back().arity;
            const int m = pick(1, max_arity);
            std::vector<int> image(src);
            for (int i = 0; i < src; ++i) image[i] = pick(1, m);
            MinorMap pi(src, m, std::move(image));
            nontrivial = nontrivial || !pi.is_identity();
            tables.push_back(apply_minor(tables.back(), pi));
            maps.push_back(std::move(pi));
        }
        if (length >= 2 && !nontrivial) continue;  // regenerate deterministically
        return MinorChain(std::move(tables), std::move(maps));
    }
}

}  // namespace lolab
