#include "lolab/recolour.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace lolab {

namespace {

const Relation3& target_of(const PolyTable& f) { return lo_cached(f.target_size); }

void require_boolean(const PolyTable& f, std::uint32_t x, const char* who) {
    if (f(x) == 2)
        throw std::invalid_argument(std::string(who) + ": argument is a 2-set");
}

// Recolour one mask, verifying the result is still a polymorphism. The
// callers only perform recolourings the lemmas licence, so a failure here
// is an implementation bug.
void recolour_checked(PolyTable& f, std::uint32_t mask, int value) {
    f.values[mask] = static_cast<std::uint8_t>(value);
    if (!is_polymorphism(f, target_of(f)))
        throw std::logic_error("recolouring step left the polymorphism class");
}

// Some proper subset of `mask` is a 2-set.
bool contains_2set(const PolyTable& f, std::uint32_t mask) {
    for (std::uint32_t s = (mask - 1) & mask; s != mask; s = (s - 1) & mask) {
        if (f(s) == 2) return true;
        if (s == 0) break;
    }
    return false;
}

}  // namespace

bool is_recolourable_to(const PolyTable& f, std::uint32_t x, int colour) {
    if (colour == f(x))
        throw std::invalid_argument("recolouring to the current value");
    if (colour < 0 || colour >= f.target_size)
        throw std::invalid_argument("colour out of range");
    PolyTable g = f;
    g.values[x] = static_cast<std::uint8_t>(colour);
    return is_polymorphism(g, target_of(f)).ok;
}

bool is_static(const PolyTable& f, std::uint32_t x) {
    require_boolean(f, x, "is_static");
    const std::uint32_t rest = full_mask(f.arity) & ~x;
    bool found = false;
    for (std::uint32_t y = rest;; y = (y - 1) & rest) {
        const std::uint32_t z = rest & ~y;
        const int a = f(x), b = f(y), c = f(z);
        if (a <= 1 && b <= 1 && c <= 1 && (a | b | c) == 1 && a * b * c == 0) {
            found = true;
            break;
        }
        if (y == 0) break;
    }
    return found;
}

bool two_recolourable(const PolyTable& f, std::uint32_t x) {
    require_boolean(f, x, "two_recolourable");
    bool hits_all = x != 0;
    if (hits_all) {
        const std::size_t count = std::size_t{1} << f.arity;
        for (std::uint32_t s = 0; s < count; ++s)
            if (f(s) == 2 && (s & x) == 0) {
                hits_all = false;
                break;
            }
    }
    if (hits_all != is_recolourable_to(f, x, 2))
        throw std::logic_error(
            "2-recolourability tests disagree (intersecting-family law violated)");
    return hits_all;
}

std::vector<std::uint32_t> minimal_2sets(const PolyTable& f) {
    std::vector<std::uint32_t> out;
    const std::size_t count = std::size_t{1} << f.arity;
    for (std::uint32_t m = 0; m < count; ++m)
        if (f(m) == 2 && !contains_2set(f, m)) out.push_back(m);
    return out;
}

std::uint32_t t_union(const PolyTable& f) {
    std::uint32_t u = 0;
    for (std::uint32_t m : minimal_2sets(f)) u |= m;
    return u;
}

bool has_small_2set(const PolyTable& f) {
    const std::size_t count = std::size_t{1} << f.arity;
    for (std::uint32_t m = 0; m < count; ++m)
        if (f(m) == 2 && popcount(m) <= 3) return true;
    return false;
}

bool is_upward_closed(const PolyTable& f) {
    const std::size_t count = std::size_t{1} << f.arity;
    for (std::uint32_t m = 0; m < count; ++m)
        if (f(m) != 2 && contains_2set(f, m)) return false;
    return true;
}

bool is_complement_complete(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t m = 0; m <= full; ++m)
        if (f(m) != 2 && f(full ^ m) != 2) return false;
    return true;
}

bool is_saturated(const PolyTable& f) {
    return is_upward_closed(f) && is_complement_complete(f);
}

SaturationResult saturate(const PolyTable& f) {
    return saturate(f, [](const PolyTable&, std::uint32_t a, std::uint32_t b) {
        const int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa > pb ? a : b;
        return a > b ? a : b;
    });
}

SaturationResult saturate(const PolyTable& f, const SaturationChooser& choose) {
    SaturationResult res{f, {}, false};
    PolyTable& g = res.result;
    const std::uint32_t full = full_mask(g.arity);
    for (;;) {
        bool changed = false;
        // Upward closure: boolean supersets of 2-sets, ascending mask order.
        for (std::uint32_t m = 0; m <= full; ++m)
            if (g(m) != 2 && contains_2set(g, m)) {
                res.path.push_back({m, g(m)});
                recolour_checked(g, m, 2);
                changed = true;
            }
        if (changed) continue;
        // Complementarity: first complementary boolean pair, policy choice.
        for (std::uint32_t m = 0; m <= full; ++m) {
            const std::uint32_t c = full ^ m;
            if (m < c && g(m) != 2 && g(c) != 2) {
                const std::uint32_t pick = choose(g, m, c);
                if (pick != m && pick != c)
                    throw std::invalid_argument("chooser returned a foreign mask");
                res.path.push_back({pick, g(pick)});
                recolour_checked(g, pick, 2);
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    res.pure = !has_small_2set(g);
    return res;
}

namespace {

struct SaturationSearch {
    std::uint64_t budget;
    PureSaturationSet out;
    std::unordered_set<std::string> visited;
    std::unordered_set<std::string> emitted;

    std::string key(const PolyTable& g) const {
        return std::string(g.values.begin(), g.values.end());
    }

    // Returns false once the budget is exhausted.
    bool dfs(PolyTable g) {
        if (has_small_2set(g)) return true;  // no pure saturation below here
        const std::uint32_t full = full_mask(g.arity);
        for (;;) {  // forced upward-closure moves
            bool changed = false;
            for (std::uint32_t m = 0; m <= full; ++m)
                if (g(m) != 2 && contains_2set(g, m)) {
                    recolour_checked(g, m, 2);
                    changed = true;
                }
            if (!changed) break;
        }
        if (has_small_2set(g)) return true;
        if (!visited.insert(key(g)).second) return true;
        if (++out.nodes > budget) {
            out.complete = false;
            return false;
        }
        std::uint32_t pair = full + 1;
        for (std::uint32_t m = 0; m <= full; ++m) {
            const std::uint32_t c = full ^ m;
            if (m < c && g(m) != 2 && g(c) != 2) {
                pair = m;
                break;
            }
        }
        if (pair == full + 1) {  // saturated endpoint
            if (emitted.insert(key(g)).second) out.tables.push_back(g);
            return true;
        }
        for (std::uint32_t side : {pair, full ^ pair}) {
            if (popcount(side) < 4) continue;  // purity
            PolyTable h = g;
            recolour_checked(h, side, 2);
            if (!dfs(std::move(h))) return false;
        }
        return true;
    }
};

}  // namespace

PureSaturationSet enumerate_pure_saturations(const PolyTable& f, std::uint64_t budget) {
    SaturationSearch search;
    search.budget = budget;
    search.dfs(f);
    return std::move(search.out);
}

}  // namespace lolab
