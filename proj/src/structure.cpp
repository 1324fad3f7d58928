#include "lolab/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "lolab/families.hpp"
#include "lolab/minors.hpp"

namespace lolab {

std::set<int> dictating_variables(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    std::uint32_t in_all_ones = full;  // intersection of static 1-sets
    std::uint32_t in_some_zero = 0;    // union of static 0-sets
    for (std::uint32_t m = 0; m <= full; ++m) {
        if (f(m) == 2 || !is_static(f, m)) continue;
        if (f(m) == 1)
            in_all_ones &= m;
        else
            in_some_zero |= m;
    }
    std::set<int> out;
    for (int e : mask_elements(in_all_ones & ~in_some_zero)) out.insert(e);
    return out;
}

bool kneser_check(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t m = 0; m <= full; ++m)
        if (popcount(m) <= 3 && f(m) >= 1) return true;
    return false;
}

StructureVerdict verify_structure_theorem(const PolyTable& f, std::uint64_t budget) {
    StructureVerdict v;
    v.has_small_2set = has_small_2set(f);
    if (v.has_small_2set) {  // theorem hypothesis unmet
        v.conforms = true;
        return v;
    }
    if (f.arity <= 6) {
        const std::set<int> dict = dictating_variables(f);
        if (dict.size() == 1) {
            v.dictating = *dict.begin();
            v.conforms = true;
        }
        return v;
    }
    const PureSaturationSet sats = enumerate_pure_saturations(f, budget);
    if (!sats.complete) {
        v.known = false;
        return v;
    }
    for (const PolyTable& g : sats.tables) {
        const std::set<int> dict = dictating_variables(g);
        if (dict.size() != 1) return v;  // conforms stays false
        v.pure_saturation_dictators.insert(*dict.begin());
    }
    v.conforms = !sats.tables.empty() && v.pure_saturation_dictators.size() == 1;
    return v;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n) {
        for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    }
};

std::string table_key(const PolyTable& f) {
    return std::string(f.values.begin(), f.values.end());
}

}  // namespace

ReconfigReport reconfig_graph(int n, std::uint64_t budget) {
    if (n > 4) throw std::invalid_argument("reconfig_graph is limited to arity 4");
    ReconfigReport report;
    report.arity = n;

    EnumResult all = enumerate_polymorphisms(n, lo_cached(3), EnumFilter::All, budget);
    if (!all.complete) {
        report.complete = false;
        return report;
    }
    const std::size_t count = all.tables.size();
    report.vertex_count = count;

    std::unordered_map<std::string, int> index;
    index.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        index.emplace(table_key(all.tables[i]), static_cast<int>(i));

    std::vector<char> survives(count);
    for (std::size_t i = 0; i < count; ++i)
        survives[i] = !has_small_2set(all.tables[i]);

    Dsu full_graph(count), surviving(count);
    std::string probe;
    for (std::size_t i = 0; i < count; ++i) {
        probe = table_key(all.tables[i]);
        for (std::size_t m = 0; m < probe.size(); ++m) {
            const char old = probe[m];
            for (char v = 0; v < 3; ++v) {
                if (v == old) continue;
                probe[m] = v;
                const auto it = index.find(probe);
                if (it != index.end() && static_cast<std::size_t>(it->second) > i) {
                    full_graph.unite(static_cast<int>(i), it->second);
                    if (survives[i] && survives[it->second])
                        surviving.unite(static_cast<int>(i), it->second);
                }
            }
            probe[m] = old;
        }
    }

    std::set<int> full_roots;
    for (std::size_t i = 0; i < count; ++i)
        full_roots.insert(full_graph.find(static_cast<int>(i)));
    report.full_components = full_roots.size();

    std::unordered_map<int, std::size_t> comp_index;
    for (std::size_t i = 0; i < count; ++i) {
        if (!survives[i]) continue;
        ++report.surviving_count;
        const int root = surviving.find(static_cast<int>(i));
        auto [it, fresh] = comp_index.emplace(root, report.components.size());
        if (fresh) report.components.emplace_back();
        ++report.components[it->second].size;
    }
    for (int t = 1; t <= n; ++t) {
        const PolyTable proj = projection(n, t);
        const auto it = index.find(table_key(proj));
        if (it == index.end() || !survives[it->second]) continue;
        const int root = surviving.find(it->second);
        report.components[comp_index.at(root)].projections.push_back(t);
    }
    return report;
}

namespace {

struct SuiteContext {
    int n_max;
    std::uint64_t budget;
    std::vector<EnumResult> enumerated;  // index = arity, [1..n_max]
    std::vector<PolyTable> families;     // arity >= 7 constructed tables

    const std::vector<PolyTable>& polys(int n) const { return enumerated[n].tables; }
};

class LemmaCheck {
public:
    LemmaCheck(std::string id, int arity) {
        res_.id = std::move(id);
        res_.arity = arity;
    }
    void item(bool ok, const PolyTable& f) {
        ++res_.checked;
        if (!ok) {
            ++res_.violations;
            if (!res_.first_counterexample) res_.first_counterexample = encode_table(f);
        }
    }
    void incomplete() { res_.complete = false; }
    LemmaResult take() { return std::move(res_); }

private:
    LemmaResult res_;
};

std::uint32_t default_block(int n) {
    // the 7 highest variables, mirroring the arity-9 worked example
    return full_mask(n) & ~full_mask(n - 7);
}

// Lemma targets with exhaustive scope: one callback per enumerated
// polymorphism, plus (optionally) the constructed families.
template <class Fn>
LemmaResult run_exhaustive(const SuiteContext& ctx, const std::string& id,
                           bool include_families, Fn&& check) {
    LemmaCheck lemma(id, ctx.n_max);
    for (int n = 1; n <= ctx.n_max; ++n)
        for (const PolyTable& f : ctx.polys(n)) lemma.item(check(f), f);
    if (include_families)
        for (const PolyTable& f : ctx.families) lemma.item(check(f), f);
    return lemma.take();
}

bool check_2set(const PolyTable& f) {
    std::vector<std::uint32_t> twosets;
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t m = 0; m <= full; ++m)
        if (f(m) == 2) twosets.push_back(m);
    for (std::size_t a = 0; a < twosets.size(); ++a)
        for (std::size_t b = a + 1; b < twosets.size(); ++b)
            if ((twosets[a] & twosets[b]) == 0) return false;
    for (std::uint32_t m = 0; m <= full; ++m)
        if (f(m) != 2) two_recolourable(f, m);  // throws on disagreement
    return true;
}

bool check_upwards_closure(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t y = 0; y <= full; ++y) {
        if (f(y) == 2) continue;
        bool super_of_2set = false;
        for (std::uint32_t s = (y - 1) & y; s != y; s = (s - 1) & y) {
            if (f(s) == 2) {
                super_of_2set = true;
                break;
            }
            if (s == 0) break;
        }
        if (super_of_2set && !two_recolourable(f, y)) return false;
    }
    return true;
}

bool check_complementarity(const PolyTable& f) {
    if (!is_upward_closed(f)) return true;  // hypothesis unmet
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t x = 1; x < full; ++x) {
        const std::uint32_t y = full ^ x;
        if (x < y && f(x) != 2 && f(y) != 2)
            if (!two_recolourable(f, x) || !two_recolourable(f, y)) return false;
    }
    return true;
}

bool check_boolean_recolouring(const PolyTable& f) {
    if (!is_saturated(f)) return true;
    const std::uint32_t tf = t_union(f);
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t x = 0; x <= full; ++x)
        if (f(x) != 2 && is_static(f, x) != ((x & tf) != 0)) return false;
    return true;
}

bool check_type(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t t = 0; t <= full; ++t) {
        if (f(t) != 2) continue;
        bool type01 = false, type00 = false;
        for (std::uint32_t a = (t - 1) & t; a != 0; a = (a - 1) & t) {
            const std::uint32_t b = t & ~a;
            if (a > b) continue;  // unordered decomposition
            if (f(a) == 2 || f(b) == 2) continue;
            if (f(a) != f(b))
                type01 = true;
            else if (f(a) == 0)
                type00 = true;
            else
                return false;  // two disjoint 1-sets inside a 2-set
        }
        if (type01 && type00) return false;
    }
    return true;
}

bool check_static(const PolyTable& f) {
    const std::uint32_t full = full_mask(f.arity);
    for (std::uint32_t x = 0; x <= full; ++x) {
        if (f(x) == 2) continue;
        if (is_static(f, x) != !is_recolourable_to(f, x, 1 - f(x))) return false;
    }
    return true;
}

bool check_small_arity(const PolyTable& f) {
    if (f.arity > 6 || has_small_2set(f)) return true;
    return dictating_variables(f).size() == 1;
}

// Pure-saturation enumeration at arity >= 8 can have billions of
// endpoints (and the visited-state memo stores one table per node), so
// suite-internal enumerations run under a hard node cap and report
// incomplete instead.
constexpr std::uint64_t kSuiteSaturationCap = 20000;

LemmaResult run_unique_saturation2(const SuiteContext& ctx) {
    LemmaCheck lemma("unique_saturation2", 9);
    const std::uint64_t cap = std::min(ctx.budget, kSuiteSaturationCap);
    for (const PolyTable& f : ctx.families) {
        if (f.arity < 7 || has_small_2set(f)) continue;
        const PureSaturationSet sats = enumerate_pure_saturations(f, cap);
        if (!sats.complete) {
            lemma.incomplete();
            continue;
        }
        const std::uint32_t full = full_mask(f.arity);
        bool ok = true;
        for (std::uint32_t x = 0; x <= full && ok; ++x) {
            if (f(x) == 2) continue;
            bool contains2 = false;
            for (std::uint32_t s = (x - 1) & x; s != x; s = (s - 1) & x) {
                if (f(s) == 2) {
                    contains2 = true;
                    break;
                }
                if (s == 0) break;
            }
            const bool hypothesis = popcount(x) >= f.arity - 3 || contains2;
            if (hypothesis) {
                for (const PolyTable& g : sats.tables)
                    if (g(x) == f(x)) ok = false;
            } else if (sats.tables.size() == 1) {  // converse, unique case
                if (sats.tables[0](x) != f(x)) ok = false;
            }
        }
        lemma.item(ok, f);
    }
    return lemma.take();
}

LemmaResult run_minimal_counterexamples(const SuiteContext& ctx) {
    LemmaCheck lemma("minimal_counterexamples", 8);
    for (const PolyTable& f : ctx.families) {
        if (f.arity < 7 || has_small_2set(f)) continue;
        std::uint32_t four_union = 0;
        for (std::uint32_t m : minimal_2sets(f))
            if (popcount(m) == 4) four_union |= m;
        if (four_union != full_mask(f.arity)) continue;  // hypothesis unmet

        std::vector<std::uint32_t> static_1sets;
        const std::uint32_t full = full_mask(f.arity);
        for (std::uint32_t x = 1; x <= full; ++x)
            if (f(x) == 1 && is_static(f, x)) static_1sets.push_back(x);
        bool no_disjoint = true;
        for (std::size_t a = 0; a < static_1sets.size() && no_disjoint; ++a)
            for (std::size_t b = a + 1; b < static_1sets.size(); ++b)
                if ((static_1sets[a] & static_1sets[b]) == 0) {
                    no_disjoint = false;
                    break;
                }
        const bool singleton = std::any_of(
            static_1sets.begin(), static_1sets.end(),
            [](std::uint32_t m) { return popcount(m) == 1; });
        lemma.item(no_disjoint && singleton, f);
    }
    return lemma.take();
}

LemmaResult run_non_unique(const SuiteContext& ctx) {
    LemmaCheck lemma("non_unique", 8);
    // Budget-capped search: a couple of distinct endpoints suffice to
    // trigger the non-uniqueness hypothesis.
    const std::uint64_t cap = std::min<std::uint64_t>(ctx.budget, 3000);
    static_assert(3000 <= kSuiteSaturationCap);
    std::vector<PolyTable> pool = ctx.families;
    pool.push_back(projection(8, 1));  // known non-unique pure saturations
    for (const PolyTable& f : pool) {
        if (f.arity < 7 || has_small_2set(f)) continue;
        const PureSaturationSet sats = enumerate_pure_saturations(f, cap);
        if (sats.tables.size() < 2) continue;  // uniqueness not refuted
        std::set<int> dictators;
        for (const PolyTable& g : sats.tables) {
            const std::set<int> d = dictating_variables(g);
            if (d.size() != 1) {
                dictators.clear();
                break;
            }
            dictators.insert(*d.begin());
        }
        if (dictators.size() != 1) {
            lemma.item(false, f);
            continue;
        }
        const int t = *dictators.begin();
        const std::uint32_t tbit = std::uint32_t{1} << (t - 1);
        std::vector<std::uint32_t> offending;  // boolean S with f(S) != [t in S]
        const std::uint32_t full = full_mask(f.arity);
        for (std::uint32_t s = 1; s <= full; ++s)
            if (f(s) != 2 && f(s) != ((s & tbit) ? 1 : 0)) offending.push_back(s);
        bool ok = true;
        for (std::size_t a = 0; a < offending.size() && ok; ++a)
            for (std::size_t b = a + 1; b < offending.size(); ++b)
                if ((offending[a] & offending[b]) == 0) {
                    ok = false;
                    break;
                }
        lemma.item(ok, f);
    }
    return lemma.take();
}

LemmaResult run_hitting_set_projections(const SuiteContext& ctx) {
    LemmaCheck lemma("hitting_set_projections", 9);
    const std::uint64_t cap = std::min(ctx.budget, kSuiteSaturationCap);
    for (const PolyTable& f : ctx.families) {
        if (f.arity < 7 || has_small_2set(f)) continue;
        const PureSaturationSet sats = enumerate_pure_saturations(f, cap);
        if (!sats.complete) {
            lemma.incomplete();
            continue;
        }
        if (sats.tables.size() != 1) continue;  // needs a unique pure saturation
        const PolyTable& g = sats.tables[0];
        const std::set<int> dict = dictating_variables(g);
        if (dict.size() != 1) {
            lemma.item(false, f);
            continue;
        }
        const std::uint32_t tbit = std::uint32_t{1} << (*dict.begin() - 1);
        const std::uint32_t tg = t_union(g);
        const std::uint32_t full = full_mask(f.arity);
        bool ok = true;
        for (std::uint32_t x = 0; x <= full && ok; ++x) {
            if (f(x) != 1 || !(x & tbit)) continue;
            for (std::uint32_t y = 0; y <= full; ++y)
                if (f(y) == 1 && (y & tg) && (x & y) == 0) {
                    ok = false;
                    break;
                }
        }
        lemma.item(ok, f);
    }
    return lemma.take();
}

LemmaResult run_saturation_commutes(const SuiteContext& ctx) {
    LemmaCheck lemma("saturation_commutes_sometimes", 9);
    const std::uint64_t cap = std::min(ctx.budget, kSuiteSaturationCap);
    const int n = 9;
    const PolyTable f = block_family_f(n, 1, default_block(n));
    const PureSaturationSet fsats = enumerate_pure_saturations(f, cap);
    if (!fsats.complete || fsats.tables.size() != 1) {
        lemma.incomplete();
        return lemma.take();
    }
    const std::set<int> fdict = dictating_variables(fsats.tables[0]);

    // Deterministic minor pool: cyclic relabellings plus maps merging two
    // block variables (arity 8 images).
    std::vector<MinorMap> maps;
    for (int shift = 1; shift < n; ++shift) {
        std::vector<int> image(n);
        for (int i = 0; i < n; ++i) image[i] = (i + shift) % n + 1;
        maps.emplace_back(n, n, std::move(image));
    }
    for (int merged = 4; merged <= n; ++merged) {
        std::vector<int> image(n);
        int next = 1;
        for (int i = 1; i <= n; ++i)
            image[i - 1] = (i == merged) ? image[2] : next++;
        maps.emplace_back(n, n - 1, std::move(image));
    }

    for (const MinorMap& pi : maps) {
        const PolyTable fp = apply_minor(f, pi);
        if (fp.arity < 7 || has_small_2set(fp)) continue;
        const PureSaturationSet psats = enumerate_pure_saturations(fp, cap);
        if (!psats.complete || psats.tables.size() != 1) continue;
        const PolyTable& gp = psats.tables[0];
        bool big_minimal = false;
        for (std::uint32_t m : minimal_2sets(gp))
            if (popcount(m) >= fp.arity - 3) big_minimal = true;
        if (big_minimal) continue;  // hypothesis unmet
        const std::set<int> pdict = dictating_variables(gp);
        const bool ok = fdict.size() == 1 && pdict.size() == 1 &&
                        pi.image[*fdict.begin() - 1] == *pdict.begin();
        lemma.item(ok, fp);
    }
    return lemma.take();
}

}  // namespace

std::vector<LemmaResult> lemma_suite(int n_max, std::uint64_t budget) {
    if (n_max < 1 || n_max > 4)
        throw std::invalid_argument("lemma_suite: exhaustive range is 1..4");
    SuiteContext ctx;
    ctx.n_max = n_max;
    ctx.budget = budget;
    ctx.enumerated.resize(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        ctx.enumerated[n] =
            enumerate_polymorphisms(n, lo_cached(3), EnumFilter::All, budget);

    // Projections above arity 7 are left out: their pure-saturation sets
    // are astronomically large, so every suite enumeration would come
    // back incomplete. run_non_unique probes projection(8,1) directly.
    ctx.families.push_back(projection(7, 1));
    for (int n : {7, 8, 9}) {
        const std::uint32_t block = default_block(n);
        ctx.families.push_back(block_family_f(n, 1, block));
        ctx.families.push_back(block_family_g(n, 1, block));
        ctx.families.push_back(threshold_family(n, 2));
        ctx.families.push_back(saturate(block_family_f(n, 1, block)).result);
    }

    std::vector<LemmaResult> out;
    out.push_back(run_exhaustive(ctx, "kneser", true, kneser_check));
    out.push_back(run_exhaustive(ctx, "static", false, check_static));
    out.push_back(run_exhaustive(ctx, "2set", true, check_2set));
    out.push_back(run_exhaustive(ctx, "upwards_closure", true, check_upwards_closure));
    out.push_back(run_exhaustive(ctx, "complementarity", false, check_complementarity));
    out.push_back(run_exhaustive(ctx, "lift", false, [](const PolyTable& f) {
        return is_saturated(saturate(f).result);
    }));
    out.push_back(run_exhaustive(ctx, "boolean_recolouring", true,
                                 check_boolean_recolouring));
    out.push_back(run_exhaustive(ctx, "type", true, check_type));
    out.push_back(run_unique_saturation2(ctx));
    out.push_back(run_exhaustive(ctx, "small_arity", false, check_small_arity));
    out.push_back(run_minimal_counterexamples(ctx));
    out.push_back(run_non_unique(ctx));
    out.push_back(run_hitting_set_projections(ctx));
    out.push_back(run_saturation_commutes(ctx));
    return out;
}

}  // namespace lolab
