#ifndef LOLAB_STRUCTURE_HPP_
#define LOLAB_STRUCTURE_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lolab/recolour.hpp"

namespace lolab {

// All t such that every static boolean set S satisfies f(S) = [t in S].
std::set<int> dictating_variables(const PolyTable& f);

// True iff some mask of popcount <= 3 has value 1 or 2.
bool kneser_check(const PolyTable& f);

struct StructureVerdict {
    bool has_small_2set = false;
    std::optional<int> dictating;            // arity <= 6 path
    std::set<int> pure_saturation_dictators;  // arity >= 7 path
    bool conforms = false;
    bool known = true;  // false when the pure-saturation budget ran out
};

// Classifies f against the structure theorem: with a small 2-set the
// hypothesis is unmet (conforms vacuously); at arity <= 6 the dictating
// set must be a singleton; at arity >= 7 all pure saturations must share
// a single dictating variable.
StructureVerdict verify_structure_theorem(
    const PolyTable& f, std::uint64_t budget = kDefaultSaturationBudget);

struct ReconfigComponent {
    std::size_t size = 0;
    std::vector<int> projections;  // coordinates whose projection lies inside
};

struct ReconfigReport {
    int arity = 0;
    std::size_t vertex_count = 0;      // all n-ary polymorphisms
    std::size_t surviving_count = 0;   // after removing small-2-set vertices
    std::size_t full_components = 0;   // components before removal (recorded)
    std::vector<ReconfigComponent> components;
    bool complete = true;
};

// Builds G_n (vertices: n-ary polymorphisms, edges: tables differing in a
// single position), removes small-2-set vertices and reports components.
ReconfigReport reconfig_graph(int n, std::uint64_t budget = UINT64_C(1) << 40);

struct LemmaResult {
    std::string id;
    int arity = 0;  // largest arity exercised
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
    std::optional<std::string> first_counterexample;  // encoded table
    bool complete = true;
};

// Verification suite: exhaustive checks over all enumerated polymorphisms
// up to n_max (<= 4), plus family-level checks at arity >= 7. Any
// violation indicates an implementation bug.
std::vector<LemmaResult> lemma_suite(int n_max, std::uint64_t budget = UINT64_C(1) << 40);

}  // namespace lolab

#endif
