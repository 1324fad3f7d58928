#ifndef LOLAB_RECOLOUR_HPP_
#define LOLAB_RECOLOUR_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "lolab/polymorph.hpp"
#include "lolab/subsets.hpp"

// Recolouring and saturation of (LO2,LO3) polymorphisms: recolourability,
// static sets, minimal 2-sets, saturation paths and pure saturations.

namespace lolab {

// True iff changing f(X) to colour i yields another polymorphism.
// Throws if i == f(X).
bool is_recolourable_to(const PolyTable& f, std::uint32_t x, int colour);

// A boolean set is static iff it takes part in a boolean partition;
// equivalently, iff it is not recolourable to its opposite boolean value
// (the equivalence is exercised in tests). Throws if X is a 2-set.
bool is_static(const PolyTable& f, std::uint32_t x);

// True iff X intersects every 2-set of f; asserted against the direct
// recolourability test. Throws if X is a 2-set.
bool two_recolourable(const PolyTable& f, std::uint32_t x);

// 2-sets with no proper subset that is a 2-set, and their union T_f.
std::vector<std::uint32_t> minimal_2sets(const PolyTable& f);
std::uint32_t t_union(const PolyTable& f);

bool has_small_2set(const PolyTable& f);     // some 2-set with <= 3 elements
bool is_upward_closed(const PolyTable& f);   // supersets of 2-sets are 2-sets
bool is_complement_complete(const PolyTable& f);  // X or ~X is a 2-set, for all X
bool is_saturated(const PolyTable& f);

struct SaturationStep {
    std::uint32_t mask;
    int old_value;
};

struct SaturationResult {
    PolyTable result;
    std::vector<SaturationStep> path;
    bool pure = false;  // result has no small 2-set
};

// Chooses which of a complementary boolean pair to recolour to 2.
using SaturationChooser =
    std::function<std::uint32_t(const PolyTable&, std::uint32_t, std::uint32_t)>;

// Recolours boolean supersets of 2-sets in ascending mask order, then one
// complementary boolean pair per the policy, repeating until saturated.
// Every intermediate table is asserted to be a polymorphism. The default
// policy recolours the larger part (ties: larger bits), which keeps the
// result pure whenever n >= 7 and f has no small 2-set.
SaturationResult saturate(const PolyTable& f);
SaturationResult saturate(const PolyTable& f, const SaturationChooser& choose);

struct PureSaturationSet {
    std::vector<PolyTable> tables;
    bool complete = true;
    std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultSaturationBudget = 1'000'000;

// All distinct pure saturations reachable from f, by depth-first search
// over the recolouring choices with visited-state memoization.
PureSaturationSet enumerate_pure_saturations(
    const PolyTable& f, std::uint64_t budget = kDefaultSaturationBudget);

}  // namespace lolab

#endif
