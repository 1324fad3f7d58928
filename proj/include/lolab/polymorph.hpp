#ifndef LOLAB_POLYMORPH_HPP_
#define LOLAB_POLYMORPH_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "lolab/relations.hpp"
#include "lolab/subsets.hpp"

namespace lolab {

struct PolyWitness {
    bool ok = false;
    // On failure, the canonically first partition whose value triple is
    // outside the target, together with that triple.
    std::optional<PartitionTriple> violation;
    std::array<int, 3> values{};

    explicit operator bool() const { return ok; }
};

// Membership test via the partition characterization: f is a polymorphism
// of (LO2, target) iff (f(X),f(Y),f(Z)) is in the target for every
// partition (X,Y,Z) of [n]. Requires a symmetric target of matching size.
PolyWitness is_polymorphism(const PolyTable& f, const Relation3& target);

// f(X) = [t in X], over target size 3 by default.
PolyTable projection(int n, int t, int target_size = 3);

// The (3m+1)-ary threshold polymorphism of (LO2, H2): outputs 1 iff at
// least m+1 arguments are 1.
PolyTable threshold_lo2_h2(int m);

enum class EnumFilter {
    All,
    NoSmall2Set,  // masks of popcount <= 3 are restricted to values {0,1}
};

struct EnumResult {
    std::vector<PolyTable> tables;  // ascending encode order
    bool complete = true;
    std::uint64_t nodes = 0;
};

// Depth-first assignment over masks ascending by (popcount, bits), pruning
// on every partition that becomes fully assigned.
EnumResult enumerate_polymorphisms(int n, const Relation3& target, EnumFilter filter,
                                   std::uint64_t budget = UINT64_C(1) << 40);

}  // namespace lolab

#endif
