#ifndef LOLAB_FAMILIES_HPP_
#define LOLAB_FAMILIES_HPP_

#include <cstdint>

#include "lolab/subsets.hpp"

// Constructed polymorphism families of arity >= 7, used for the lemma
// suite and for seeding random minor chains.

namespace lolab {

// g(S) = 2 if |S ∩ block| >= 4, 1 if 1 <= |S ∩ block| <= 3 and t ∈ S,
// 0 otherwise. Requires |block| = 7; t may lie inside or outside the
// block. Saturated, with no small 2-set; dictating variable t.
PolyTable block_family_g(int n, int t, std::uint32_t block);

// Same as block_family_g except that block and [n] are 1-sets. Its unique
// pure saturation is block_family_g (exercised in tests).
PolyTable block_family_f(int n, int t, std::uint32_t block);

// Saturated recoloured projection whose 2-sets are a threshold-type
// maximal intersecting family: for odd n, all sets of size >= (n+1)/2;
// for even n, all sets of size > n/2 plus the size-n/2 sets containing
// `star`. Boolean values are [t in S]. Requires n >= 7.
PolyTable threshold_family(int n, int t, int star = 1);

}  // namespace lolab

#endif
