#ifndef LOLAB_RELATIONS_HPP_
#define LOLAB_RELATIONS_HPP_

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace lolab {

// A ternary relation over {0,...,d-1}. Construction with symmetric=true
// asserts invariance under all six coordinate permutations.
class Relation3 {
public:
    Relation3(int domain_size, const std::vector<std::array<int, 3>>& triples,
              bool symmetric);

    bool contains(int a, int b, int c) const {
        return member_[(a * d_ + b) * d_ + c] != 0;
    }
    int domain_size() const { return d_; }
    bool symmetric() const { return symmetric_; }
    std::size_t size() const { return count_; }
    std::vector<std::array<int, 3>> triples() const;

private:
    int d_;
    bool symmetric_;
    std::size_t count_ = 0;
    std::vector<char> member_;
};

// All triples over {0..k-1} whose maximum occurs exactly once.
Relation3 lo_relation(int k);

// All non-constant triples over {0..k-1}.
Relation3 nae_relation(int k);

// Cached LO_k instances (the recolouring calculus always targets these).
const Relation3& lo_cached(int k);

enum class ZVerdict {
    NoHomToZTarget,  // D(B) loopless and acyclic: no homomorphism Z -> B
    Inconclusive,    // the condition is necessary only
};

struct ZCheckResult {
    std::vector<std::pair<int, int>> edges;  // D(B): (x,y) with (x,x,y) in B
    ZVerdict verdict;
};

ZCheckResult z_check(const Relation3& rel);

}  // namespace lolab

#endif
