#ifndef LOLAB_HYPERGRAPH_HPP_
#define LOLAB_HYPERGRAPH_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// 3-uniform hypergraph instances, LO colouring verification, an exact
// backtracking solver, planted generation and the gadget reduction from
// (LO2,LO3) to (LO3,LO4).

namespace lolab {

struct Hypergraph3 {
    int vertex_count = 0;
    std::vector<std::array<int, 3>> edges;  // 1-indexed, repeats allowed

    Hypergraph3() = default;
    Hypergraph3(int vertex_count_, std::vector<std::array<int, 3>> edges_);

    friend bool operator==(const Hypergraph3&, const Hypergraph3&) = default;
};

using Assignment = std::vector<int>;  // colour per vertex, length V

struct VerifyResult {
    bool ok = true;
    int violating_edge = -1;  // 0-based index into edges, -1 when ok
};

// OK iff every edge's colour triple has a unique maximum among colours
// < l. Throws on out-of-range colours or wrong assignment length.
VerifyResult verify_lo(const Hypergraph3& h, int l, const Assignment& a);

enum class SolveStatus { Sat, Unsat, Budget };

struct SolveResult {
    SolveStatus status = SolveStatus::Unsat;
    Assignment assignment;  // verified, present iff Sat
    std::uint64_t nodes = 0;
};

// Backtracking over vertices in degree-descending order, smaller colours
// first, pruning every edge as soon as its last vertex is coloured.
SolveResult solve_lo_exact(const Hypergraph3& h, int l,
                           std::uint64_t budget = UINT64_C(1) << 40);

// 2V vertices; n_x = x + V; edges(H) then (x,x,n_x) for x = 1..V.
Hypergraph3 gadget_reduce(const Hypergraph3& h);

struct PlantedInstance {
    Hypergraph3 graph;
    Assignment plant;  // 0/1, verifies at l = 2
};

// m edges, each one planted-1 vertex plus two distinct planted-0
// vertices; deterministic per seed.
PlantedInstance plant_lo2(int vertex_count, int edge_count, std::uint64_t seed);

// "p hlo <V> <m>" header, "e u v w" edge lines; assignments as
// "a c1 ... cV". Bit-exact round-trips.
std::string encode_instance(const Hypergraph3& h);
Hypergraph3 decode_instance(std::string_view text);
std::string encode_assignment(const Assignment& a);
Assignment decode_assignment(std::string_view line);

}  // namespace lolab

#endif
