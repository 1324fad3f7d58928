#ifndef LOLAB_AIP_HPP_
#define LOLAB_AIP_HPP_

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "lolab/hypergraph.hpp"

// The basic AIP relaxation for approximate 1-in-3 SAT: one x+y+z = 1
// equation per edge over the integers, an exact Hermite-style solve, and
// positive-to-1 rounding into NAE2.

namespace lolab {

struct IntLinSystem {
    // rows x cols occurrence-count matrix, every right-hand side is 1
    std::size_t rows = 0, cols = 0;
    std::vector<std::vector<mpz_class>> a;  // a[row][col] in {0,1,2,3}
};

using IntSolution = std::vector<mpz_class>;  // length cols, A*x = 1 exactly

IntLinSystem build_system(const Hypergraph3& h);

// Particular integer solution via triangularization with unimodular
// column operations, free parameters 0; nullopt iff no integer solution
// exists. Every returned solution is re-verified by substitution.
std::optional<IntSolution> solve_integer(const IntLinSystem& sys);

// a(v) = 1 iff sol(v) >= 1. Throws if sol does not satisfy the system of
// h; asserts per edge that the rounded triple is non-constant.
Assignment round_to_nae(const IntSolution& sol, const Hypergraph3& h);

struct AipResult {
    bool solved = false;  // false = NO_INTEGER_SOLUTION
    Assignment assignment;
};

AipResult aip_pipeline(const Hypergraph3& h);

}  // namespace lolab

#endif
