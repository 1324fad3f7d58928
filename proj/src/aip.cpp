#include "lolab/aip.hpp"

#include <stdexcept>
#include <utility>

namespace lolab {

IntLinSystem build_system(const Hypergraph3& h) {
    IntLinSystem sys;
    sys.rows = h.edges.size();
    sys.cols = static_cast<std::size_t>(h.vertex_count);
    sys.a.assign(sys.rows, std::vector<mpz_class>(sys.cols, 0));
    for (std::size_t r = 0; r < sys.rows; ++r)
        for (int v : h.edges[r]) ++sys.a[r][v - 1];
    return sys;
}

namespace {

bool satisfies(const IntLinSystem& sys, const IntSolution& x) {
    if (x.size() != sys.cols) return false;
    for (std::size_t r = 0; r < sys.rows; ++r) {
        mpz_class acc = 0;
        for (std::size_t c = 0; c < sys.cols; ++c) acc += sys.a[r][c] * x[c];
        if (acc != 1) return false;
    }
    return true;
}

}  // namespace

std::optional<IntSolution> solve_integer(const IntLinSystem& sys) {
    const std::size_t rows = sys.rows, cols = sys.cols;
    std::vector<std::vector<mpz_class>> m = sys.a;
    // u tracks the accumulated column operations: columns of the working
    // matrix are A * u, so a solution y of the triangular system gives
    // x = u * y for the original one.
    std::vector<std::vector<mpz_class>> u(cols, std::vector<mpz_class>(cols, 0));
    for (std::size_t c = 0; c < cols; ++c) u[c][c] = 1;

    const auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][a], m[r][b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(u[r][a], u[r][b]);
    };
    const auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
        for (std::size_t r = 0; r < rows; ++r) m[r][dst] += k * m[r][src];
        for (std::size_t r = 0; r < cols; ++r) u[r][dst] += k * u[r][src];
    };

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t p = 0;
    for (std::size_t r = 0; r < rows && p < cols; ++r) {
        // Gcd-eliminate row r across columns p..cols-1 down to one entry.
        for (;;) {
            std::size_t best = cols;
            for (std::size_t c = p; c < cols; ++c)
                if (m[r][c] != 0 &&
                    (best == cols || mpz_cmpabs(m[r][c].get_mpz_t(),
                                                m[r][best].get_mpz_t()) < 0))
                    best = c;
            if (best == cols) break;  // all-zero tail, no pivot in this row
            swap_cols(p, best);
            bool reduced_all = true;
            for (std::size_t c = p + 1; c < cols; ++c) {
                if (m[r][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), m[r][c].get_mpz_t(), m[r][p].get_mpz_t());
                add_col(c, p, -q);
                if (m[r][c] != 0) reduced_all = false;
            }
            if (reduced_all) break;
        }
        if (m[r][p] != 0) pivots.emplace_back(r, p++);
    }

    // Forward substitution on the triangularized system, free variables 0.
    std::vector<mpz_class> y(cols, 0);
    std::size_t next_pivot = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        const bool has_pivot =
            next_pivot < pivots.size() && pivots[next_pivot].first == r;
        const std::size_t upto = has_pivot ? pivots[next_pivot].second : p;
        mpz_class residual = 1;
        for (std::size_t c = 0; c < upto; ++c) residual -= m[r][c] * y[c];
        if (!has_pivot) {
            if (residual != 0) return std::nullopt;
            continue;
        }
        const std::size_t col = pivots[next_pivot++].second;
        if (!mpz_divisible_p(residual.get_mpz_t(), m[r][col].get_mpz_t()))
            return std::nullopt;
        y[col] = residual / m[r][col];
    }

    IntSolution x(cols, 0);
    for (std::size_t r = 0; r < cols; ++r)
        for (std::size_t c = 0; c < cols; ++c) x[r] += u[r][c] * y[c];
    if (!satisfies(sys, x))
        throw std::logic_error("integer solver soundness check failed");
    return x;
}

Assignment round_to_nae(const IntSolution& sol, const Hypergraph3& h) {
    if (!satisfies(build_system(h), sol))
        throw std::invalid_argument("solution does not satisfy the instance system");
    Assignment a(h.vertex_count);
    for (int v = 0; v < h.vertex_count; ++v) a[v] = sol[v] >= 1 ? 1 : 0;
    for (const auto& e : h.edges) {
        const int x = a[e[0] - 1], y = a[e[1] - 1], z = a[e[2] - 1];
        // three positives sum >= 3, three non-positives sum <= 0; both != 1
        if (x == y && y == z)
            throw std::logic_error("rounding produced a constant edge");
    }
    return a;
}

AipResult aip_pipeline(const Hypergraph3& h) {
    AipResult out;
    const auto sol = solve_integer(build_system(h));
    if (!sol) return out;
    out.solved = true;
    out.assignment = round_to_nae(*sol, h);
    return out;
}

}  // namespace lolab
