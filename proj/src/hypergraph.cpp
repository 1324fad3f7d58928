#include "lolab/hypergraph.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lolab/subsets.hpp"

namespace lolab {

namespace {

bool lo_triple(int a, int b, int c) {
    const int m = std::max({a, b, c});
    return (a == m) + (b == m) + (c == m) == 1;
}

}  // namespace

Hypergraph3::Hypergraph3(int vertex_count_, std::vector<std::array<int, 3>> edges_)
    : vertex_count(vertex_count_), edges(std::move(edges_)) {
    if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& e : edges)
        for (int v : e)
            if (v < 1 || v > vertex_count)
                throw std::invalid_argument("edge vertex out of range");
}

VerifyResult verify_lo(const Hypergraph3& h, int l, const Assignment& a) {
    if (l < 1) throw std::invalid_argument("colour count must be positive");
    if (a.size() != static_cast<std::size_t>(h.vertex_count))
        throw std::invalid_argument("assignment length mismatch");
    for (int c : a)
        if (c < 0 || c >= l) throw std::invalid_argument("colour out of range");
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        const auto& e = h.edges[i];
        if (!lo_triple(a[e[0] - 1], a[e[1] - 1], a[e[2] - 1]))
            return {false, static_cast<int>(i)};
    }
    return {};
}

namespace {

struct Solver {
    const Hypergraph3& h;
    int l;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<int> order;                  // position -> vertex (0-based)
    std::vector<std::vector<int>> incident;  // vertex (0-based) -> edge ids
    std::vector<int> colour;                 // -1 = unassigned
    std::vector<int> rank;                   // vertex -> position in order

    Solver(const Hypergraph3& h_, int l_, std::uint64_t budget_)
        : h(h_), l(l_), budget(budget_), incident(h_.vertex_count),
          colour(h_.vertex_count, -1), rank(h_.vertex_count) {
        std::vector<int> degree(h.vertex_count, 0);
        for (std::size_t id = 0; id < h.edges.size(); ++id)
            for (int v : h.edges[id]) {
                auto& inc = incident[v - 1];
                if (inc.empty() || inc.back() != static_cast<int>(id))
                    inc.push_back(static_cast<int>(id));
                ++degree[v - 1];
            }
        order.resize(h.vertex_count);
        for (int v = 0; v < h.vertex_count; ++v) order[v] = v;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return degree[a] > degree[b]; });
        for (int pos = 0; pos < h.vertex_count; ++pos) rank[order[pos]] = pos;
    }

    // Still satisfiable given the current partial colouring of this edge?
    bool edge_feasible(int id) const {
        const auto& e = h.edges[id];
        int got[3], free_count = 0;
        for (int k = 0; k < 3; ++k) {
            got[k] = colour[e[k] - 1];
            if (got[k] < 0) ++free_count;
        }
        if (free_count == 0) return lo_triple(got[0], got[1], got[2]);
        if (free_count >= 2) return true;  // prune only once one slot is left
        for (int c = 0; c < l; ++c) {
            int t[3];
            for (int k = 0; k < 3; ++k) t[k] = got[k] < 0 ? c : got[k];
            if (lo_triple(t[0], t[1], t[2])) return true;
        }
        return false;
    }

    // Returns Sat/Unsat/Budget for the subtree at this position.
    SolveStatus dfs(int pos) {
        if (pos == h.vertex_count) return SolveStatus::Sat;
        const int v = order[pos];
        for (int c = 0; c < l; ++c) {
            if (++nodes > budget) return SolveStatus::Budget;
            colour[v] = c;
            bool ok = true;
            for (int id : incident[v]) {
                // Only edges whose deepest vertex is v are newly decided,
                // but partially coloured ones still prune via edge_feasible.
                if (!edge_feasible(id)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                const SolveStatus sub = dfs(pos + 1);
                if (sub != SolveStatus::Unsat) return sub;
            }
        }
        colour[v] = -1;
        return SolveStatus::Unsat;
    }
};

}  // namespace

SolveResult solve_lo_exact(const Hypergraph3& h, int l, std::uint64_t budget) {
    if (l < 1) throw std::invalid_argument("colour count must be positive");
    Solver solver(h, l, budget);
    SolveResult out;
    out.status = h.vertex_count == 0 ? SolveStatus::Sat : solver.dfs(0);
    out.nodes = solver.nodes;
    if (out.status == SolveStatus::Sat) {
        out.assignment.assign(solver.colour.begin(), solver.colour.end());
        if (h.vertex_count == 0) out.assignment.clear();
        const VerifyResult check = verify_lo(h, l, out.assignment);
        if (!check.ok) throw std::logic_error("solver produced an invalid colouring");
    }
    return out;
}

Hypergraph3 gadget_reduce(const Hypergraph3& h) {
    std::vector<std::array<int, 3>> edges = h.edges;
    edges.reserve(edges.size() + h.vertex_count);
    for (int x = 1; x <= h.vertex_count; ++x)
        edges.push_back({x, x, x + h.vertex_count});
    return Hypergraph3(2 * h.vertex_count, std::move(edges));
}

PlantedInstance plant_lo2(int vertex_count, int edge_count, std::uint64_t seed) {
    if (vertex_count < 3) throw std::invalid_argument("planting needs >= 3 vertices");
    if (edge_count < 0) throw std::invalid_argument("negative edge count");
    std::mt19937_64 rng(seed);
    PlantedInstance out;

    std::vector<int> ones, zeros;
    do {  // need one planted-1 and two distinct planted-0 endpoints
        ones.clear();
        zeros.clear();
        for (int v = 1; v <= vertex_count; ++v)
            (rng() & 1 ? ones : zeros).push_back(v);
    } while (ones.empty() || zeros.size() < 2);

    out.plant.assign(vertex_count, 0);
    for (int v : ones) out.plant[v - 1] = 1;

    const auto pick = [&rng](const std::vector<int>& pool) {
        return pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    };
    std::vector<std::array<int, 3>> edges;
    edges.reserve(edge_count);
    for (int i = 0; i < edge_count; ++i) {
        const int one = pick(ones);
        const int za = pick(zeros);
        int zb = za;
        while (zb == za) zb = pick(zeros);
        edges.push_back({one, za, zb});
    }
    out.graph = Hypergraph3(vertex_count, std::move(edges));
    if (!verify_lo(out.graph, 2, out.plant).ok)
        throw std::logic_error("planted assignment does not verify");
    return out;
}

std::string encode_instance(const Hypergraph3& h) {
    std::ostringstream os;
    os << "p hlo " << h.vertex_count << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges)
        os << "e " << e[0] << ' ' << e[1] << ' ' << e[2] << '\n';
    return os.str();
}

Hypergraph3 decode_instance(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::string p, hlo;
    int v = -1;
    long m = -1;
    if (!(is >> p >> hlo >> v >> m) || p != "p" || hlo != "hlo" || v < 0 || m < 0)
        throw ParseError(ParseError::Kind::Header, "expected 'p hlo <V> <m>' header");
    std::vector<std::array<int, 3>> edges;
    edges.reserve(m);
    for (long i = 0; i < m; ++i) {
        std::string e;
        std::array<int, 3> t{};
        if (!(is >> e >> t[0] >> t[1] >> t[2]) || e != "e")
            throw ParseError(ParseError::Kind::Length, "expected 'e u v w' line");
        edges.push_back(t);
    }
    std::string extra;
    if (is >> extra)
        throw ParseError(ParseError::Kind::Length, "trailing content after edges");
    return Hypergraph3(v, std::move(edges));
}

std::string encode_assignment(const Assignment& a) {
    std::ostringstream os;
    os << 'a';
    for (int c : a) os << ' ' << c;
    os << '\n';
    return os.str();
}

Assignment decode_assignment(std::string_view line) {
    std::istringstream is{std::string(line)};
    std::string a;
    if (!(is >> a) || a != "a")
        throw ParseError(ParseError::Kind::Header, "expected 'a c1 ... cV' line");
    Assignment out;
    int c;
    while (is >> c) out.push_back(c);
    if (!is.eof())
        throw ParseError(ParseError::Kind::Digit, "non-integer colour in assignment");
    return out;
}

}  // namespace lolab
