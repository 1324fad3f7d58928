#include "lolab/relations.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace lolab {

Relation3::Relation3(int domain_size, const std::vector<std::array<int, 3>>& triples,
                     bool symmetric)
    : d_(domain_size), symmetric_(symmetric) {
    if (domain_size < 1) throw std::invalid_argument("domain size must be positive");
    member_.assign(static_cast<std::size_t>(d_) * d_ * d_, 0);
    for (const auto& t : triples) {
        for (int v : t)
            if (v < 0 || v >= d_)
                throw std::invalid_argument("triple entry outside domain");
        char& slot = member_[(t[0] * d_ + t[1]) * d_ + t[2]];
        if (!slot) {
            slot = 1;
            ++count_;
        }
    }
    if (symmetric) {
        for (int a = 0; a < d_; ++a)
            for (int b = 0; b < d_; ++b)
                for (int c = 0; c < d_; ++c) {
                    const bool m = contains(a, b, c);
                    if (m != contains(a, c, b) || m != contains(b, a, c) ||
                        m != contains(b, c, a) || m != contains(c, a, b) ||
                        m != contains(c, b, a))
                        throw std::invalid_argument(
                            "relation marked symmetric is not symmetric");
                }
    }
}

std::vector<std::array<int, 3>> Relation3::triples() const {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < d_; ++a)
        for (int b = 0; b < d_; ++b)
            for (int c = 0; c < d_; ++c)
                if (contains(a, b, c)) out.push_back({a, b, c});
    return out;
}

Relation3 lo_relation(int k) {
    if (k < 2) throw std::invalid_argument("lo_relation requires k >= 2");
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c) {
                const int mx = std::max({a, b, c});
                const int occ = (a == mx) + (b == mx) + (c == mx);
                if (occ == 1) triples.push_back({a, b, c});
            }
    return Relation3(k, triples, true);
}

Relation3 nae_relation(int k) {
    if (k < 2) throw std::invalid_argument("nae_relation requires k >= 2");
    std::vector<std::array<int, 3>> triples;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (!(a == b && b == c)) triples.push_back({a, b, c});
    return Relation3(k, triples, true);
}

const Relation3& lo_cached(int k) {
    static std::mutex mu;
    static std::map<int, Relation3> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, lo_relation(k)).first;
    return it->second;
}

namespace {

// Iterative DFS with colour marking; returns true if a directed cycle
// (or loop) is reachable.
bool has_cycle(int d, const std::vector<std::vector<int>>& adj) {
    enum { White, Grey, Black };
    std::vector<int> colour(d, White);
    std::vector<std::pair<int, std::size_t>> stack;
    for (int root = 0; root < d; ++root) {
        if (colour[root] != White) continue;
        colour[root] = Grey;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < adj[v].size()) {
                const int w = adj[v][next++];
                if (colour[w] == Grey) return true;
                if (colour[w] == White) {
                    colour[w] = Grey;
                    stack.emplace_back(w, 0);
                }
            } else {
                colour[v] = Black;
                stack.pop_back();
            }
        }
    }
    return false;
}

}  // namespace

ZCheckResult z_check(const Relation3& rel) {
    const int d = rel.domain_size();
    if (d > 16) throw std::invalid_argument("z_check supports domains up to 16");
    ZCheckResult res;
    std::vector<std::vector<int>> adj(d);
    bool loop = false;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y)
            if (rel.contains(x, x, y)) {
                res.edges.emplace_back(x, y);
                adj[x].push_back(y);
                if (x == y) loop = true;
            }
    res.verdict = (loop || has_cycle(d, adj)) ? ZVerdict::Inconclusive
                                              : ZVerdict::NoHomToZTarget;
    return res;
}

}  // namespace lolab
