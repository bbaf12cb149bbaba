#ifndef FIRM_COVER_GRAPH_HPP
#define FIRM_COVER_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <queue>
#include <vector>

#include "firm/detail/bitset.hpp"
#include "firm/errors.hpp"
#include "firm/matrix.hpp"
#include "firm/verdict.hpp"

namespace firm {

// Rectangle cover graph: one vertex per 1 of the matrix (row-major order),
// edges between 1s that share a rectangle. Two 1s share a rectangle iff they
// share a row, share a column, or both cross entries are non-zero.
class CoverGraph {
public:
    explicit CoverGraph(const GenBinMatrix& y) : verts_(y.support()) {
        const int n = static_cast<int>(verts_.size());
        adj_.assign(static_cast<std::size_t>(n), detail::SmallBitset(n));
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                const Position a = verts_[static_cast<std::size_t>(u)];
                const Position b = verts_[static_cast<std::size_t>(v)];
                bool share = a.row == b.row || a.col == b.col ||
                             (y.nonzero(a.row, b.col) && y.nonzero(b.row, a.col));
                if (share) {
                    adj_[static_cast<std::size_t>(u)].set(v);
                    adj_[static_cast<std::size_t>(v)].set(u);
                }
            }
    }

    int size() const { return static_cast<int>(verts_.size()); }
    Position position(int v) const { return verts_[static_cast<std::size_t>(v)]; }
    const std::vector<Position>& positions() const { return verts_; }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].test(v); }
    const detail::SmallBitset& neighbors(int v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    int index_of(Position p) const {
        for (int v = 0; v < size(); ++v)
            if (verts_[static_cast<std::size_t>(v)] == p) return v;
        return -1;
    }

    std::vector<detail::SmallBitset> complement_adjacency() const {
        const int n = size();
        std::vector<detail::SmallBitset> out(static_cast<std::size_t>(n),
                                             detail::SmallBitset(n));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && !adjacent(u, v)) out[static_cast<std::size_t>(u)].set(v);
        return out;
    }

private:
    std::vector<Position> verts_;
    std::vector<detail::SmallBitset> adj_;
};

inline CoverGraph build_graph(const GenBinMatrix& y) { return CoverGraph(y); }

struct SearchBudget {
    std::uint64_t max_expansions = 10'000'000;
};

namespace detail {

inline std::vector<std::vector<int>> all_pairs_bfs(const std::vector<SmallBitset>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                       std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[static_cast<std::size_t>(s)];
        d[static_cast<std::size_t>(s)] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const auto& nb = adj[static_cast<std::size_t>(u)];
            for (int v = nb.first_set(); v >= 0; v = nb.next_set(v))
                if (d[static_cast<std::size_t>(v)] < 0) {
                    d[static_cast<std::size_t>(v)] = d[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
        }
    }
    return dist;
}

// Exact search for an induced chordless cycle of one of the given lengths
// (tried in the given order). Cycles are rooted at their minimum vertex and
// explored in lexicographic order, so the first cycle found for the smallest
// feasible length is the lexicographically least witness of that length.
class InducedCycleSearch {
public:
    InducedCycleSearch(std::vector<SmallBitset> adj, SearchBudget budget)
        : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())),
          budget_(budget.max_expansions), dist_(all_pairs_bfs(adj_)) {}

    std::optional<std::vector<int>> find(const std::vector<int>& lengths) {
        for (int len : lengths) {
            if (len > n_) continue;
            target_ = len;
            for (int s = 0; s < n_; ++s) {
                path_.clear();
                path_.push_back(s);
                if (dfs()) return path_;
            }
        }
        return std::nullopt;
    }

private:
    bool dfs() {
        const int k = static_cast<int>(path_.size());
        const int start = path_.front();
        const int last = path_.back();
        const auto& cand = adj_[static_cast<std::size_t>(last)];
        for (int u = cand.next_set(start); u >= 0; u = cand.next_set(u)) {
            if (++expansions_ > budget_)
                throw budget_exceeded_error("induced cycle search budget exceeded");
            if (on_path(u)) continue;
            // The cycle must still be closable from u.
            if (dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(start)] < 0 ||
                dist_[static_cast<std::size_t>(u)][static_cast<std::size_t>(start)] > target_ - k)
                continue;
            int back_edges = 0;
            bool chord = false;
            for (int i = 0; i + 1 < k && !chord; ++i)
                if (adj_[static_cast<std::size_t>(u)].test(path_[static_cast<std::size_t>(i)])) {
                    if (i == 0 && k + 1 == target_)
                        ++back_edges; // closing edge to the root
                    else
                        chord = true;
                }
            if (chord) continue;
            if (k + 1 == target_) {
                if (back_edges == 0) continue;       // cycle does not close
                if (path_[1] > u) continue;          // canonical direction only
                path_.push_back(u);
                return true;
            }
            path_.push_back(u);
            if (dfs()) return true;
            path_.pop_back();
        }
        return false;
    }

    bool on_path(int u) const {
        for (int v : path_)
            if (v == u) return true;
        return false;
    }

    std::vector<SmallBitset> adj_;
    int n_;
    std::uint64_t budget_;
    std::uint64_t expansions_ = 0;
    std::vector<std::vector<int>> dist_;
    std::vector<int> path_;
    int target_ = 0;
};

inline std::vector<SmallBitset> graph_adjacency(const CoverGraph& g) {
    std::vector<SmallBitset> adj;
    adj.reserve(static_cast<std::size_t>(g.size()));
    for (int v = 0; v < g.size(); ++v) adj.push_back(g.neighbors(v));
    return adj;
}

inline HoleWitness to_witness(const CoverGraph& g, const std::vector<int>& cycle,
                              bool antihole) {
    HoleWitness w;
    w.antihole = antihole;
    for (int v : cycle) w.cycle.push_back(g.position(v));
    return w;
}

} // namespace detail

// Shortest odd hole (length >= 5), or nullopt. Ties broken by reporting the
// lexicographically least witness in vertex (row-major position) order.
inline std::optional<HoleWitness> find_odd_hole(const CoverGraph& g,
                                                SearchBudget budget = {}) {
    std::vector<int> lengths;
    for (int len = 5; len <= g.size(); len += 2) lengths.push_back(len);
    detail::InducedCycleSearch search(detail::graph_adjacency(g), budget);
    if (auto cycle = search.find(lengths))
        return detail::to_witness(g, *cycle, false);
    return std::nullopt;
}

// Induced cycle of one exact length (used for the 5-hole characterisation).
inline std::optional<HoleWitness> find_hole_of_length(const CoverGraph& g, int length,
                                                      SearchBudget budget = {}) {
    detail::InducedCycleSearch search(detail::graph_adjacency(g), budget);
    if (auto cycle = search.find({length}))
        return detail::to_witness(g, *cycle, false);
    return std::nullopt;
}

// Shortest odd antihole of size >= 7 (a 5-antihole is a 5-hole, so size 5 is
// excluded); searched as an odd hole of the complement graph.
inline std::optional<HoleWitness> find_odd_antihole(const CoverGraph& g,
                                                    SearchBudget budget = {}) {
    std::vector<int> lengths;
    for (int len = 7; len <= g.size(); len += 2) lengths.push_back(len);
    detail::InducedCycleSearch search(g.complement_adjacency(), budget);
    if (auto cycle = search.find(lengths))
        return detail::to_witness(g, *cycle, true);
    return std::nullopt;
}

// Perfect iff no odd hole and no odd antihole.
inline PropertyVerdict is_perfect(const CoverGraph& g, SearchBudget budget = {}) {
    if (auto hole = find_odd_hole(g, budget)) return verdict_false(*hole);
    if (auto anti = find_odd_antihole(g, budget)) return verdict_false(*anti);
    return verdict_true();
}

// Plain text edge list, one edge per line, vertices printed as "r,c"
// (1-based). Degree-zero vertices appear on their own line.
inline void write_edge_list(const CoverGraph& g, std::ostream& os) {
    auto print = [&os, &g](int v) {
        const Position p = g.position(v);
        os << p.row + 1 << ',' << p.col + 1;
    };
    for (int v = 0; v < g.size(); ++v) {
        if (g.neighbors(v).none()) {
            print(v);
            os << '\n';
        }
    }
    for (int u = 0; u < g.size(); ++u)
        for (int v = u + 1; v < g.size(); ++v)
            if (g.adjacent(u, v)) {
                print(u);
                os << ' ';
                print(v);
                os << '\n';
            }
}

} // namespace firm

#endif
