#ifndef FIRM_SOLVERS_HPP
#define FIRM_SOLVERS_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "firm/cover_graph.hpp"
#include "firm/matrix.hpp"
#include "firm/rect.hpp"

namespace firm {

// Maximum isolated set, with the set itself as the certificate.
struct IsolationCertificate {
    int value = 0;
    std::vector<Position> positions;
};

// Minimum rectangle cover of the 1s ('?' entries need no cover).
struct CoverCertificate {
    int value = 0;
    std::vector<Rectangle> rectangles;
};

namespace detail {

// Branch-and-bound maximum independent set over bitset adjacency. The bound
// is a greedy clique cover of the candidate set; branching picks the highest
// degree candidate.
class MisSolver {
public:
    explicit MisSolver(const std::vector<SmallBitset>& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())) {}

    int max_size(const SmallBitset& cand, int stop_at = -1) {
        best_ = 0;
        stop_at_ = stop_at;
        search(cand, 0);
        return best_;
    }

    bool exists(const SmallBitset& cand, int t) {
        if (t <= 0) return true;
        return max_size(cand, t) >= t;
    }

private:
    int clique_cover_bound(const SmallBitset& cand) const {
        SmallBitset rem = cand;
        int cliques = 0;
        while (rem.any()) {
            ++cliques;
            int v = rem.first_set();
            rem.reset(v);
            SmallBitset pool = rem & adj_[static_cast<std::size_t>(v)];
            while (pool.any()) {
                int u = pool.first_set();
                rem.reset(u);
                pool.reset(u);
                pool &= adj_[static_cast<std::size_t>(u)];
            }
        }
        return cliques;
    }

    void search(const SmallBitset& cand, int cur) {
        if (stop_at_ > 0 && best_ >= stop_at_) return;
        if (!cand.any()) {
            best_ = std::max(best_, cur);
            return;
        }
        if (cur + clique_cover_bound(cand) <= best_) return;
        int v = -1, vdeg = -1;
        for (int u = cand.first_set(); u >= 0; u = cand.next_set(u)) {
            int deg = (adj_[static_cast<std::size_t>(u)] & cand).count();
            if (deg > vdeg) {
                vdeg = deg;
                v = u;
            }
        }
        SmallBitset incl = cand;
        incl.subtract(adj_[static_cast<std::size_t>(v)]);
        incl.reset(v);
        search(incl, cur + 1);
        SmallBitset excl = cand;
        excl.reset(v);
        search(excl, cur);
    }

    const std::vector<SmallBitset>& adj_;
    int n_;
    int best_ = 0;
    int stop_at_ = -1;
};

// Branch-and-bound minimum set cover. Elements are support positions, sets
// are the 1s covered by each maximal rectangle. The lower bound greedily
// collects elements no two of which share a set.
class CoverSolver {
public:
    CoverSolver(std::vector<SmallBitset> set_masks, int universe)
        : sets_(std::move(set_masks)), universe_size_(universe) {
        covering_.assign(static_cast<std::size_t>(universe),
                         SmallBitset(static_cast<int>(sets_.size())));
        for (std::size_t s = 0; s < sets_.size(); ++s)
            for (int e = sets_[s].first_set(); e >= 0; e = sets_[s].next_set(e))
                covering_[static_cast<std::size_t>(e)].set(static_cast<int>(s));
    }

    // Minimum number of sets covering everything, assuming a cover exists.
    int min_cover(int known_lower_bound = 0) {
        best_ = greedy_cover_size();
        floor_ = known_lower_bound;
        std::vector<int> chosen;
        SmallBitset covered(universe_size_);
        search(covered, 0, -1);
        return best_;
    }

    // True iff `budget` sets with indices >= lo can cover the complement of
    // `covered`.
    bool coverable(const SmallBitset& covered, int lo, int budget) {
        found_ = false;
        decide(covered, lo, budget);
        return found_;
    }

private:
    SmallBitset uncovered(const SmallBitset& covered) const {
        SmallBitset u(universe_size_);
        for (int e = 0; e < universe_size_; ++e)
            if (!covered.test(e)) u.set(e);
        return u;
    }

    int greedy_cover_size() const {
        SmallBitset covered(universe_size_);
        int used = 0;
        while (covered.count() < universe_size_) {
            int best_gain = -1;
            std::size_t best_s = 0;
            for (std::size_t s = 0; s < sets_.size(); ++s) {
                SmallBitset gain = sets_[s];
                gain.subtract(covered);
                int g = gain.count();
                if (g > best_gain) {
                    best_gain = g;
                    best_s = s;
                }
            }
            if (best_gain <= 0) break; // uncoverable element; callers prevent this
            covered |= sets_[best_s];
            ++used;
        }
        return used;
    }

    int lower_bound(const SmallBitset& unc, int lo) const {
        SmallBitset rem = unc;
        int lb = 0;
        while (rem.any()) {
            int e = rem.first_set();
            ++lb;
            // Drop every element sharing an eligible covering set with e.
            for (int f = rem.first_set(); f >= 0; f = rem.next_set(f)) {
                SmallBitset common =
                    covering_[static_cast<std::size_t>(e)] & covering_[static_cast<std::size_t>(f)];
                bool shares = false;
                for (int s = common.first_set(); s >= 0; s = common.next_set(s))
                    if (s >= lo) {
                        shares = true;
                        break;
                    }
                if (shares || f == e) rem.reset(f);
            }
        }
        return lb;
    }

    void search(SmallBitset covered, int used, int /*unused*/) {
        if (best_ <= floor_) return;
        SmallBitset unc = uncovered(covered);
        if (unc.none()) {
            best_ = std::min(best_, used);
            return;
        }
        if (used + lower_bound(unc, 0) >= best_) return;
        int e = pick_element(unc, 0);
        if (e < 0) return;
        const SmallBitset& options = covering_[static_cast<std::size_t>(e)];
        for (int s = options.first_set(); s >= 0; s = options.next_set(s)) {
            SmallBitset next = covered;
            next |= sets_[static_cast<std::size_t>(s)];
            search(next, used + 1, -1);
        }
    }

    void decide(const SmallBitset& covered, int lo, int budget) {
        if (found_) return;
        SmallBitset unc = uncovered(covered);
        if (unc.none()) {
            found_ = true;
            return;
        }
        if (budget <= 0) return;
        if (lower_bound(unc, lo) > budget) return;
        int e = pick_element(unc, lo);
        if (e < 0) return;
        const SmallBitset& options = covering_[static_cast<std::size_t>(e)];
        for (int s = options.first_set(); s >= 0 && !found_; s = options.next_set(s)) {
            if (s < lo) continue;
            SmallBitset next = covered;
            next |= sets_[static_cast<std::size_t>(s)];
            decide(next, lo, budget - 1);
        }
    }

    // Most constrained uncovered element: fewest eligible covering sets.
    int pick_element(const SmallBitset& unc, int lo) const {
        int e = -1, emin = -1;
        for (int f = unc.first_set(); f >= 0; f = unc.next_set(f)) {
            int cnt = 0;
            const SmallBitset& opts = covering_[static_cast<std::size_t>(f)];
            for (int s = opts.first_set(); s >= 0; s = opts.next_set(s))
                if (s >= lo) ++cnt;
            if (cnt == 0) return -1; // dead position
            if (emin < 0 || cnt < emin) {
                emin = cnt;
                e = f;
            }
        }
        return e;
    }

    std::vector<SmallBitset> sets_;
    int universe_size_;
    std::vector<SmallBitset> covering_;
    int best_ = 0;
    int floor_ = 0;
    bool found_ = false;
};

inline std::vector<SmallBitset> rectangle_one_masks(const CoverGraph& g,
                                                    const std::vector<Rectangle>& rects) {
    std::vector<SmallBitset> masks;
    masks.reserve(rects.size());
    for (const Rectangle& r : rects) {
        SmallBitset m(g.size());
        for (int v = 0; v < g.size(); ++v)
            if (rectangle_contains(r, g.position(v))) m.set(v);
        masks.push_back(std::move(m));
    }
    return masks;
}

} // namespace detail

inline int isolation_value(const GenBinMatrix& y) {
    CoverGraph g(y);
    if (g.size() == 0) return 0;
    auto adj = detail::graph_adjacency(g);
    detail::SmallBitset all(g.size());
    for (int v = 0; v < g.size(); ++v) all.set(v);
    return detail::MisSolver(adj).max_size(all);
}

inline int boolean_rank_value(const GenBinMatrix& y, int isolation_hint = 0) {
    CoverGraph g(y);
    if (g.size() == 0) return 0;
    auto rects = maximal_rectangles(y);
    auto masks = detail::rectangle_one_masks(g, rects);
    // Value-only solve: drop masks dominated by another mask.
    std::vector<detail::SmallBitset> pruned;
    for (std::size_t i = 0; i < masks.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < masks.size() && !dominated; ++j)
            if (i != j && masks[i].is_subset_of(masks[j]) &&
                (!(masks[j] == masks[i]) || j < i))
                dominated = true;
        if (!dominated) pruned.push_back(masks[i]);
    }
    return detail::CoverSolver(std::move(pruned), g.size()).min_cover(isolation_hint);
}

// Exact maximum isolated set; ties among optima are broken by returning the
// lexicographically least position list.
inline IsolationCertificate isolation_number(const GenBinMatrix& y) {
    CoverGraph g(y);
    IsolationCertificate cert;
    if (g.size() == 0) return cert;
    auto adj = detail::graph_adjacency(g);
    detail::MisSolver solver(adj);
    detail::SmallBitset all(g.size());
    for (int v = 0; v < g.size(); ++v) all.set(v);
    const int k = solver.max_size(all);
    cert.value = k;

    detail::SmallBitset cand = all;
    int last = -1;
    while (static_cast<int>(cert.positions.size()) < k) {
        for (int v = cand.next_set(last); v >= 0; v = cand.next_set(v)) {
            detail::SmallBitset rest = cand;
            rest.subtract(adj[static_cast<std::size_t>(v)]);
            rest.reset(v);
            // Only vertices beyond v keep the output sorted.
            for (int u = rest.first_set(); u >= 0 && u < v; u = rest.next_set(u))
                rest.reset(u);
            if (solver.exists(rest, k - static_cast<int>(cert.positions.size()) - 1)) {
                cert.positions.push_back(g.position(v));
                cand = rest;
                last = v;
                break;
            }
        }
    }
    return cert;
}

// Exact minimum rectangle cover over maximal rectangles (lossless, as every
// rectangle extends to a maximal one); lexicographically least optimal list.
inline CoverCertificate boolean_rank(const GenBinMatrix& y) {
    CoverGraph g(y);
    CoverCertificate cert;
    if (g.size() == 0) return cert;
    auto rects = maximal_rectangles(y);
    auto masks = detail::rectangle_one_masks(g, rects);
    detail::CoverSolver solver(masks, g.size());
    const int k = solver.min_cover(0);
    cert.value = k;

    detail::SmallBitset covered(g.size());
    int lo = 0;
    while (static_cast<int>(cert.rectangles.size()) < k) {
        for (std::size_t s = static_cast<std::size_t>(lo); s < masks.size(); ++s) {
            detail::SmallBitset next = covered;
            next |= masks[s];
            if (solver.coverable(next, static_cast<int>(s) + 1,
                                 k - static_cast<int>(cert.rectangles.size()) - 1)) {
                cert.rectangles.push_back(rects[s]);
                covered = next;
                lo = static_cast<int>(s) + 1;
                break;
            }
        }
    }
    return cert;
}

// Re-checks every certificate invariant from scratch against the matrix.
inline bool verify_certificate(const GenBinMatrix& y, const IsolationCertificate& cert) {
    if (cert.value != static_cast<int>(cert.positions.size())) return false;
    for (const Position& p : cert.positions) {
        if (p.row < 0 || p.row >= y.rows() || p.col < 0 || p.col >= y.cols()) return false;
        if (!y.is_one(p.row, p.col)) return false;
    }
    for (std::size_t a = 0; a < cert.positions.size(); ++a)
        for (std::size_t b = a + 1; b < cert.positions.size(); ++b) {
            const Position p = cert.positions[a], q = cert.positions[b];
            if (p == q) return false;
            if (p.row == q.row || p.col == q.col) return false;
            if (y.nonzero(p.row, q.col) && y.nonzero(q.row, p.col)) return false;
        }
    return true;
}

inline bool verify_certificate(const GenBinMatrix& y, const CoverCertificate& cert) {
    if (cert.value != static_cast<int>(cert.rectangles.size())) return false;
    for (const Rectangle& r : cert.rectangles)
        if (!is_rectangle(y, r)) return false;
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) {
            if (!y.is_one(i, j)) continue;
            bool covered = false;
            for (const Rectangle& r : cert.rectangles)
                covered = covered || rectangle_contains(r, {i, j});
            if (!covered) return false;
        }
    return true;
}

// ---- brute-force oracles ---------------------------------------------------
// Raw enumeration, sharing no machinery with the branch-and-bound solvers:
// isolation by k-subset scan over the support with direct entry tests, rank
// by k-combination scan over independently enumerated maximal rectangles.

struct OracleLimits {
    int max_support = 22;
    int max_rectangles = 24;
};

inline int oracle_isolation(const GenBinMatrix& y, OracleLimits limits = {}) {
    const auto supp = y.support();
    const int s = static_cast<int>(supp.size());
    if (s > limits.max_support)
        throw std::invalid_argument("oracle_isolation: support size over limit");
    auto isolated = [&y](const Position& p, const Position& q) {
        return p.row != q.row && p.col != q.col &&
               (y.is_zero(p.row, q.col) || y.is_zero(q.row, p.col));
    };
    const int kmax = std::min({y.rows(), y.cols(), s});
    for (int k = kmax; k >= 1; --k) {
        // Enumerate k-subsets of the support in lexicographic order.
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            bool ok = true;
            for (int a = 0; a < k && ok; ++a)
                for (int b = a + 1; b < k && ok; ++b)
                    ok = isolated(supp[static_cast<std::size_t>(idx[static_cast<std::size_t>(a)])],
                                  supp[static_cast<std::size_t>(idx[static_cast<std::size_t>(b)])]);
            if (ok) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return 0;
}

inline int oracle_boolean_rank(const GenBinMatrix& y, OracleLimits limits = {}) {
    const auto supp = y.support();
    if (supp.empty()) return 0;
    if (supp.size() > 64)
        throw std::invalid_argument("oracle_boolean_rank: support size over limit");
    // Independent maximal-rectangle enumeration over row subsets.
    const int m = y.rows(), n = y.cols();
    if (m > 20) throw std::invalid_argument("oracle_boolean_rank: too many rows");
    struct Cand {
        std::vector<int> rows, cols;
    };
    std::vector<Cand> cands;
    for (std::uint32_t bits = 1; bits < (1u << m); ++bits) {
        Cand c;
        for (int r = 0; r < m; ++r)
            if (bits & (1u << r)) c.rows.push_back(r);
        for (int j = 0; j < n; ++j) {
            bool all = true;
            for (int r : c.rows) all = all && y.nonzero(r, j);
            if (all) c.cols.push_back(j);
        }
        if (c.cols.empty()) continue;
        bool has_one = false;
        for (int r : c.rows)
            for (int j : c.cols) has_one = has_one || y.is_one(r, j);
        if (has_one) cands.push_back(std::move(c));
    }
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<Cand> maximal;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < cands.size() && !dominated; ++j)
            if (i != j && subset(cands[i].rows, cands[j].rows) &&
                subset(cands[i].cols, cands[j].cols))
                dominated = true;
        if (!dominated) maximal.push_back(cands[i]);
    }
    const int rcount = static_cast<int>(maximal.size());
    if (rcount > limits.max_rectangles)
        throw std::invalid_argument("oracle_boolean_rank: too many maximal rectangles");

    // Coverage masks over support indices.
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(rcount), 0);
    for (int r = 0; r < rcount; ++r)
        for (std::size_t v = 0; v < supp.size(); ++v) {
            const Position p = supp[v];
            bool in_rows = std::binary_search(maximal[static_cast<std::size_t>(r)].rows.begin(),
                                              maximal[static_cast<std::size_t>(r)].rows.end(), p.row);
            bool in_cols = std::binary_search(maximal[static_cast<std::size_t>(r)].cols.begin(),
                                              maximal[static_cast<std::size_t>(r)].cols.end(), p.col);
            if (in_rows && in_cols) masks[static_cast<std::size_t>(r)] |= (1ull << v);
        }
    const std::uint64_t full = supp.size() == 64 ? ~0ull : (1ull << supp.size()) - 1;
    const int kmax = std::min({m, n, rcount});
    for (int k = 1; k <= kmax; ++k) {
        std::vector<int> idx(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            std::uint64_t u = 0;
            for (int i = 0; i < k; ++i) u |= masks[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (u == full) return k;
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == rcount - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return kmax; // unreachable for consistent inputs
}

} // namespace firm

#endif
