#ifndef FIRM_CERTIFY_HPP
#define FIRM_CERTIFY_HPP

#include <bit>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "firm/canonical.hpp"
#include "firm/cover_graph.hpp"
#include "firm/families.hpp"
#include "firm/matrix.hpp"
#include "firm/pattern.hpp"
#include "firm/solvers.hpp"
#include "firm/verdict.hpp"

namespace firm {

struct FirmnessOptions {
    int max_ones = 64; // budget on the support size of the queried matrix
};

// Canonical-class verdict cache shared across firmness queries. Writers for
// one key always compute the same value, so last-writer-wins is safe.
class FirmnessCache {
public:
    std::optional<bool> lookup(const std::string& key) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void store(const std::string& key, bool firm) {
        std::lock_guard<std::mutex> lock(mutex_);
        map_[key] = firm;
    }

    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mutex_);
        return map_.size();
    }

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, bool> map_;
};

inline FirmnessCache& shared_firmness_cache() {
    static FirmnessCache cache;
    return cache;
}

namespace detail {

// Firmness of every submatrix, explored by single line deletions (every
// submatrix is reachable that way) and memoized per index-set pair. Small
// subproblems are additionally shared across queries by canonical class.
class FirmnessEngine {
public:
    FirmnessEngine(const GenBinMatrix& top, FirmnessCache* cache)
        : top_(top), cache_(cache) {}

    std::uint32_t full_rows() const { return low_bits(top_.rows()); }
    std::uint32_t full_cols() const { return low_bits(top_.cols()); }

    bool firm(std::uint32_t rm, std::uint32_t cm) {
        if (std::popcount(rm) == 1 || std::popcount(cm) == 1) return true;
        const std::uint64_t key = (static_cast<std::uint64_t>(rm) << 32) | cm;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const GenBinMatrix sub = materialize(rm, cm);
        std::string class_key;
        if (cache_ && std::min(sub.rows(), sub.cols()) <= 6) {
            class_key = canonical_key(sub, true);
            if (auto hit = cache_->lookup(class_key)) {
                memo_.emplace(key, *hit);
                return *hit;
            }
        }

        bool result = values_equal(sub);
        if (result) result = children_firm(rm, cm);

        memo_.emplace(key, result);
        if (!class_key.empty()) cache_->store(class_key, result);
        return result;
    }

    bool children_firm(std::uint32_t rm, std::uint32_t cm) {
        if (std::popcount(rm) > 1)
            for (std::uint32_t bit = rm; bit;) {
                std::uint32_t b = bit & (~bit + 1);
                bit ^= b;
                if (!firm(rm ^ b, cm)) return false;
            }
        if (std::popcount(cm) > 1)
            for (std::uint32_t bit = cm; bit;) {
                std::uint32_t b = bit & (~bit + 1);
                bit ^= b;
                if (!firm(rm, cm ^ b)) return false;
            }
        return true;
    }

    // Smallest non-firm submatrix below (rm, cm): descend into non-firm
    // children until every child is firm; that node itself has i < br.
    std::pair<std::vector<int>, std::vector<int>> minimal_failing(std::uint32_t rm,
                                                                  std::uint32_t cm) {
        for (;;) {
            bool descended = false;
            if (std::popcount(rm) > 1)
                for (std::uint32_t bit = rm; bit && !descended;) {
                    std::uint32_t b = bit & (~bit + 1);
                    bit ^= b;
                    if (!firm(rm ^ b, cm)) {
                        rm ^= b;
                        descended = true;
                    }
                }
            if (!descended && std::popcount(cm) > 1)
                for (std::uint32_t bit = cm; bit && !descended;) {
                    std::uint32_t b = bit & (~bit + 1);
                    bit ^= b;
                    if (!firm(rm, cm ^ b)) {
                        cm ^= b;
                        descended = true;
                    }
                }
            if (!descended) return {indices(rm), indices(cm)};
        }
    }

    GenBinMatrix materialize(std::uint32_t rm, std::uint32_t cm) const {
        return submatrix(top_, indices(rm), indices(cm));
    }

    static std::vector<int> indices(std::uint32_t mask) {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (mask & (std::uint32_t{1} << i)) out.push_back(i);
        return out;
    }

private:
    static std::uint32_t low_bits(int n) {
        return n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
    }

    static bool values_equal(const GenBinMatrix& sub) {
        if (sub.support_size() == 0) return true;
        const int iso = isolation_value(sub);
        return boolean_rank_value(sub, iso) == iso;
    }

    const GenBinMatrix& top_;
    FirmnessCache* cache_;
    std::unordered_map<std::uint64_t, bool> memo_;
};

inline void check_firmness_budget(const GenBinMatrix& y, const FirmnessOptions& opts,
                                  const char* what) {
    if (y.rows() > 32 || y.cols() > 32)
        throw budget_exceeded_error(std::string(what) + ": matrix larger than 32x32");
    if (y.support_size() > opts.max_ones)
        throw budget_exceeded_error(std::string(what) + ": support size " +
                                    std::to_string(y.support_size()) + " over budget " +
                                    std::to_string(opts.max_ones));
}

} // namespace detail

// Firm: i = br for the matrix and every submatrix. Witness on failure is a
// minimal submatrix with i < br.
inline PropertyVerdict is_firm(const GenBinMatrix& y, const FirmnessOptions& opts = {},
                               FirmnessCache* cache = nullptr) {
    detail::check_firmness_budget(y, opts, "is_firm");
    detail::FirmnessEngine engine(y, cache ? cache : &shared_firmness_cache());
    if (engine.firm(engine.full_rows(), engine.full_cols())) return verdict_true();
    auto [rows, cols] = engine.minimal_failing(engine.full_rows(), engine.full_cols());
    return verdict_false(SubmatrixWitness{std::move(rows), std::move(cols), {}});
}

// Minimally non-firm: i < br but every proper submatrix is firm.
inline PropertyVerdict is_mnf(const GenBinMatrix& y, const FirmnessOptions& opts = {},
                              FirmnessCache* cache = nullptr) {
    detail::check_firmness_budget(y, opts, "is_mnf");
    const int iso = isolation_value(y);
    const int rank = boolean_rank_value(y, iso);
    if (iso == rank) return verdict_false(ValueWitness{iso, rank});
    detail::FirmnessEngine engine(y, cache ? cache : &shared_firmness_cache());
    if (engine.children_firm(engine.full_rows(), engine.full_cols()))
        return {true, Witness(ValueWitness{iso, rank})};
    auto [rows, cols] = engine.minimal_failing(engine.full_rows(), engine.full_cols());
    return verdict_false(SubmatrixWitness{std::move(rows), std::move(cols), {}});
}

// Superfirm iff the rectangle cover graph has no odd hole.
inline PropertyVerdict is_superfirm(const GenBinMatrix& x, SearchBudget budget = {}) {
    require_standard(x, "is_superfirm");
    if (auto hole = find_odd_hole(build_graph(x), budget)) return verdict_false(*hole);
    return verdict_true();
}

namespace detail {

inline std::vector<int> erased(int n, int skip) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) - 1);
    for (int i = 0; i < n; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

inline std::vector<int> iota_vec(int n) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.push_back(i);
    return out;
}

} // namespace detail

// Minimally non-superfirm: not superfirm, every proper submatrix superfirm.
// Single line deletions suffice since superfirmness is hereditary.
inline PropertyVerdict is_mnsf(const GenBinMatrix& x, SearchBudget budget = {}) {
    require_standard(x, "is_mnsf");
    auto own_hole = find_odd_hole(build_graph(x), budget);
    if (!own_hole) return {false, std::nullopt}; // superfirm
    auto check_child = [&x, budget](const std::vector<int>& rows,
                                    const std::vector<int>& cols)
        -> std::optional<SubmatrixWitness> {
        GenBinMatrix sub = submatrix(x, rows, cols);
        if (auto hole = find_odd_hole(build_graph(sub), budget)) {
            SubmatrixWitness w{rows, cols, {}};
            for (const Position& p : hole->cycle)
                w.cycle.push_back({rows[static_cast<std::size_t>(p.row)],
                                   cols[static_cast<std::size_t>(p.col)]});
            return w;
        }
        return std::nullopt;
    };
    if (x.rows() > 1)
        for (int r = 0; r < x.rows(); ++r)
            if (auto w = check_child(detail::erased(x.rows(), r), detail::iota_vec(x.cols())))
                return verdict_false(*w);
    if (x.cols() > 1)
        for (int c = 0; c < x.cols(); ++c)
            if (auto w = check_child(detail::iota_vec(x.rows()), detail::erased(x.cols(), c)))
                return verdict_false(*w);
    return {true, Witness(*own_hole)};
}

// Totally balanced iff the bipartite incidence graph has no induced cycle of
// length six or more; such a cycle is exactly a cycle-matrix embedding.
inline PropertyVerdict is_totally_balanced(const GenBinMatrix& x, SearchBudget budget = {}) {
    require_standard(x, "is_totally_balanced");
    const int m = x.rows(), n = x.cols();
    std::vector<detail::SmallBitset> adj(static_cast<std::size_t>(m + n),
                                         detail::SmallBitset(m + n));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (x.is_one(r, c)) {
                adj[static_cast<std::size_t>(r)].set(m + c);
                adj[static_cast<std::size_t>(m + c)].set(r);
            }
    std::vector<int> lengths;
    for (int len = 6; len <= m + n; len += 2) lengths.push_back(len);
    detail::InducedCycleSearch search(adj, budget);
    auto cycle = search.find(lengths);
    if (!cycle) return verdict_true();

    const int k = static_cast<int>(cycle->size()) / 2;
    PatternEmbedding emb;
    emb.pattern = "C" + std::to_string(k);
    std::vector<int> cols(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) {
        emb.row_map.push_back((*cycle)[static_cast<std::size_t>(2 * t)]);
        cols[static_cast<std::size_t>(t)] = (*cycle)[static_cast<std::size_t>(2 * t + 1)] - m;
    }
    // Host column for pattern column t is the cycle column preceding row t.
    for (int t = 0; t < k; ++t)
        emb.col_map.push_back(cols[static_cast<std::size_t>((t - 1 + k) % k)]);
    return verdict_false(emb);
}

namespace detail {

struct NamedPattern {
    std::string name;
    GenBinMatrix matrix;
};

inline const std::vector<NamedPattern>& five_hole_patterns() {
    static const std::vector<NamedPattern> patterns = [] {
        std::vector<NamedPattern> p;
        p.push_back({"D4", generate(Family::Dn, 4)});
        p.push_back({"H3", generate(Family::Hn, 3)});
        p.push_back({"H3T", transpose(generate(Family::Hn, 3))});
        p.push_back({"K5", generate(Family::K5)});
        return p;
    }();
    return patterns;
}

} // namespace detail

// Five-hole detection along two independent routes: a direct induced 5-cycle
// search in the cover graph, and containment of one of the four forbidden
// patterns. The routes must agree; disagreement raises an error rather than
// a verdict.
inline PropertyVerdict has_five_hole(const GenBinMatrix& x, SearchBudget budget = {}) {
    require_standard(x, "has_five_hole");
    auto hole = find_hole_of_length(build_graph(x), 5, budget);
    std::optional<PatternEmbedding> emb;
    for (const auto& pat : detail::five_hole_patterns()) {
        emb = find_pattern(x, pat.matrix, pat.name);
        if (emb) break;
    }
    if (hole.has_value() != emb.has_value())
        throw route_disagreement_error(
            "five-hole characterisation violated: direct search and pattern "
            "containment disagree");
    if (hole) return {true, Witness(*hole)};
    return {false, std::nullopt};
}

} // namespace firm

#endif
