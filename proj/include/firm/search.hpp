#ifndef FIRM_SEARCH_HPP
#define FIRM_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "firm/canonical.hpp"
#include "firm/certify.hpp"
#include "firm/matrix.hpp"
#include "firm/solvers.hpp"

namespace firm {

struct SearchOptions {
    int max_rows = 4;
    int max_cols = 4;
    bool include_transpose = true;
    std::uint64_t enumeration_budget = 50'000'000; // matrices examined
    FirmnessOptions firmness{};
};

struct MnfHit {
    std::string key;
    GenBinMatrix representative;
    int isolation = 0;
    int boolean_rank = 0;
};

struct SearchReport {
    int max_rows = 0;
    int max_cols = 0;
    bool include_transpose = true;
    std::vector<std::pair<int, int>> dims_scanned;
    std::uint64_t matrices_enumerated = 0;
    std::uint64_t classes_seen = 0;
    std::uint64_t classes_certified = 0; // classes that reached the full mnf check
    std::vector<MnfHit> hits;            // sorted by canonical key
    bool complete = true;
    double seconds = 0.0;
};

namespace detail {

// Every matrix is row-permutation equivalent to one whose row values are
// non-decreasing, so enumerating those and deduplicating by canonical key
// visits each equivalence class exactly once.
template <typename Fn>
bool enumerate_classes(int rows, int cls, bool include_transpose,
                       std::uint64_t budget, std::uint64_t& enumerated,
                       std::unordered_set<std::string>& seen, Fn&& fn) {
    const std::uint32_t value_count = std::uint32_t{1} << cls;
    std::vector<std::uint32_t> rv(static_cast<std::size_t>(rows), 0);
    for (;;) {
        if (++enumerated > budget) return false;
        GenBinMatrix m(rows, cls);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cls; ++c)
                if (rv[static_cast<std::size_t>(r)] & (std::uint32_t{1} << c))
                    m.set(r, c, Entry::One);
        std::string key = canonical_key(m, include_transpose);
        if (seen.insert(key).second) fn(key);
        // Next non-decreasing row-value sequence.
        int i = rows - 1;
        while (i >= 0 && rv[static_cast<std::size_t>(i)] == value_count - 1) --i;
        if (i < 0) return true;
        const std::uint32_t v = rv[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < rows; ++j) rv[static_cast<std::size_t>(j)] = v;
    }
}

} // namespace detail

// Visit one representative per canonical class of rows x cols matrices.
// Returns false if the enumeration budget ran out.
inline bool for_each_canonical_class(int rows, int cols, bool include_transpose,
                                     std::uint64_t budget, std::uint64_t& enumerated,
                                     const std::function<void(const std::string&,
                                                              const GenBinMatrix&)>& fn) {
    std::unordered_set<std::string> seen;
    return detail::enumerate_classes(rows, cols, include_transpose, budget, enumerated, seen,
                                     [&fn](const std::string& key) {
                                         fn(key, matrix_from_key(key));
                                     });
}

// Exhaustive minimally-non-firm search over all canonical classes of
// matrices up to max_rows x max_cols.
inline SearchReport search_mnf(const SearchOptions& opts, FirmnessCache* cache = nullptr) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport report;
    report.max_rows = opts.max_rows;
    report.max_cols = opts.max_cols;
    report.include_transpose = opts.include_transpose;
    FirmnessCache* fc = cache ? cache : &shared_firmness_cache();

    std::unordered_set<std::string> seen;
    std::uint64_t enumerated = 0;
    bool complete = true;
    for (int r = 1; r <= opts.max_rows && complete; ++r) {
        for (int c = 1; c <= opts.max_cols && complete; ++c) {
            if (opts.include_transpose && c < r && c <= opts.max_rows && r <= opts.max_cols)
                continue; // the transposed orientation is scanned instead
            report.dims_scanned.push_back({r, c});
            complete = detail::enumerate_classes(
                r, c, opts.include_transpose, opts.enumeration_budget, enumerated, seen,
                [&report, &opts, fc](const std::string& key) {
                    ++report.classes_seen;
                    GenBinMatrix rep = matrix_from_key(key);
                    const int iso = isolation_value(rep);
                    const int rank = boolean_rank_value(rep, iso);
                    if (iso >= rank) return; // firm at the top level, not mnf
                    ++report.classes_certified;
                    if (is_mnf(rep, opts.firmness, fc).holds)
                        report.hits.push_back({key, rep, iso, rank});
                });
        }
    }
    report.matrices_enumerated = enumerated;
    report.complete = complete;
    std::sort(report.hits.begin(), report.hits.end(),
              [](const MnfHit& a, const MnfHit& b) { return a.key < b.key; });
    report.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace firm

#endif
