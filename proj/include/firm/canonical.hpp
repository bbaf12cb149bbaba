#ifndef FIRM_CANONICAL_HPP
#define FIRM_CANONICAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "firm/matrix.hpp"

namespace firm {

namespace detail {

// Canonical string of the orbit of W under independent row and column
// permutations, where W always has rows() <= cols(). For a fixed row order
// the best column order just sorts the column vectors, so the search space
// is row orders only: full enumeration when rows() <= 6, branch-and-bound
// with a sorted-prefix lower bound otherwise.

inline std::string render_sorted_columns(const std::vector<std::string>& rows_in_order,
                                         int width) {
    const int depth = static_cast<int>(rows_in_order.size());
    std::vector<std::string> cols(static_cast<std::size_t>(width));
    for (int c = 0; c < width; ++c) {
        std::string& col = cols[c];
        col.resize(static_cast<std::size_t>(depth));
        for (int r = 0; r < depth; ++r) col[r] = rows_in_order[r][c];
    }
    std::sort(cols.begin(), cols.end());
    std::string out(static_cast<std::size_t>(depth) * width, '0');
    for (int r = 0; r < depth; ++r)
        for (int c = 0; c < width; ++c)
            out[static_cast<std::size_t>(r) * width + c] = cols[c][r];
    return out;
}

inline std::string min_grid_by_enumeration(std::vector<std::string> rows, int width) {
    std::sort(rows.begin(), rows.end());
    std::string best;
    do {
        std::string cand = render_sorted_columns(rows, width);
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(rows.begin(), rows.end()));
    return best;
}

class GridCanonizer {
public:
    GridCanonizer(std::vector<std::string> rows, int width)
        : width_(width), pool_(std::move(rows)) {
        std::sort(pool_.begin(), pool_.end());
    }

    std::string run() {
        best_ = greedy_seed();
        chosen_.clear();
        dfs();
        return best_;
    }

private:
    // Greedy descent gives the incumbent: at each level take the remaining
    // row whose partial render is smallest.
    std::string greedy_seed() {
        std::vector<std::string> remaining = pool_, order;
        while (!remaining.empty()) {
            std::size_t best_i = 0;
            std::string best_region;
            for (std::size_t i = 0; i < remaining.size(); ++i) {
                if (i > 0 && remaining[i] == remaining[i - 1]) continue;
                order.push_back(remaining[i]);
                std::string region = render_sorted_columns(order, width_);
                order.pop_back();
                if (best_region.empty() || region < best_region) {
                    best_region = region;
                    best_i = i;
                }
            }
            order.push_back(remaining[best_i]);
            remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best_i));
        }
        return render_sorted_columns(order, width_);
    }

    void dfs() {
        if (pool_.empty()) {
            std::string cand = render_sorted_columns(chosen_, width_);
            if (cand < best_) best_ = cand;
            return;
        }
        // Expand distinct remaining rows, most promising region first.
        struct Branch {
            std::string region;
            std::string row;
            std::size_t index;
        };
        std::vector<Branch> branches;
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            if (i > 0 && pool_[i] == pool_[i - 1]) continue;
            chosen_.push_back(pool_[i]);
            branches.push_back({render_sorted_columns(chosen_, width_), pool_[i], i});
            chosen_.pop_back();
        }
        std::sort(branches.begin(), branches.end(),
                  [](const Branch& a, const Branch& b) {
                      return a.region != b.region ? a.region < b.region : a.row < b.row;
                  });
        for (const Branch& b : branches) {
            // The sorted column prefixes bound every completion of this branch
            // from below, so a region beyond the incumbent prefix is dead.
            if (b.region.compare(best_.substr(0, b.region.size())) > 0) continue;
            chosen_.push_back(b.row);
            pool_.erase(pool_.begin() + static_cast<std::ptrdiff_t>(b.index));
            dfs();
            pool_.insert(pool_.begin() + static_cast<std::ptrdiff_t>(b.index), b.row);
            chosen_.pop_back();
        }
    }

    int width_;
    std::vector<std::string> pool_;
    std::vector<std::string> chosen_;
    std::string best_;
};

inline std::string min_grid_string(const GenBinMatrix& w, bool force_branch_and_bound = false) {
    std::vector<std::string> rows;
    rows.reserve(static_cast<std::size_t>(w.rows()));
    for (int r = 0; r < w.rows(); ++r) rows.push_back(w.row_string(r));
    if (w.rows() <= 6 && !force_branch_and_bound)
        return min_grid_by_enumeration(std::move(rows), w.cols());
    return GridCanonizer(std::move(rows), w.cols()).run();
}

} // namespace detail

// Deterministic byte string identifying the matrix up to row and column
// permutation; with include_transpose also up to transposition. The grid part
// is stored with the shorter side as rows, so the permutation search always
// runs on the side of size min(m, n).
inline std::string canonical_key(const GenBinMatrix& y, bool include_transpose = false) {
    auto oriented_key = [](const GenBinMatrix& m) {
        std::string grid = m.rows() <= m.cols()
                               ? detail::min_grid_string(m)
                               : detail::min_grid_string(transpose(m));
        return std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":" + grid;
    };
    std::string key = oriented_key(y);
    if (include_transpose) {
        std::string tkey = oriented_key(transpose(y));
        if (tkey < key) key = tkey;
    }
    return key;
}

// Rebuilds the class representative encoded in a canonical key.
inline GenBinMatrix matrix_from_key(const std::string& key) {
    auto xpos = key.find('x');
    auto colon = key.find(':');
    if (xpos == std::string::npos || colon == std::string::npos || xpos > colon)
        throw std::invalid_argument("malformed canonical key");
    int m = std::stoi(key.substr(0, xpos));
    int n = std::stoi(key.substr(xpos + 1, colon - xpos - 1));
    int gr = std::min(m, n), gc = std::max(m, n);
    const std::string grid = key.substr(colon + 1);
    if (static_cast<int>(grid.size()) != gr * gc)
        throw std::invalid_argument("malformed canonical key grid");
    GenBinMatrix w(gr, gc);
    for (int r = 0; r < gr; ++r)
        for (int c = 0; c < gc; ++c)
            w.set(r, c, entry_from_char(grid[static_cast<std::size_t>(r) * gc + c]));
    return m <= n ? w : transpose(w);
}

inline GenBinMatrix canonical_representative(const GenBinMatrix& y,
                                             bool include_transpose = false) {
    return matrix_from_key(canonical_key(y, include_transpose));
}

} // namespace firm

#endif
