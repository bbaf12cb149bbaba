#ifndef FIRM_PATTERN_HPP
#define FIRM_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "firm/detail/bitset.hpp"
#include "firm/matrix.hpp"
#include "firm/verdict.hpp"

namespace firm {

namespace detail {

// Backtracking search for an injective embedding of a pattern into a host up
// to row and column permutation. Entries must match exactly after mapping, so
// '?' host cells never match a standard pattern.
class PatternMatcher {
public:
    PatternMatcher(const GenBinMatrix& host, const GenBinMatrix& pat)
        : host_(host), pat_(pat) {}

    std::optional<PatternEmbedding> run() {
        if (pat_.rows() > host_.rows() || pat_.cols() > host_.cols()) return std::nullopt;
        std::vector<SmallBitset> col_cand(static_cast<std::size_t>(pat_.cols()),
                                          SmallBitset(host_.cols()));
        for (int j = 0; j < pat_.cols(); ++j)
            for (int c = 0; c < host_.cols(); ++c)
                col_cand[static_cast<std::size_t>(j)].set(c);
        row_map_.clear();
        used_rows_.assign(static_cast<std::size_t>(host_.rows()), false);
        if (dfs(0, col_cand)) {
            PatternEmbedding emb;
            emb.row_map = row_map_;
            emb.col_map = col_map_;
            return emb;
        }
        return std::nullopt;
    }

private:
    bool dfs(int pi, const std::vector<SmallBitset>& col_cand) {
        if (pi == pat_.rows()) return match_columns(col_cand);
        for (int h = 0; h < host_.rows(); ++h) {
            if (used_rows_[static_cast<std::size_t>(h)]) continue;
            std::vector<SmallBitset> next = col_cand;
            bool feasible = true;
            for (int j = 0; j < pat_.cols() && feasible; ++j) {
                SmallBitset& cand = next[static_cast<std::size_t>(j)];
                for (int c = cand.first_set(); c >= 0; c = cand.next_set(c))
                    if (host_.at(h, c) != pat_.at(pi, j)) cand.reset(c);
                feasible = cand.any();
            }
            if (!feasible) continue;
            used_rows_[static_cast<std::size_t>(h)] = true;
            row_map_.push_back(h);
            if (dfs(pi + 1, next)) return true;
            row_map_.pop_back();
            used_rows_[static_cast<std::size_t>(h)] = false;
        }
        return false;
    }

    // Kuhn matching of pattern columns to distinct host columns.
    bool match_columns(const std::vector<SmallBitset>& col_cand) {
        std::vector<int> owner(static_cast<std::size_t>(host_.cols()), -1);
        for (int j = 0; j < pat_.cols(); ++j) {
            std::vector<bool> visited(static_cast<std::size_t>(host_.cols()), false);
            if (!augment(j, col_cand, owner, visited)) return false;
        }
        col_map_.assign(static_cast<std::size_t>(pat_.cols()), -1);
        for (int c = 0; c < host_.cols(); ++c)
            if (owner[static_cast<std::size_t>(c)] >= 0)
                col_map_[static_cast<std::size_t>(owner[static_cast<std::size_t>(c)])] = c;
        return true;
    }

    bool augment(int j, const std::vector<SmallBitset>& col_cand, std::vector<int>& owner,
                 std::vector<bool>& visited) {
        const SmallBitset& cand = col_cand[static_cast<std::size_t>(j)];
        for (int c = cand.first_set(); c >= 0; c = cand.next_set(c)) {
            if (visited[static_cast<std::size_t>(c)]) continue;
            visited[static_cast<std::size_t>(c)] = true;
            if (owner[static_cast<std::size_t>(c)] < 0 ||
                augment(owner[static_cast<std::size_t>(c)], col_cand, owner, visited)) {
                owner[static_cast<std::size_t>(c)] = j;
                return true;
            }
        }
        return false;
    }

    const GenBinMatrix& host_;
    const GenBinMatrix& pat_;
    std::vector<int> row_map_;
    std::vector<int> col_map_;
    std::vector<bool> used_rows_;
};

} // namespace detail

inline std::optional<PatternEmbedding> find_pattern(const GenBinMatrix& host,
                                                    const GenBinMatrix& pattern,
                                                    const std::string& name = "") {
    require_standard(pattern, "find_pattern (pattern argument)");
    auto emb = detail::PatternMatcher(host, pattern).run();
    if (emb) emb->pattern = name;
    return emb;
}

// Does the host contain the pattern as a submatrix, up to row and column
// permutation? The embedding is the witness when it does.
inline PropertyVerdict contains_pattern(const GenBinMatrix& host,
                                        const GenBinMatrix& pattern,
                                        const std::string& name = "") {
    if (auto emb = find_pattern(host, pattern, name)) return {true, Witness(*emb)};
    return {false, std::nullopt};
}

} // namespace firm

#endif
