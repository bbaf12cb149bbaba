#ifndef FIRM_VERDICT_HPP
#define FIRM_VERDICT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "firm/matrix.hpp"
#include "firm/rect.hpp"

namespace firm {

// Induced chordless cycle, listed in traversal order. For antihole witnesses
// the adjacency holds in the complement graph.
struct HoleWitness {
    std::vector<Position> cycle;
    bool antihole = false;
};

// Injective row/column maps embedding a pattern matrix into a host matrix up
// to row and column permutation; entries match exactly after mapping.
struct PatternEmbedding {
    std::string pattern;
    std::vector<int> row_map;
    std::vector<int> col_map;
};

// A submatrix of the queried matrix, by absolute index sets; `cycle`, when
// non-empty, is an odd hole of that submatrix's rectangle cover graph in
// absolute coordinates.
struct SubmatrixWitness {
    std::vector<int> rows;
    std::vector<int> cols;
    std::vector<Position> cycle;
};

// Isolation number / Boolean rank of the queried matrix, re-checkable by
// solving from scratch.
struct ValueWitness {
    int isolation = 0;
    int boolean_rank = 0;
};

using Witness = std::variant<SubmatrixWitness, HoleWitness, PatternEmbedding, ValueWitness>;

// Verdict of a certified property. The witness is attached on the
// informative side: a failing firm/superfirm/tb query carries the offending
// structure, a successful containment query carries the embedding.
struct PropertyVerdict {
    bool holds = false;
    std::optional<Witness> witness;
};

inline PropertyVerdict verdict_true() { return {true, std::nullopt}; }

inline PropertyVerdict verdict_false(Witness w) {
    return {false, std::move(w)};
}

} // namespace firm

#endif
