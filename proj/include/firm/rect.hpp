#ifndef FIRM_RECT_HPP
#define FIRM_RECT_HPP

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "firm/detail/bitset.hpp"
#include "firm/matrix.hpp"

namespace firm {

// Index sets are sorted ascending. A rectangle of Y is a submatrix I x J with
// no 0 entries; '?' cells may participate.
struct Rectangle {
    std::vector<int> rows;
    std::vector<int> cols;
    auto operator<=>(const Rectangle&) const = default;
};

inline bool is_rectangle(const GenBinMatrix& y, const Rectangle& r) {
    if (r.rows.empty() || r.cols.empty()) return false;
    for (int i : r.rows) {
        if (i < 0 || i >= y.rows()) return false;
        for (int j : r.cols) {
            if (j < 0 || j >= y.cols()) return false;
            if (y.is_zero(i, j)) return false;
        }
    }
    return true;
}

inline bool rectangle_contains(const Rectangle& r, Position p) {
    return std::binary_search(r.rows.begin(), r.rows.end(), p.row) &&
           std::binary_search(r.cols.begin(), r.cols.end(), p.col);
}

namespace detail {

inline std::vector<SmallBitset> nonzero_row_masks(const GenBinMatrix& y) {
    std::vector<SmallBitset> masks(static_cast<std::size_t>(y.rows()));
    for (int r = 0; r < y.rows(); ++r) {
        SmallBitset m(y.cols());
        for (int c = 0; c < y.cols(); ++c)
            if (y.nonzero(r, c)) m.set(c);
        masks[static_cast<std::size_t>(r)] = std::move(m);
    }
    return masks;
}

} // namespace detail

// All inclusion-maximal rectangles containing at least one 1, sorted by
// (rows, cols). Column sets are generated by closing the non-zero row masks
// under intersection; each closed set with its full row extent is maximal,
// and every maximal rectangle arises this way.
inline std::vector<Rectangle> maximal_rectangles(const GenBinMatrix& y) {
    const auto rowok = detail::nonzero_row_masks(y);
    std::vector<detail::SmallBitset> closed;
    auto add = [&closed](const detail::SmallBitset& m) {
        if (m.none()) return;
        if (std::find(closed.begin(), closed.end(), m) == closed.end())
            closed.push_back(m);
    };
    for (const auto& m : rowok) add(m);
    for (std::size_t i = 0; i < closed.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            add(closed[i] & closed[j]);

    std::vector<Rectangle> out;
    for (const auto& colset : closed) {
        Rectangle rect;
        for (int c = colset.first_set(); c >= 0; c = colset.next_set(c)) rect.cols.push_back(c);
        bool has_one = false;
        for (int r = 0; r < y.rows(); ++r) {
            if (!colset.is_subset_of(rowok[static_cast<std::size_t>(r)])) continue;
            rect.rows.push_back(r);
            for (int c : rect.cols) has_one = has_one || y.is_one(r, c);
        }
        if (!rect.rows.empty() && has_one) out.push_back(std::move(rect));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A 1 at (l,k) is simplicial when the cross product of its column support and
// row support is itself a rectangle; that rectangle is then the unique
// maximal rectangle covering (l,k).
struct SimplicialWitness {
    Position position;
    Rectangle rectangle;
};

namespace detail {

inline std::optional<Rectangle> cross_rectangle(const GenBinMatrix& y, Position p) {
    Rectangle rect;
    for (int i = 0; i < y.rows(); ++i)
        if (y.nonzero(i, p.col)) rect.rows.push_back(i);
    for (int j = 0; j < y.cols(); ++j)
        if (y.nonzero(p.row, j)) rect.cols.push_back(j);
    for (int i : rect.rows)
        for (int j : rect.cols)
            if (y.is_zero(i, j)) return std::nullopt;
    return rect;
}

} // namespace detail

inline std::vector<SimplicialWitness> simplicial_ones(const GenBinMatrix& y) {
    std::vector<SimplicialWitness> out;
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.cols(); ++c) {
            if (!y.is_one(r, c)) continue;
            if (auto rect = detail::cross_rectangle(y, {r, c}))
                out.push_back({{r, c}, std::move(*rect)});
        }
    return out;
}

// Removal of a simplicial 1: drop its row and column, turn the surviving
// cells of its rectangle into ?s. Both the isolation number and the Boolean
// rank drop by exactly one.
inline GenBinMatrix remove_simplicial(const GenBinMatrix& y, const SimplicialWitness& w) {
    const Position p = w.position;
    if (p.row < 0 || p.row >= y.rows() || p.col < 0 || p.col >= y.cols() ||
        !y.is_one(p.row, p.col))
        throw std::invalid_argument("stale simplicial witness: position is not a 1");
    auto rect = detail::cross_rectangle(y, p);
    if (!rect || !(*rect == w.rectangle))
        throw std::invalid_argument("stale simplicial witness: rectangle mismatch");
    if (y.rows() == 1 || y.cols() == 1)
        throw std::invalid_argument("cannot remove a simplicial 1 from a single line");

    GenBinMatrix out(y.rows() - 1, y.cols() - 1);
    for (int r = 0, ro = 0; r < y.rows(); ++r) {
        if (r == p.row) continue;
        for (int c = 0, co = 0; c < y.cols(); ++c) {
            if (c == p.col) continue;
            Entry e = y.at(r, c);
            if (rectangle_contains(*rect, {r, c})) e = Entry::Question;
            out.set(ro, co, e);
            ++co;
        }
        ++ro;
    }
    return out;
}

// Stretching the 1 at (l,k): append one row and one column whose only 1s sit
// at (l,n), (m,k) and (m,n), creating a simplicial 1 at the new corner.
inline GenBinMatrix stretch(const GenBinMatrix& x, Position p) {
    require_standard(x, "stretch");
    if (p.row < 0 || p.row >= x.rows() || p.col < 0 || p.col >= x.cols() ||
        !x.is_one(p.row, p.col))
        throw std::invalid_argument("stretch position must hold a 1");
    GenBinMatrix out(x.rows() + 1, x.cols() + 1);
    for (int r = 0; r < x.rows(); ++r)
        for (int c = 0; c < x.cols(); ++c)
            out.set(r, c, x.at(r, c));
    out.set(p.row, x.cols(), Entry::One);
    out.set(x.rows(), p.col, Entry::One);
    out.set(x.rows(), x.cols(), Entry::One);
    return out;
}

// Stretch every 1 in Q, in non-decreasing (row, column) order. Positions
// refer to the original matrix; stretching never moves existing entries, so
// they stay valid as the matrix grows.
inline GenBinMatrix stretch_set(const GenBinMatrix& x, std::vector<Position> q) {
    require_standard(x, "stretch_set");
    if (q.empty()) throw std::invalid_argument("stretch set must be non-empty");
    std::sort(q.begin(), q.end());
    if (std::adjacent_find(q.begin(), q.end()) != q.end())
        throw std::invalid_argument("stretch set contains duplicate positions");
    GenBinMatrix out = x;
    for (const Position& p : q) out = stretch(out, p);
    return out;
}

} // namespace firm

#endif
