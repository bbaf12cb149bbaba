#ifndef FIRM_MATRIX_HPP
#define FIRM_MATRIX_HPP

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "firm/errors.hpp"

namespace firm {

// Entry alphabet. Question entries may join rectangles but never need to be
// covered and never belong to an isolated set.
enum class Entry : unsigned char { Zero = 0, One = 1, Question = 2 };

inline char to_char(Entry e) {
    switch (e) {
        case Entry::Zero: return '0';
        case Entry::One: return '1';
        case Entry::Question: return '?';
    }
    return '0';
}

inline Entry entry_from_char(char c) {
    switch (c) {
        case '0': return Entry::Zero;
        case '1': return Entry::One;
        case '?': return Entry::Question;
        default:
            throw std::invalid_argument(std::string("invalid entry character '") + c + "'");
    }
}

// 0-based cell coordinates. All external text/JSON formats are 1-based;
// conversion happens only at I/O boundaries.
struct Position {
    int row = 0;
    int col = 0;
    auto operator<=>(const Position&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Position& p) {
    return os << '(' << p.row + 1 << ',' << p.col + 1 << ')';
}

// Dense matrix over {0,1,?}. Desk-scale by design: every algorithm in this
// library is exponential, so no sparse storage is provided. Values are
// treated as immutable once built; all operations return new matrices.
class GenBinMatrix {
public:
    GenBinMatrix(int rows, int cols, Entry fill = Entry::Zero)
        : rows_(rows), cols_(cols),
          cells_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }

    static GenBinMatrix from_strings(const std::vector<std::string>& lines) {
        if (lines.empty()) throw std::invalid_argument("matrix needs at least one row");
        GenBinMatrix m(static_cast<int>(lines.size()),
                       static_cast<int>(lines.front().size()));
        for (int r = 0; r < m.rows_; ++r) {
            if (static_cast<int>(lines[r].size()) != m.cols_)
                throw std::invalid_argument("rows must have equal length");
            for (int c = 0; c < m.cols_; ++c)
                m.set(r, c, entry_from_char(lines[r][c]));
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Entry at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return cells_[static_cast<std::size_t>(r) * cols_ + c];
    }

    void set(int r, int c, Entry e) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        cells_[static_cast<std::size_t>(r) * cols_ + c] = e;
    }

    bool is_one(int r, int c) const { return at(r, c) == Entry::One; }
    bool is_zero(int r, int c) const { return at(r, c) == Entry::Zero; }
    bool nonzero(int r, int c) const { return at(r, c) != Entry::Zero; }

    bool is_standard() const {
        return std::none_of(cells_.begin(), cells_.end(),
                            [](Entry e) { return e == Entry::Question; });
    }

    std::vector<Position> support() const {
        std::vector<Position> s;
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c)
                if (is_one(r, c)) s.push_back({r, c});
        return s;
    }

    int support_size() const {
        return static_cast<int>(
            std::count(cells_.begin(), cells_.end(), Entry::One));
    }

    bool operator==(const GenBinMatrix&) const = default;

    std::string row_string(int r) const {
        std::string s(static_cast<std::size_t>(cols_), '0');
        for (int c = 0; c < cols_; ++c) s[c] = to_char(at(r, c));
        return s;
    }

private:
    int rows_;
    int cols_;
    std::vector<Entry> cells_;
};

inline void require_standard(const GenBinMatrix& m, const char* what) {
    if (!m.is_standard())
        throw std::invalid_argument(std::string(what) +
                                    " requires a standard binary matrix (no '?' entries)");
}

namespace detail {

inline void check_index_set(const std::vector<int>& ix, int limit, const char* what) {
    if (ix.empty())
        throw std::invalid_argument(std::string("empty submatrix: ") + what +
                                    " index set is empty");
    int prev = -1;
    for (int i : ix) {
        if (i < 0 || i >= limit)
            throw std::invalid_argument(std::string(what) + " index out of range");
        if (i <= prev)
            throw std::invalid_argument(std::string(what) +
                                        " index set must be strictly increasing");
        prev = i;
    }
}

} // namespace detail

// Submatrix on row set I and column set J (both sorted, 0-based), keeping the
// original relative order.
inline GenBinMatrix submatrix(const GenBinMatrix& y,
                              const std::vector<int>& row_set,
                              const std::vector<int>& col_set) {
    detail::check_index_set(row_set, y.rows(), "row");
    detail::check_index_set(col_set, y.cols(), "column");
    GenBinMatrix out(static_cast<int>(row_set.size()), static_cast<int>(col_set.size()));
    for (std::size_t r = 0; r < row_set.size(); ++r)
        for (std::size_t c = 0; c < col_set.size(); ++c)
            out.set(static_cast<int>(r), static_cast<int>(c),
                    y.at(row_set[r], col_set[c]));
    return out;
}

// Y^P: replace the 1s indexed by P with ?s. Every position in P must hold a 1.
inline GenBinMatrix with_questions(const GenBinMatrix& y, std::span<const Position> marks) {
    GenBinMatrix out = y;
    for (const Position& p : marks) {
        if (p.row < 0 || p.row >= y.rows() || p.col < 0 || p.col >= y.cols())
            throw std::invalid_argument("P position out of range");
        if (!y.is_one(p.row, p.col))
            throw std::invalid_argument("P must index 1s");
        out.set(p.row, p.col, Entry::Question);
    }
    return out;
}

inline GenBinMatrix with_questions(const GenBinMatrix& y, const std::vector<Position>& marks) {
    return with_questions(y, std::span<const Position>(marks));
}

inline GenBinMatrix transpose(const GenBinMatrix& y) {
    GenBinMatrix out(y.cols(), y.rows());
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.cols(); ++c)
            out.set(c, r, y.at(r, c));
    return out;
}

// ---- .gbm text format ----------------------------------------------------
// '#' lines are comments, blank lines are ignored, rows use '0'/'1'/'?' with
// no separators and must have equal length.

inline GenBinMatrix parse_gbm(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    int lineno = 0;
    int expected_len = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        for (std::size_t i = 0; i < line.size(); ++i) {
            char c = line[i];
            if (c != '0' && c != '1' && c != '?')
                throw parse_error(std::string("invalid character '") + c + "'",
                                  lineno, static_cast<int>(i) + 1);
        }
        if (expected_len >= 0 && static_cast<int>(line.size()) != expected_len)
            throw parse_error("row length differs from previous rows", lineno,
                              static_cast<int>(line.size()) + 1);
        expected_len = static_cast<int>(line.size());
        rows.push_back(line);
    }
    if (rows.empty()) throw parse_error("no matrix rows found", lineno, 1);
    return GenBinMatrix::from_strings(rows);
}

inline GenBinMatrix parse_gbm(const std::string& text) {
    std::istringstream in(text);
    return parse_gbm(in);
}

inline std::string format_gbm(const GenBinMatrix& m) {
    std::string out;
    for (int r = 0; r < m.rows(); ++r) {
        out += m.row_string(r);
        out += '\n';
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const GenBinMatrix& m) {
    return os << format_gbm(m);
}

} // namespace firm

#endif
