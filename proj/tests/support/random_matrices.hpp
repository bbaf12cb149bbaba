#ifndef FIRM_TESTS_RANDOM_MATRICES_HPP
#define FIRM_TESTS_RANDOM_MATRICES_HPP

#include <random>
#include <vector>

#include "firm/matrix.hpp"

namespace firmtest {

inline firm::GenBinMatrix random_matrix(std::mt19937& rng, int max_rows, int max_cols,
                                        double density_lo, double density_hi,
                                        double question_prob = 0.0) {
    std::uniform_int_distribution<int> rd(1, max_rows), cd(1, max_cols);
    std::uniform_real_distribution<double> dens(density_lo, density_hi);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int m = rd(rng), n = cd(rng);
    const double d = dens(rng);
    firm::GenBinMatrix out(m, n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if (unit(rng) < d)
                out.set(r, c,
                        question_prob > 0.0 && unit(rng) < question_prob ? firm::Entry::Question
                                                                         : firm::Entry::One);
    return out;
}

// All subsets of a mark set, in subset-mask order.
inline std::vector<std::vector<firm::Position>> all_subsets(
    const std::vector<firm::Position>& marks) {
    std::vector<std::vector<firm::Position>> out;
    for (std::uint32_t mask = 0; mask < (1u << marks.size()); ++mask) {
        std::vector<firm::Position> s;
        for (std::size_t i = 0; i < marks.size(); ++i)
            if (mask & (1u << i)) s.push_back(marks[i]);
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace firmtest

#endif
