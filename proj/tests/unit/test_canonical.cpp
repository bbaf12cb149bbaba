#include "doctest.h"

#include <algorithm>
#include <random>

#include "firm/canonical.hpp"
#include "firm/families.hpp"
#include "firm/search.hpp"

#include "../support/random_matrices.hpp"

using namespace firm;

namespace {

GenBinMatrix shuffled(const GenBinMatrix& y, std::mt19937& rng) {
    std::vector<int> rp(static_cast<std::size_t>(y.rows())), cp(static_cast<std::size_t>(y.cols()));
    for (int i = 0; i < y.rows(); ++i) rp[static_cast<std::size_t>(i)] = i;
    for (int j = 0; j < y.cols(); ++j) cp[static_cast<std::size_t>(j)] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    GenBinMatrix out(y.rows(), y.cols());
    for (int r = 0; r < y.rows(); ++r)
        for (int c = 0; c < y.cols(); ++c)
            out.set(r, c, y.at(rp[static_cast<std::size_t>(r)], cp[static_cast<std::size_t>(c)]));
    return out;
}

} // namespace

TEST_CASE("canonical key is invariant under row and column permutations") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        GenBinMatrix y = firmtest::random_matrix(rng, 7, 7, 0.2, 0.8, 0.1);
        GenBinMatrix z = shuffled(y, rng);
        CHECK(canonical_key(y) == canonical_key(z));
        CHECK(canonical_key(y, true) == canonical_key(z, true));
    }
}

TEST_CASE("canonical key separates inequivalent matrices") {
    // Same dimensions and support size, different classes.
    GenBinMatrix row2 = GenBinMatrix::from_strings({"11", "00"});
    GenBinMatrix diag = GenBinMatrix::from_strings({"10", "01"});
    CHECK(canonical_key(row2) != canonical_key(diag));
    // Equal keys imply equal entry counts.
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        GenBinMatrix a = firmtest::random_matrix(rng, 4, 4, 0.2, 0.8, 0.2);
        GenBinMatrix b = firmtest::random_matrix(rng, 4, 4, 0.2, 0.8, 0.2);
        if (canonical_key(a) == canonical_key(b)) {
            CHECK(a.rows() == b.rows());
            CHECK(a.cols() == b.cols());
            CHECK(a.support_size() == b.support_size());
        }
    }
}

TEST_CASE("transposition handling") {
    GenBinMatrix h3 = generate(Family::Hn, 3);
    CHECK(canonical_key(h3) != canonical_key(transpose(h3)));
    CHECK(canonical_key(h3, true) == canonical_key(transpose(h3), true));

    // Zeroing any single 1 of the identity complement gives one class.
    GenBinMatrix a = generate(Family::Ibar4);
    GenBinMatrix b = a;
    a.set(0, 3, Entry::Zero);
    b.set(1, 0, Entry::Zero);
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) == canonical_key(generate(Family::Ibar4prime)));
}

TEST_CASE("branch-and-bound agrees with permutation enumeration") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        GenBinMatrix y = firmtest::random_matrix(rng, 6, 8, 0.2, 0.8, 0.1);
        GenBinMatrix w = y.rows() <= y.cols() ? y : transpose(y);
        CHECK(detail::min_grid_string(w, false) == detail::min_grid_string(w, true));
    }
}

TEST_CASE("key round trips through the class representative") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        GenBinMatrix y = firmtest::random_matrix(rng, 8, 5, 0.2, 0.8, 0.1);
        for (bool t : {false, true}) {
            std::string key = canonical_key(y, t);
            GenBinMatrix rep = matrix_from_key(key);
            CHECK(canonical_key(rep, t) == key);
        }
    }
}

TEST_CASE("canonical class counts match the standard table") {
    // Binary matrices up to independent row/column permutations.
    const int expected[4] = {2, 7, 36, 317};
    for (int n = 1; n <= 4; ++n) {
        std::uint64_t enumerated = 0;
        int classes = 0;
        bool complete = for_each_canonical_class(
            n, n, false, std::uint64_t{1} << 40, enumerated,
            [&classes](const std::string&, const GenBinMatrix&) { ++classes; });
        CHECK(complete);
        CHECK(classes == expected[n - 1]);
    }
}
