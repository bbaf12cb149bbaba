#include "doctest.h"

#include <random>

#include "firm/certify.hpp"
#include "firm/families.hpp"
#include "firm/search.hpp"

#include "../support/brute_force.hpp"
#include "../support/random_matrices.hpp"

using namespace firm;

namespace {

// Definition-level firmness: i = br on every index-set pair, by direct
// enumeration with no memoization or recursion.
bool firm_by_definition(const GenBinMatrix& y) {
    for (std::uint32_t rm = 1; rm < (1u << y.rows()); ++rm)
        for (std::uint32_t cm = 1; cm < (1u << y.cols()); ++cm) {
            std::vector<int> rows, cols;
            for (int r = 0; r < y.rows(); ++r)
                if (rm & (1u << r)) rows.push_back(r);
            for (int c = 0; c < y.cols(); ++c)
                if (cm & (1u << c)) cols.push_back(c);
            GenBinMatrix sub = submatrix(y, rows, cols);
            if (isolation_value(sub) != boolean_rank_value(sub)) return false;
        }
    return true;
}

GenBinMatrix random_superfirm(std::mt19937& rng, int dim = 4) {
    for (;;) {
        GenBinMatrix x = firmtest::random_matrix(rng, dim, dim, 0.25, 0.6);
        if (x.support_size() > 0 && is_superfirm(x).holds) return x;
    }
}

} // namespace

TEST_CASE("is_firm on the named matrices") {
    CHECK(is_firm(generate(Family::Dn, 4)).holds);
    CHECK(is_firm(generate(Family::Hn, 3)).holds);
    CHECK(is_firm(generate(Family::Mn, 4)).holds);
    CHECK(is_firm(generate(Family::Mn, 5)).holds);

    auto v = is_firm(generate(Family::Ibar4));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    const auto& w = std::get<SubmatrixWitness>(*v.witness);
    CHECK(w.rows.size() == 4); // the whole matrix is the minimal failure
    CHECK(w.cols.size() == 4);
}

TEST_CASE("firm witness is a minimal failing submatrix") {
    std::mt19937 rng(97);
    int failures = 0;
    while (failures < 8) {
        GenBinMatrix y = firmtest::random_matrix(rng, 5, 5, 0.3, 0.8, 0.1);
        auto v = is_firm(y);
        if (v.holds) continue;
        ++failures;
        const auto& w = std::get<SubmatrixWitness>(*v.witness);
        GenBinMatrix sub = submatrix(y, w.rows, w.cols);
        CHECK(isolation_value(sub) < boolean_rank_value(sub));
        // Every single-line deletion of the witness is firm.
        if (w.rows.size() > 1)
            for (std::size_t skip = 0; skip < w.rows.size(); ++skip) {
                auto rows = w.rows;
                rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(skip));
                CHECK(is_firm(submatrix(y, rows, w.cols)).holds);
            }
        if (w.cols.size() > 1)
            for (std::size_t skip = 0; skip < w.cols.size(); ++skip) {
                auto cols = w.cols;
                cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(skip));
                CHECK(is_firm(submatrix(y, w.rows, cols)).holds);
            }
    }
}

TEST_CASE("is_firm agrees with the definition on random matrices") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        GenBinMatrix y = firmtest::random_matrix(rng, 4, 4, 0.3, 0.9, 0.1);
        CHECK(is_firm(y).holds == firm_by_definition(y));
    }
}

TEST_CASE("is_mnf on the named matrices") {
    CHECK(is_mnf(generate(Family::Ibar4)).holds);
    CHECK(is_mnf(generate(Family::Ibar4prime)).holds);
    GenBinMatrix h3q =
        with_questions(generate(Family::Hn, 3), question_marks(Family::Hn, 3));
    CHECK(is_mnf(h3q).holds);
    auto d4 = is_mnf(generate(Family::Dn, 4));
    CHECK_FALSE(d4.holds); // firm
    REQUIRE(d4.witness);
    const auto& vals = std::get<ValueWitness>(*d4.witness);
    CHECK(vals.isolation == vals.boolean_rank);
}

TEST_CASE("is_mnf agrees with the definition on random matrices") {
    std::mt19937 rng(103);
    auto mnf_by_definition = [](const GenBinMatrix& y) {
        if (isolation_value(y) >= boolean_rank_value(y)) return false;
        for (std::uint32_t rm = 1; rm < (1u << y.rows()); ++rm)
            for (std::uint32_t cm = 1; cm < (1u << y.cols()); ++cm) {
                if (rm == (1u << y.rows()) - 1 && cm == (1u << y.cols()) - 1) continue;
                std::vector<int> rows, cols;
                for (int r = 0; r < y.rows(); ++r)
                    if (rm & (1u << r)) rows.push_back(r);
                for (int c = 0; c < y.cols(); ++c)
                    if (cm & (1u << c)) cols.push_back(c);
                GenBinMatrix sub = submatrix(y, rows, cols);
                if (isolation_value(sub) != boolean_rank_value(sub)) return false;
            }
        return true;
    };
    for (int trial = 0; trial < 40; ++trial) {
        GenBinMatrix y = firmtest::random_matrix(rng, 4, 4, 0.4, 0.9, 0.1);
        CHECK(is_mnf(y).holds == mnf_by_definition(y));
    }
}

TEST_CASE("is_superfirm") {
    CHECK(is_superfirm(generate(Family::Cn, 3)).holds);
    auto v = is_superfirm(generate(Family::Dn, 4));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    CHECK(std::get<HoleWitness>(*v.witness).cycle.size() == 5);

    // Linear matrices (no 2x2 all-ones block) are superfirm.
    std::mt19937 rng(107);
    int checked = 0;
    while (checked < 20) {
        GenBinMatrix x = firmtest::random_matrix(rng, 5, 5, 0.2, 0.5);
        bool linear = true;
        for (int a = 0; a < x.rows() && linear; ++a)
            for (int b = a + 1; b < x.rows() && linear; ++b)
                for (int c = 0; c < x.cols() && linear; ++c)
                    for (int d = c + 1; d < x.cols() && linear; ++d)
                        linear = !(x.is_one(a, c) && x.is_one(a, d) && x.is_one(b, c) &&
                                   x.is_one(b, d));
        if (!linear) continue;
        CHECK(is_superfirm(x).holds);
        ++checked;
    }

    CHECK_THROWS_AS(is_superfirm(GenBinMatrix::from_strings({"1?"})), std::invalid_argument);
}

TEST_CASE("superfirmness equals equality under every question substitution") {
    std::mt19937 rng(149);
    int checked = 0;
    while (checked < 25) {
        GenBinMatrix x = firmtest::random_matrix(rng, 4, 4, 0.3, 0.8);
        auto supp = x.support();
        if (supp.size() > 10) continue;
        bool all_equal = true;
        for (std::uint32_t mask = 0; mask < (1u << supp.size()) && all_equal; ++mask) {
            std::vector<Position> p;
            for (std::size_t i = 0; i < supp.size(); ++i)
                if (mask & (1u << i)) p.push_back(supp[i]);
            GenBinMatrix xp = with_questions(x, p);
            all_equal = isolation_value(xp) == boolean_rank_value(xp);
        }
        CHECK(is_superfirm(x).holds == all_equal);
        ++checked;
    }
}

TEST_CASE("superfirm implies firm; D_4 separates the classes") {
    std::mt19937 rng(109);
    for (int trial = 0; trial < 10; ++trial) {
        GenBinMatrix x = random_superfirm(rng);
        CHECK(is_firm(x).holds);
    }
    CHECK(is_firm(generate(Family::Dn, 4)).holds);
    CHECK_FALSE(is_superfirm(generate(Family::Dn, 4)).holds);
}

TEST_CASE("is_mnsf") {
    CHECK(is_mnsf(generate(Family::Dn, 4)).holds);
    CHECK(is_mnsf(generate(Family::Tn, 5)).holds);
    CHECK(is_mnsf(generate(Family::Hn, 3)).holds);
    CHECK(is_mnsf(generate(Family::Hn, 4)).holds);
    CHECK(is_mnsf(generate(Family::Mn, 4)).holds);
    CHECK(is_mnsf(generate(Family::Mn, 5)).holds);

    // Superfirm matrices are not minimally non-superfirm.
    CHECK_FALSE(is_mnsf(generate(Family::Cn, 3)).holds);

    // D_5 contains D_4, so it is not minimal.
    auto v = is_mnsf(generate(Family::Dn, 5));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness);
    const auto& w = std::get<SubmatrixWitness>(*v.witness);
    GenBinMatrix sub = submatrix(generate(Family::Dn, 5), w.rows, w.cols);
    CHECK_FALSE(is_superfirm(sub).holds);
}

TEST_CASE("stretching a superfirm matrix yields a firm matrix") {
    std::mt19937 rng(113);
    int plain = 0, simplicial = 0;
    while (plain < 10 || simplicial < 5) {
        GenBinMatrix x = random_superfirm(rng);
        auto supp = x.support();
        if (supp.empty()) continue;
        Position p = supp[rng() % supp.size()];
        if (plain < 10) {
            CHECK(is_firm(stretch(x, p)).holds);
            ++plain;
        }
        for (const auto& w : simplicial_ones(x)) {
            if (simplicial >= 5) break;
            CHECK(is_superfirm(stretch(x, w.position)).holds);
            ++simplicial;
        }
    }
}

TEST_CASE("mnf recipe end to end on the four families") {
    struct Case {
        Family base;
        int n;
    };
    for (const Case c : {Case{Family::Hn, 3}, Case{Family::Mn, 4}, Case{Family::Dn, 4},
                         Case{Family::Tn, 5}}) {
        GenBinMatrix x = generate(c.base, c.n);
        auto marks = question_marks(c.base, c.n);
        // Premises: X^Q is mnf and X^P is firm for every proper subset P.
        CHECK(is_mnf(with_questions(x, marks)).holds);
        for (const auto& p : firmtest::all_subsets(marks))
            if (p.size() < marks.size()) CHECK(is_firm(with_questions(x, p)).holds);
        // Conclusion: the stretched matrix is mnf.
        CHECK(is_mnf(stretch_set(x, marks)).holds);
    }
}

TEST_CASE("mnf implies the two structural facts") {
    for (const GenBinMatrix& y :
         {generate(Family::Ibar4), generate(Family::Ibar4prime),
          with_questions(generate(Family::Hn, 3), question_marks(Family::Hn, 3)),
          with_questions(generate(Family::Dn, 4), question_marks(Family::Dn, 4))}) {
        REQUIRE(is_mnf(y).holds);
        CHECK(isolation_value(y) == boolean_rank_value(y) - 1);
        for (int r = 0; r < y.rows(); ++r) {
            int nz = 0;
            for (int c = 0; c < y.cols(); ++c) nz += y.nonzero(r, c) ? 1 : 0;
            CHECK(nz >= 2);
        }
        for (int c = 0; c < y.cols(); ++c) {
            int nz = 0;
            for (int r = 0; r < y.rows(); ++r) nz += y.nonzero(r, c) ? 1 : 0;
            CHECK(nz >= 2);
        }
    }
}

TEST_CASE("contains_pattern") {
    GenBinMatrix d4 = generate(Family::Dn, 4);
    auto self = contains_pattern(d4, d4, "D4");
    CHECK(self.holds);

    GenBinMatrix h3 = generate(Family::Hn, 3);
    CHECK(contains_pattern(generate(Family::W), h3, "H3").holds);
    CHECK(contains_pattern(generate(Family::Ibar4), h3, "H3").holds);
    CHECK_FALSE(contains_pattern(generate(Family::Cn, 3), d4).holds);

    // Embedding witnesses are checkable.
    auto v = contains_pattern(generate(Family::W), h3, "H3");
    REQUIRE(v.witness);
    const auto& emb = std::get<PatternEmbedding>(*v.witness);
    GenBinMatrix w = generate(Family::W);
    for (int i = 0; i < h3.rows(); ++i)
        for (int j = 0; j < h3.cols(); ++j)
            CHECK(w.at(emb.row_map[static_cast<std::size_t>(i)],
                       emb.col_map[static_cast<std::size_t>(j)]) == h3.at(i, j));

    // K_5 avoids the three smaller five-hole patterns.
    GenBinMatrix k5 = generate(Family::K5);
    CHECK_FALSE(contains_pattern(k5, d4).holds);
    CHECK_FALSE(contains_pattern(k5, h3).holds);
    CHECK_FALSE(contains_pattern(k5, transpose(h3)).holds);
}

TEST_CASE("has_five_hole dual routes agree") {
    CHECK(has_five_hole(generate(Family::Dn, 4)).holds);
    CHECK(has_five_hole(generate(Family::Hn, 3)).holds);
    CHECK(has_five_hole(generate(Family::K5)).holds);
    CHECK(has_five_hole(generate(Family::Ibar4)).holds);
    for (int n = 3; n <= 6; ++n) CHECK_FALSE(has_five_hole(generate(Family::Cn, n)).holds);
    // Bigger H and M matrices have only longer odd holes.
    CHECK_FALSE(has_five_hole(generate(Family::Hn, 4)).holds);
    CHECK_FALSE(has_five_hole(generate(Family::Mn, 4)).holds);
    CHECK_FALSE(has_five_hole(generate(Family::Tn, 5)).holds);

    std::mt19937 rng(127);
    for (int trial = 0; trial < 200; ++trial) {
        GenBinMatrix x = firmtest::random_matrix(rng, 4, 4, 0.3, 0.9);
        CHECK_NOTHROW(has_five_hole(x)); // routes agree or it throws
    }
}

TEST_CASE("is_totally_balanced") {
    auto c3 = is_totally_balanced(generate(Family::Cn, 3));
    CHECK_FALSE(c3.holds);
    REQUIRE(c3.witness);
    {
        const auto& emb = std::get<PatternEmbedding>(*c3.witness);
        CHECK(emb.pattern == "C3");
    }
    CHECK_FALSE(is_totally_balanced(generate(Family::Cn, 5)).holds);
    CHECK(is_totally_balanced(generate(Family::Dn, 4)).holds);
    CHECK(is_totally_balanced(generate(Family::Dn, 6)).holds);

    // Witness embeddings reproduce a cycle matrix exactly.
    std::mt19937 rng(131);
    int checked = 0;
    while (checked < 15) {
        GenBinMatrix x = firmtest::random_matrix(rng, 6, 6, 0.3, 0.7);
        auto v = is_totally_balanced(x);
        if (v.holds) continue;
        const auto& emb = std::get<PatternEmbedding>(*v.witness);
        const int k = static_cast<int>(emb.row_map.size());
        GenBinMatrix ck = generate(Family::Cn, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                CHECK(x.at(emb.row_map[static_cast<std::size_t>(i)],
                           emb.col_map[static_cast<std::size_t>(j)]) == ck.at(i, j));
        ++checked;
    }
}

TEST_CASE("stretching preserves total balancedness") {
    std::mt19937 rng(137);
    int checked = 0;
    while (checked < 20) {
        GenBinMatrix x = firmtest::random_matrix(rng, 5, 5, 0.3, 0.7);
        if (x.support_size() == 0 || !is_totally_balanced(x).holds) continue;
        auto supp = x.support();
        std::vector<Position> q;
        for (const auto& p : supp)
            if (rng() % 3 == 0) q.push_back(p);
        if (q.empty()) q.push_back(supp[rng() % supp.size()]);
        CHECK(is_totally_balanced(stretch_set(x, q)).holds);
        ++checked;
    }
}

TEST_CASE("hereditary spot checks") {
    std::mt19937 rng(139);
    int checked = 0;
    while (checked < 15) {
        GenBinMatrix y = firmtest::random_matrix(rng, 5, 5, 0.3, 0.7, 0.1);
        if (!is_firm(y).holds) continue;
        std::vector<int> rows, cols;
        for (int r = 0; r < y.rows(); ++r)
            if (rng() % 2 || rows.empty()) rows.push_back(r);
        for (int c = 0; c < y.cols(); ++c)
            if (rng() % 2 || cols.empty()) cols.push_back(c);
        CHECK(is_firm(submatrix(y, rows, cols)).holds);
        ++checked;
    }
}

TEST_CASE("firmness budget is an explicit error") {
    FirmnessOptions tiny;
    tiny.max_ones = 3;
    CHECK_THROWS_AS(is_firm(generate(Family::Dn, 4), tiny), budget_exceeded_error);
    CHECK_THROWS_AS(is_mnf(generate(Family::Dn, 4), tiny), budget_exceeded_error);
}
