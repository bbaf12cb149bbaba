// firmcover: exact Boolean-rank / isolation-number analysis of binary and
// generalized binary matrices, with certificates and property verdicts.
//
// Exit codes: 0 = done / property holds, 1 = property fails (witness
// printed), 2 = usage or parse error, 3 = search budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "firm/firm.hpp"
#include "firm/json_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

firm::GenBinMatrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw firm::parse_error("cannot open '" + path + "'", 0, 0);
    return firm::parse_gbm(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

firm::Position parse_position(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("expected \"r,c\" position, got '" + s + "'");
    int r = std::stoi(s.substr(0, comma));
    int c = std::stoi(s.substr(comma + 1));
    if (r < 1 || c < 1) throw std::invalid_argument("positions are 1-based");
    return {r - 1, c - 1};
}

std::vector<firm::Position> parse_position_set(const std::string& s) {
    std::vector<firm::Position> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (!item.empty()) out.push_back(parse_position(item));
    return out;
}

std::string positions_text(const std::vector<firm::Position>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? " " : "") << ps[i];
    return os.str();
}

std::string rectangle_text(const firm::Rectangle& r) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < r.rows.size(); ++i) os << (i ? "," : "") << r.rows[i] + 1;
    os << "}x{";
    for (std::size_t i = 0; i < r.cols.size(); ++i) os << (i ? "," : "") << r.cols[i] + 1;
    os << '}';
    return os.str();
}

std::string witness_text(const firm::Witness& w) {
    using namespace firm;
    std::ostringstream os;
    if (const auto* s = std::get_if<SubmatrixWitness>(&w)) {
        os << "submatrix rows {";
        for (std::size_t i = 0; i < s->rows.size(); ++i) os << (i ? "," : "") << s->rows[i] + 1;
        os << "} cols {";
        for (std::size_t i = 0; i < s->cols.size(); ++i) os << (i ? "," : "") << s->cols[i] + 1;
        os << "}";
        if (!s->cycle.empty()) os << " with odd hole " << positions_text(s->cycle);
    } else if (const auto* h = std::get_if<HoleWitness>(&w)) {
        os << (h->antihole ? "odd antihole " : "odd hole ") << positions_text(h->cycle);
    } else if (const auto* e = std::get_if<PatternEmbedding>(&w)) {
        os << "pattern " << e->pattern << " at rows";
        for (int r : e->row_map) os << ' ' << r + 1;
        os << " cols";
        for (int c : e->col_map) os << ' ' << c + 1;
    } else {
        const auto& v = std::get<ValueWitness>(w);
        os << "isolation " << v.isolation << ", boolean rank " << v.boolean_rank;
    }
    return os.str();
}

struct GenArgs {
    std::string family;
    int n = 0;
    std::string out;
    bool with_questions = false;
};

int run_gen(const GenArgs& a) {
    auto fam = firm::parse_family(a.family);
    if (!fam) {
        std::cerr << "unknown family '" << a.family << "'\n";
        return kExitUsage;
    }
    firm::GenBinMatrix m = firm::generate(*fam, a.n);
    auto marks = firm::question_marks(*fam, a.n);
    std::ostringstream os;
    os << "# " << firm::family_name(*fam);
    if (firm::family_takes_size(*fam)) os << " n=" << a.n;
    os << "\n";
    if (*fam == firm::Family::K5)
        os << "# circulant offsets 0,1,2 selected: 5-hole present, no D4/H3/H3T submatrix\n";
    if (!marks.empty() && !a.with_questions)
        os << "# question-marks: " << positions_text(marks) << "\n";
    if (a.with_questions) {
        if (marks.empty()) {
            std::cerr << "family " << firm::family_name(*fam) << " has no question set\n";
            return kExitUsage;
        }
        m = firm::with_questions(m, marks);
        os << "# question-marks applied: " << positions_text(marks) << "\n";
    }
    os << firm::format_gbm(m);
    write_text(a.out, os.str());
    return kExitOk;
}

struct AnalyzeArgs {
    std::string path;
    bool json = false;
    std::string graph_out;
};

int run_analyze(const AnalyzeArgs& a) {
    firm::GenBinMatrix m = load_matrix(a.path);
    auto iso = firm::isolation_number(m);
    auto cover = firm::boolean_rank(m);
    if (!firm::verify_certificate(m, iso) || !firm::verify_certificate(m, cover))
        throw std::logic_error("certificate failed re-verification");
    auto simp = firm::simplicial_ones(m);
    firm::CoverGraph g(m);

    bool hole_budget_hit = false;
    std::optional<firm::HoleWitness> hole;
    try {
        hole = firm::find_odd_hole(g);
    } catch (const firm::budget_exceeded_error&) {
        hole_budget_hit = true;
    }

    if (!a.graph_out.empty()) {
        std::ostringstream os;
        firm::write_edge_list(g, os);
        write_text(a.graph_out, os.str());
    }

    if (a.json) {
        nlohmann::json j{{"rows", m.rows()},
                         {"cols", m.cols()},
                         {"support", m.support_size()},
                         {"isolation", firm::json_certificate(iso)},
                         {"boolean_rank", firm::json_certificate(cover)}};
        nlohmann::json simps = nlohmann::json::array();
        for (const auto& w : simp) simps.push_back(firm::json_position(w.position));
        j["simplicial_ones"] = simps;
        if (hole_budget_hit)
            j["odd_hole"] = "budget-exceeded";
        else
            j["odd_hole"] = hole ? firm::json_positions(hole->cycle) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "matrix: " << m.rows() << "x" << m.cols() << ", support "
                  << m.support_size() << "\n";
        std::cout << "isolation number: " << iso.value << "\n";
        if (iso.value > 0) std::cout << "  isolated set: " << positions_text(iso.positions) << "\n";
        std::cout << "boolean rank: " << cover.value << "\n";
        for (const auto& r : cover.rectangles) std::cout << "  rectangle " << rectangle_text(r) << "\n";
        std::cout << "simplicial 1s:";
        if (simp.empty()) std::cout << " none";
        for (const auto& w : simp) std::cout << " " << w.position;
        std::cout << "\n";
        if (hole_budget_hit)
            std::cout << "odd hole: search budget exceeded\n";
        else if (hole)
            std::cout << "odd hole: " << positions_text(hole->cycle) << "\n";
        else
            std::cout << "odd hole: none\n";
    }
    return hole_budget_hit ? kExitBudget : kExitOk;
}

struct CertifyArgs {
    std::string path;
    std::string property;
    bool json = false;
};

int run_certify(const CertifyArgs& a) {
    firm::GenBinMatrix m = load_matrix(a.path);
    firm::PropertyVerdict v;
    if (a.property == "firm")
        v = firm::is_firm(m);
    else if (a.property == "superfirm")
        v = firm::is_superfirm(m);
    else if (a.property == "mnf")
        v = firm::is_mnf(m);
    else if (a.property == "mnsf")
        v = firm::is_mnsf(m);
    else if (a.property == "tb")
        v = firm::is_totally_balanced(m);
    else {
        std::cerr << "unknown property '" << a.property
                  << "' (expected firm, superfirm, mnf, mnsf or tb)\n";
        return kExitUsage;
    }
    if (a.json) {
        std::cout << firm::json_verdict(a.property, v).dump(2) << "\n";
    } else {
        std::cout << a.property << ": " << (v.holds ? "holds" : "fails") << "\n";
        if (v.witness) std::cout << "witness: " << witness_text(*v.witness) << "\n";
    }
    return v.holds ? kExitOk : kExitFails;
}

struct SearchArgs {
    int max_rows = 4;
    int max_cols = 4;
    std::string property = "mnf";
    bool json = false;
};

int run_search(const SearchArgs& a) {
    if (a.property != "mnf") {
        std::cerr << "only --property mnf is supported\n";
        return kExitUsage;
    }
    firm::SearchOptions opts;
    opts.max_rows = a.max_rows;
    opts.max_cols = a.max_cols;
    firm::SearchReport rep = firm::search_mnf(opts);
    if (a.json) {
        nlohmann::json j{{"max_rows", rep.max_rows},
                         {"max_cols", rep.max_cols},
                         {"property", "mnf"},
                         {"matrices_enumerated", rep.matrices_enumerated},
                         {"classes_seen", rep.classes_seen},
                         {"classes_certified", rep.classes_certified},
                         {"complete", rep.complete},
                         {"seconds", rep.seconds}};
        nlohmann::json dims = nlohmann::json::array();
        for (auto [r, c] : rep.dims_scanned) dims.push_back(nlohmann::json::array({r, c}));
        j["dims_scanned"] = dims;
        nlohmann::json hits = nlohmann::json::array();
        for (const auto& h : rep.hits) {
            nlohmann::json rows = nlohmann::json::array();
            for (int r = 0; r < h.representative.rows(); ++r)
                rows.push_back(h.representative.row_string(r));
            hits.push_back({{"key", h.key},
                            {"rows", h.representative.rows()},
                            {"cols", h.representative.cols()},
                            {"matrix", rows},
                            {"isolation", h.isolation},
                            {"boolean_rank", h.boolean_rank}});
        }
        j["hits"] = hits;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "scanned dims up to " << rep.max_rows << "x" << rep.max_cols << ": "
                  << rep.classes_seen << " canonical classes, " << rep.classes_certified
                  << " fully certified, " << rep.hits.size() << " mnf (" << rep.seconds
                  << "s)\n";
        for (const auto& h : rep.hits) {
            std::cout << "mnf class " << h.representative.rows() << "x"
                      << h.representative.cols() << " isolation " << h.isolation
                      << " boolean rank " << h.boolean_rank << "\n"
                      << firm::format_gbm(h.representative);
        }
        if (!rep.complete) std::cout << "WARNING: enumeration budget exceeded, report incomplete\n";
    }
    return rep.complete ? kExitOk : kExitBudget;
}

struct StretchArgs {
    std::string path;
    std::string at;
    std::string set;
    std::string out;
};

int run_stretch(const StretchArgs& a) {
    firm::GenBinMatrix m = load_matrix(a.path);
    firm::GenBinMatrix result = [&] {
        if (!a.at.empty()) return firm::stretch(m, parse_position(a.at));
        return firm::stretch_set(m, parse_position_set(a.set));
    }();
    write_text(a.out, firm::format_gbm(result));
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Boolean rank / isolation number toolkit"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* cgen = app.add_subcommand("gen", "generate a named matrix family");
    cgen->add_option("family", gen.family, "C, H, M, D, T, K5, W, Ibar4, Ibar4p, mnfM, mnfH, mnfD, mnfT")
        ->required();
    cgen->add_option("n", gen.n, "size parameter (families C/H/M/D/T and mnf variants)");
    cgen->add_option("-o,--out", gen.out, "output file (default stdout)");
    cgen->add_flag("--with-questions", gen.with_questions,
                   "substitute the family's question set into the matrix");

    AnalyzeArgs an;
    auto* can = app.add_subcommand("analyze", "report support, isolation number, boolean rank");
    can->add_option("path", an.path, ".gbm file")->required();
    can->add_flag("--json", an.json, "machine-readable output");
    can->add_option("--export-graph", an.graph_out, "write the cover graph edge list");

    CertifyArgs ce;
    auto* cce = app.add_subcommand("certify", "decide a matrix property with witness");
    cce->add_option("path", ce.path, ".gbm file")->required();
    cce->add_option("property", ce.property, "firm | superfirm | mnf | mnsf | tb")->required();
    cce->add_flag("--json", ce.json, "machine-readable output");

    SearchArgs se;
    auto* cse = app.add_subcommand("search", "exhaustive canonical-class property search");
    cse->add_option("--max-rows", se.max_rows, "row bound")->check(CLI::Range(1, 5));
    cse->add_option("--max-cols", se.max_cols, "column bound")->check(CLI::Range(1, 5));
    cse->add_option("--property", se.property, "property to search for (mnf)");
    cse->add_flag("--json", se.json, "machine-readable output");

    StretchArgs st;
    auto* cst = app.add_subcommand("stretch", "apply the stretching operation");
    cst->add_option("path", st.path, ".gbm file")->required();
    auto* at = cst->add_option("--at", st.at, "single position \"r,c\" (1-based)");
    auto* setopt = cst->add_option("--set", st.set, "positions \"r1,c1;r2,c2;...\" (1-based)");
    at->excludes(setopt);
    cst->add_option("-o,--out", st.out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cgen->parsed()) return run_gen(gen);
        if (can->parsed()) return run_analyze(an);
        if (cce->parsed()) return run_certify(ce);
        if (cse->parsed()) return run_search(se);
        if (cst->parsed()) {
            if (st.at.empty() && st.set.empty()) {
                std::cerr << "stretch needs --at or --set\n";
                return kExitUsage;
            }
            return run_stretch(st);
        }
    } catch (const firm::budget_exceeded_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const firm::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
