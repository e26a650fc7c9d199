#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fewweight/ring_code.hpp"

using namespace fewweight;

namespace {

std::map<int, size_t> by_lemma(const std::vector<LemmaReport>& rs) {
    std::map<int, size_t> n;
    for (const auto& r : rs) ++n[r.lemma];
    return n;
}

}  // namespace

TEST_CASE("lemma filter accepts 1 and 3..17 only") {
    const FieldCtx F = build_field(3, 3);
    CHECK_THROWS_AS(verify_lemma(F, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma(F, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma(F, 18, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_lemma(F, -5, 1), std::invalid_argument);
}

TEST_CASE("every lemma matches its oracle at (3,3) (odd m)") {
    const FieldCtx F = build_field(3, 3);
    const auto reports = verify_all_lemmas(F, 42);
    const auto counts = by_lemma(reports);
    const std::map<int, size_t> expect = {{1, 1},  {3, 4},  {4, 1},  {5, 2},
                                          {6, 2},  {7, 2},  {8, 3},  {9, 2},
                                          {10, 3}, {11, 3}, {12, 2}, {13, 2},
                                          {14, 9}, {15, 7}, {16, 7}, {17, 4}};
    CHECK(counts == expect);
    for (const auto& r : reports) {
        CAPTURE(r.lemma);
        CAPTURE(r.case_label);
        CHECK(r.match);
        CHECK((r.vacuous || r.checked > 0));
    }
}

TEST_CASE("every lemma matches its oracle at (3,4) (even m), vacuous rows flagged") {
    const FieldCtx F = build_field(3, 4);
    const auto reports = verify_all_lemmas(F, 42);
    const auto counts = by_lemma(reports);
    const std::map<int, size_t> expect = {{1, 1},  {3, 4},  {4, 1},  {5, 2},
                                          {6, 2},  {7, 2},  {8, 3},  {9, 2},
                                          {10, 3}, {11, 3}, {12, 2}, {13, 2},
                                          {14, 7}, {15, 8}, {16, 5}, {17, 5}};
    CHECK(counts == expect);
    // vacuous rows at (3,4): eta(c3^2-c1c2)=1 never holds at p=3 (Lemmas 11,
    // 14, 15), and the alpha=beta=gamma=0 admissible class is empty (16, 17)
    std::vector<std::pair<int, std::string>> vacuous;
    for (const auto& r : reports) {
        CAPTURE(r.lemma);
        CAPTURE(r.case_label);
        CHECK(r.match);
        if (r.vacuous) {
            vacuous.emplace_back(r.lemma, r.case_label);
            if (r.lemma >= 16) CHECK(r.note.find("never realized") != std::string::npos);
        }
    }
    const std::vector<std::pair<int, std::string>> expect_vacuous = {
        {11, "eta(c3^2-c1c2) = 1"},
        {14, "c1,c2,c3 != 0, eta(c3^2-c1c2) = 1"},
        {15, "c1,c2,c3 != 0, eta(c3^2-c1c2) = 1"},
        {16, "alpha = beta = gamma = 0"},
        {17, "alpha = beta = gamma = 0"},
    };
    CHECK(vacuous == expect_vacuous);

    // the unrealizable Omega formula value at (3,4) is negative
    for (const auto& r : verify_lemma(F, 17, 42))
        if (r.vacuous) CHECK(r.note.find("-3") != std::string::npos);
}

TEST_CASE("larger grid points: sampled rows still match") {
    for (const auto& [p, m] :
         std::vector<std::pair<uint32_t, uint32_t>>{{3, 5}, {5, 3}, {7, 3}}) {
        const FieldCtx F = build_field(p, m);
        CAPTURE(p);
        CAPTURE(m);
        for (int lemma : {1, 15, 16, 17})
            for (const auto& r : verify_lemma(F, lemma, 7)) {
                CAPTURE(r.lemma);
                CAPTURE(r.case_label);
                CHECK(r.match);
            }
    }
    // all four odd-m Omega rows are populated at (3,5)
    const FieldCtx F35 = build_field(3, 5);
    for (const auto& r : verify_lemma(F35, 17, 7)) {
        CHECK(!r.vacuous);
        CHECK(r.checked > 0);
    }
}

TEST_CASE("seeded sampling is reproducible") {
    const FieldCtx F = build_field(3, 5);
    const auto a = verify_lemma(F, 16, 123);
    const auto b = verify_lemma(F, 16, 123);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].case_label == b[i].case_label);
        CHECK(a[i].checked == b[i].checked);
        CHECK(a[i].closed_str == b[i].closed_str);
        CHECK(a[i].oracle_str == b[i].oracle_str);
        CHECK(a[i].match == b[i].match);
    }
    // a different seed samples different pairs but still matches everywhere
    for (const auto& r : verify_lemma(F, 16, 321)) CHECK(r.match);
}

TEST_CASE("degenerate parameters produce explicit vacuous reports") {
    const FieldCtx F31 = build_field(3, 1);
    const auto l6 = verify_lemma(F31, 6, 1);
    REQUIRE(l6.size() == 2);
    CHECK(l6[0].vacuous);  // no xi != 0 with Tr(xi^2) = 0 in F_3
    CHECK(l6[0].match);
    CHECK_FALSE(l6[1].vacuous);

    const auto l17 = verify_lemma(F31, 17, 1);
    REQUIRE(l17.size() == 1);
    CHECK(l17[0].vacuous);

    // m = 1 has no admissible pairs at all
    for (const auto& r : verify_lemma(F31, 16, 1)) {
        CHECK(r.vacuous);
        CHECK(r.match);
    }
}
