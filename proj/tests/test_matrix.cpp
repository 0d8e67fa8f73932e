#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <sstream>
#include <stdexcept>

#include "toepblock/matrix.hpp"

using namespace toepblock;

TEST_CASE("model names and links") {
    CHECK(parse_model(model_name(Model::TBI)) == Model::TBI);
    CHECK(parse_model(model_name(Model::TBT)) == Model::TBT);
    CHECK_THROWS_AS(parse_model("wigner"), std::invalid_argument);
    CHECK(model_link(Model::TBI) == LinkKind::CompositeTBI);
    CHECK(model_link(Model::TBT) == LinkKind::CompositeTBT);
}

TEST_CASE("equal labels carry equal entries, distinct labels independent draws") {
    InputSpec spec;
    spec.seed = 77;
    for (LinkKind kind : {LinkKind::SymToeplitz, LinkKind::Wigner}) {
        const int n = 9;
        Link link = make_link(kind, n);
        SymmetricMatrix m = build_patterned(kind, n, spec);
        REQUIRE(m.dim() == n);
        std::map<LinkLabel, double> seen;
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                LinkLabel label = link_eval(link, i, j);
                auto [it, fresh] = seen.emplace(label, m(i - 1, j - 1));
                if (!fresh) CHECK(it->second == m(i - 1, j - 1));
            }
        }
    }
}

TEST_CASE("block matrices are symmetric and label-consistent") {
    InputSpec spec;
    spec.dist = Distribution::Gaussian;
    spec.seed = 31;
    for (Model model : {Model::TBI, Model::TBT}) {
        const int n = 4, k = 3;
        SymmetricMatrix m = build_block_matrix(model, k, n, spec);
        REQUIRE(m.dim() == n * k);
        Link link = make_link(model_link(model), n, k);
        std::map<LinkLabel, double> seen;
        for (int i = 0; i < m.dim(); ++i) {
            for (int j = 0; j < m.dim(); ++j) {
                CHECK(m(i, j) == m(j, i));
                LinkLabel label = link_eval(link, i + 1, j + 1);
                auto [it, fresh] = seen.emplace(label, m(i, j));
                if (!fresh) CHECK(it->second == m(i, j));
            }
        }
    }
}

TEST_CASE("toeplitz block structure places lag values on block diagonals") {
    // With Toeplitz blocks, entry (i,j) depends only on the block lag and
    // i - j within the fold, so shifting both indices by n must not change it.
    InputSpec spec;
    spec.seed = 8;
    const int n = 3, k = 4;
    SymmetricMatrix m = build_block_matrix(Model::TBT, k, n, spec);
    for (int i = 0; i < m.dim() - n; ++i)
        for (int j = 0; j < m.dim() - n; ++j) CHECK(m(i, j) == m(i + n, j + n));
}

TEST_CASE("table source drives explicit entries") {
    // TBI with n = 1 collapses to a scalar symmetric Toeplitz-like matrix:
    // entry (i,j) is the value attached to lag |i-j|.
    std::map<LinkLabel, double> table;
    table[LinkLabel{0, 1, 1}] = 5.0;
    table[LinkLabel{1, 1, 1}] = -2.0;
    table[LinkLabel{2, 1, 1}] = 0.25;
    TableSource source(std::move(table));
    SymmetricMatrix m = build_block_matrix(Model::TBI, 3, 1, source);
    REQUIRE(m.dim() == 3);
    CHECK(m(0, 0) == 5.0);
    CHECK(m(1, 1) == 5.0);
    CHECK(m(0, 1) == -2.0);
    CHECK(m(1, 0) == -2.0);
    CHECK(m(0, 2) == 0.25);
    CHECK(m(2, 0) == 0.25);

    TableSource empty{std::map<LinkLabel, double>{}};
    CHECK_THROWS_AS(build_block_matrix(Model::TBI, 2, 1, empty), std::out_of_range);
}

TEST_CASE("patterned construction rejects composite links") {
    TableSource empty{std::map<LinkLabel, double>{}};
    Link tbi = make_link(LinkKind::CompositeTBI, 2, 2);
    CHECK_THROWS_AS(build_patterned(tbi, empty), std::invalid_argument);
}

TEST_CASE("write and read round-trip exactly") {
    InputSpec spec;
    spec.dist = Distribution::Gaussian;
    spec.seed = 4242;
    SymmetricMatrix m = build_block_matrix(Model::TBT, 3, 2, spec);
    std::stringstream ss;
    write_matrix(m, ss);
    SymmetricMatrix back = read_matrix(ss);
    REQUIRE(back.dim() == m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) CHECK(back(i, j) == m(i, j));
}

TEST_CASE("read rejects malformed input") {
    std::stringstream bad_header("x");
    CHECK_THROWS_AS(read_matrix(bad_header), std::runtime_error);
    std::stringstream negative("-3\n");
    CHECK_THROWS_AS(read_matrix(negative), std::runtime_error);
    std::stringstream truncated("2\n1.0 2.0\n3.0");
    CHECK_THROWS_AS(read_matrix(truncated), std::runtime_error);
}
