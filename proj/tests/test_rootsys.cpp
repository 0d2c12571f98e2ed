#include "vogan/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

using namespace vogan;

namespace {

Root root(std::vector<int> coeffs) { return Root{std::move(coeffs)}; }

std::vector<SimpleType> all_types_up_to_rank(int max_rank) {
    std::vector<SimpleType> types;
    for (int n = 1; n <= max_rank; ++n) types.push_back({Family::A, n});
    for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
    for (int n = 3; n <= max_rank; ++n) types.push_back({Family::C, n});
    for (int n = 4; n <= max_rank; ++n) types.push_back({Family::D, n});
    for (int n = 6; n <= std::min(max_rank, 8); ++n) types.push_back({Family::E, n});
    if (max_rank >= 4) types.push_back({Family::F, 4});
    if (max_rank >= 2) types.push_back({Family::G, 2});
    return types;
}

// Independent check used against the constructive implementation.
std::vector<std::vector<int>> brute_force_involutions(const DynkinDiagram& d) {
    const int n = d.rank();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> found;
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = p[p[i]] == i;
        for (int i = 0; i < n && ok; ++i)
            for (int j = 0; j < n && ok; ++j) ok = d.cartan[p[i]][p[j]] == d.cartan[i][j];
        if (ok) found.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return found;
}

}  // namespace

TEST_SUITE_BEGIN("rootsys");

TEST_CASE("type parsing and rank bounds") {
    CHECK(parse_type("B5") == SimpleType{Family::B, 5});
    CHECK(parse_type("A1") == SimpleType{Family::A, 1});
    CHECK(parse_type("E8") == SimpleType{Family::E, 8});
    CHECK(to_string(SimpleType{Family::D, 6}) == "D6");

    CHECK_THROWS_WITH_AS(parse_type("A0"), doctest::Contains("A requires rank >= 1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("B1"), doctest::Contains("B requires rank >= 2"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("C2"), doctest::Contains("C requires rank >= 3"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("D3"), doctest::Contains("D requires rank >= 4"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("E5"), doctest::Contains("E requires rank in {6,7,8}"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("E9"), doctest::Contains("E requires rank in {6,7,8}"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("F3"), doctest::Contains("F requires rank 4"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_type("G4"), doctest::Contains("G requires rank 2"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_type("X5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type("B"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type(""), std::invalid_argument);
}

TEST_CASE("Cartan matrices under the fixed numbering") {
    CHECK(cartan_matrix({Family::A, 1}).cartan == std::vector<std::vector<int>>{{2}});

    const auto b3 = cartan_matrix({Family::B, 3});
    CHECK(b3.cartan == std::vector<std::vector<int>>{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
    CHECK(b3.norm2 == std::vector<int>{2, 2, 1});  // node 3 short
    CHECK(positive_roots(b3).size() == 9);

    const auto g2 = cartan_matrix({Family::G, 2});
    const std::multiset<int> off{g2.cartan[0][1], g2.cartan[1][0]};
    CHECK(off == std::multiset<int>{-3, -1});
    CHECK(positive_roots(g2).size() == 6);

    const auto c4 = cartan_matrix({Family::C, 4});
    CHECK(c4.cartan[2][3] == -2);  // node 3 short, node 4 long
    CHECK(c4.cartan[3][2] == -1);
    CHECK(c4.norm2 == std::vector<int>{1, 1, 1, 2});

    const auto f4 = cartan_matrix({Family::F, 4});
    CHECK(f4.cartan[1][2] == -2);  // nodes 1,2 short, 3,4 long
    CHECK(f4.cartan[2][1] == -1);
    CHECK(f4.norm2 == std::vector<int>{1, 1, 2, 2});
    CHECK(f4.bond(0, 1) == 1);
    CHECK(f4.bond(1, 2) == 2);

    // branch nodes: D6 forks at node 4, E7 hangs node 2 off node 4
    CHECK(cartan_matrix({Family::D, 6}).neighbors(3) == std::vector<int>{2, 4, 5});
    CHECK(cartan_matrix({Family::E, 7}).neighbors(3) == std::vector<int>{1, 2, 4});
}

TEST_CASE("positive root counts match the closed forms") {
    for (const auto type : all_types_up_to_rank(8)) {
        CAPTURE(to_string(type));
        CHECK(positive_roots(cartan_matrix(type)).size() == positive_root_count(type));
    }
}

TEST_CASE("specific root memberships") {
    const auto a2 = positive_roots(cartan_matrix({Family::A, 2}));
    CHECK(a2.size() == 3);
    CHECK(std::count(a2.begin(), a2.end(), root({1, 0})) == 1);
    CHECK(std::count(a2.begin(), a2.end(), root({0, 1})) == 1);
    CHECK(std::count(a2.begin(), a2.end(), root({1, 1})) == 1);

    const auto b3 = positive_roots(cartan_matrix({Family::B, 3}));
    CHECK(std::count(b3.begin(), b3.end(), root({0, 1, 2})) == 1);  // a2+2a3

    const auto b5 = positive_roots(cartan_matrix({Family::B, 5}));
    for (const auto& expected :
         {root({1, 1, 0, 0, 0}), root({1, 1, 1, 0, 0}), root({0, 0, 0, 1, 0}),
          root({0, 0, 0, 1, 2}), root({0, 0, 1, 1, 0}), root({0, 1, 1, 1, 1}),
          root({0, 0, 1, 1, 2})}) {
        CAPTURE(to_string(expected));
        CHECK(std::count(b5.begin(), b5.end(), expected) == 1);
    }
}

TEST_CASE("root order is graded then lexicographic, without duplicates") {
    for (const auto type : all_types_up_to_rank(6)) {
        CAPTURE(to_string(type));
        const auto roots = positive_roots(cartan_matrix(type));
        CHECK(std::is_sorted(roots.begin(), roots.end(), root_less));
        std::set<std::vector<int>> unique;
        for (const auto& r : roots) {
            CHECK(r.length() > 0);
            unique.insert(r.coeffs);
        }
        CHECK(unique.size() == roots.size());
    }
}

TEST_CASE("simple reflections keep positive roots in the system") {
    for (const auto type : all_types_up_to_rank(6)) {
        CAPTURE(to_string(type));
        const auto d = cartan_matrix(type);
        const int n = d.rank();
        const auto roots = positive_roots(d);
        std::set<std::vector<int>> members;
        for (const auto& r : roots) members.insert(r.coeffs);
        for (const auto& r : roots) {
            for (int i = 0; i < n; ++i) {
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += d.cartan[i][j] * r.coeffs[j];
                std::vector<int> reflected = r.coeffs;
                reflected[i] -= pairing;
                std::vector<int> e(n, 0);
                e[i] = 1;
                if (r.coeffs == e) continue;  // s_i(alpha_i) = -alpha_i
                CAPTURE(to_string(r));
                CAPTURE(i);
                CHECK(members.count(reflected) == 1);
            }
        }
    }
}

TEST_CASE("root rendering") {
    CHECK(to_string(root({0, 1, 2})) == "a2+2a3");
    CHECK(to_string(root({1, 0, 0})) == "a1");
    CHECK(to_string(root({1, 1, 1, 1, 1})) == "a1+a2+a3+a4+a5");
}

TEST_CASE("root lengths are coefficient sums") {
    CHECK(root_length(root({1, 0, 0})) == 1);
    CHECK(root_length(root({0, 1, 2})) == 3);
    CHECK(root_length(root({0, 1, 1, 1, 1})) == 4);
}

TEST_CASE("diagram involutions per family") {
    CHECK(diagram_involutions(cartan_matrix({Family::B, 3})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::A, 1})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::G, 2})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::F, 4})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::E, 7})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::E, 8})).size() == 1);
    CHECK(diagram_involutions(cartan_matrix({Family::E, 6})).size() == 2);
    CHECK(diagram_involutions(cartan_matrix({Family::D, 4})).size() == 4);

    const auto d6 = diagram_involutions(cartan_matrix({Family::D, 6}));
    REQUIRE(d6.size() == 2);
    CHECK(d6[0].is_identity());
    CHECK(d6[1].image == std::vector<int>{0, 1, 2, 3, 5, 4});  // swaps the fork nodes

    const auto a4 = diagram_involutions(cartan_matrix({Family::A, 4}));
    REQUIRE(a4.size() == 2);
    CHECK(a4[1].image == std::vector<int>{3, 2, 1, 0});
}

TEST_CASE("involutions square to the identity and preserve the Cartan matrix") {
    for (const auto type : all_types_up_to_rank(8)) {
        CAPTURE(to_string(type));
        const auto d = cartan_matrix(type);
        for (const auto& theta : diagram_involutions(d)) {
            const int n = d.rank();
            for (int i = 0; i < n; ++i) CHECK(theta.image[theta.image[i]] == i);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(d.cartan[theta.image[i]][theta.image[j]] == d.cartan[i][j]);
        }
    }
}

TEST_CASE("involutions agree with a brute-force permutation scan") {
    for (const auto type : all_types_up_to_rank(8)) {
        CAPTURE(to_string(type));
        const auto d = cartan_matrix(type);
        const auto expected = brute_force_involutions(d);
        const auto got = diagram_involutions(d);
        REQUIRE(got.size() == expected.size());
        for (std::size_t k = 0; k < got.size(); ++k) CHECK(got[k].image == expected[k]);
    }
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(cartan_matrix({Family::D, 4})).size() == 6);
    CHECK(diagram_automorphisms(cartan_matrix({Family::A, 3})).size() == 2);
    CHECK(diagram_automorphisms(cartan_matrix({Family::B, 3})).size() == 1);
    CHECK(diagram_automorphisms(cartan_matrix({Family::E, 6})).size() == 2);
}

TEST_SUITE_END();
