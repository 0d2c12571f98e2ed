#include "vogan/diagram.hpp"

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "vogan/sweep.hpp"

using namespace vogan;

namespace {

bool any_error_contains(const std::vector<std::string>& errors, const std::string& needle) {
    return std::any_of(errors.begin(), errors.end(), [&](const std::string& e) {
        return e.find(needle) != std::string::npos;
    });
}

Involution swap56() { return Involution{{0, 1, 2, 3, 5, 4}}; }

}  // namespace

TEST_SUITE_BEGIN("diagram");

TEST_CASE("validate accepts the worked diagrams") {
    WeightedVoganDiagram b3_example{cartan_matrix({Family::B, 3}), identity_involution(3),
                                   {0, 1}, {1, 0, 1}};
    CHECK(validate(b3_example).empty());

    WeightedVoganDiagram d6_example{cartan_matrix({Family::D, 6}), swap56(), {0, 3},
                              {2, 0, 0, 0, 1, 1}};
    CHECK(validate(d6_example).empty());
}

TEST_CASE("validate reports each violation separately") {
    SUBCASE("painted node not theta-fixed") {
        WeightedVoganDiagram d{cartan_matrix({Family::D, 6}), swap56(), {4},
                               {2, 0, 0, 0, 1, 1}};
        const auto errors = validate(d);
        REQUIRE(errors.size() == 1);
        CHECK(any_error_contains(errors, "node 5"));
        CHECK(any_error_contains(errors, "not fixed by theta"));
    }
    SUBCASE("weight outside range") {
        WeightedVoganDiagram d{cartan_matrix({Family::B, 3}), identity_involution(3), {},
                               {3, 0, 0}};
        CHECK(any_error_contains(validate(d), "outside {0,1,2}"));
    }
    SUBCASE("weights not theta-symmetric") {
        WeightedVoganDiagram d{cartan_matrix({Family::D, 6}), swap56(), {},
                               {2, 0, 0, 0, 1, 0}};
        CHECK(any_error_contains(validate(d), "not theta-symmetric"));
    }
    SUBCASE("theta not a permutation") {
        WeightedVoganDiagram d{cartan_matrix({Family::B, 3}), Involution{{0, 0, 2}}, {},
                               {0, 0, 0}};
        CHECK(any_error_contains(validate(d), "not a permutation"));
    }
    SUBCASE("theta not an automorphism") {
        WeightedVoganDiagram d{cartan_matrix({Family::B, 3}), Involution{{1, 0, 2}}, {},
                               {0, 0, 0}};
        CHECK(any_error_contains(validate(d), "not an automorphism"));
    }
    SUBCASE("unsorted painted set") {
        WeightedVoganDiagram d{cartan_matrix({Family::B, 3}), identity_involution(3), {1, 0},
                               {0, 0, 0}};
        CHECK(any_error_contains(validate(d), "sorted"));
    }
    SUBCASE("several violations at once") {
        WeightedVoganDiagram d{cartan_matrix({Family::D, 6}), swap56(), {4},
                               {3, 0, 0, 0, 1, 0}};
        const auto errors = validate(d);
        CHECK(errors.size() >= 3);
        CHECK(any_error_contains(errors, "not fixed by theta"));
        CHECK(any_error_contains(errors, "outside {0,1,2}"));
        CHECK(any_error_contains(errors, "not theta-symmetric"));
    }
}

TEST_CASE("validate agrees with the invariants on exhaustive small candidates") {
    for (const SimpleType type : {SimpleType{Family::A, 3}, SimpleType{Family::B, 3},
                                  SimpleType{Family::D, 4}}) {
        CAPTURE(to_string(type));
        const auto diagram = cartan_matrix(type);
        const int n = diagram.rank();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (std::uint32_t painted_mask = 0; painted_mask < (1u << n); ++painted_mask) {
                std::vector<int> painted;
                for (int i = 0; i < n; ++i)
                    if (painted_mask >> i & 1) painted.push_back(i);
                std::vector<int> weights(n, 0);
                // all weight vectors over {0,1,2,3}; the 3s exercise the range check
                const int weight_combos = 1 << (2 * n);
                for (int combo = 0; combo < weight_combos; ++combo) {
                    for (int i = 0; i < n; ++i) weights[i] = (combo >> (2 * i)) & 3;
                    WeightedVoganDiagram d{diagram, Involution{perm}, painted, weights};

                    bool order2 = true, preserves = true;
                    for (int i = 0; i < n; ++i) order2 = order2 && perm[perm[i]] == i;
                    for (int i = 0; i < n; ++i)
                        for (int j = 0; j < n; ++j)
                            preserves =
                                preserves && diagram.cartan[perm[i]][perm[j]] ==
                                                 diagram.cartan[i][j];
                    bool painted_fixed = true;
                    for (int i : painted) painted_fixed = painted_fixed && perm[i] == i;
                    bool weights_ok = true;
                    for (int i = 0; i < n; ++i)
                        weights_ok = weights_ok && weights[i] >= 0 && weights[i] <= 2 &&
                                     weights[i] == weights[perm[i]];

                    const bool expected = order2 && preserves && painted_fixed && weights_ok;
                    CHECK(validate(d).empty() == expected);
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("parsing the worked examples") {
    const auto b5_example = parse_diagram("B5 theta=id J=2,4,5 w=2,0,0,2,0");
    CHECK(b5_example.diagram.type == SimpleType{Family::B, 5});
    CHECK(b5_example.theta.is_identity());
    CHECK(b5_example.painted == std::vector<int>{1, 3, 4});
    CHECK(b5_example.weights == std::vector<int>{2, 0, 0, 2, 0});

    const auto d6_example = parse_diagram("D6 theta=1,2,3,4,6,5 J=1,4 w=2,0,0,0,1,1");
    CHECK(d6_example.theta == swap56());
    CHECK(d6_example.painted == std::vector<int>{0, 3});

    const auto zero = parse_diagram("B3 theta=id J= w=0,0,0");
    CHECK(zero.painted.empty());
    CHECK(zero.weights == std::vector<int>{0, 0, 0});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_diagram("Q3 theta=id J= w=0,0,0"), ParseError);
    try {
        parse_diagram("B3 theta=id J= w=0,0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 18);
        CHECK(std::string(e.what()).find("3 entries") != std::string::npos);
    }
    try {
        parse_diagram("B3 theta=1,2 J= w=0,0,0");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 10);
    }
    CHECK_THROWS_AS(parse_diagram("B3 theta=id J=9 w=0,0,0"), ParseError);
    CHECK_THROWS_AS(parse_diagram("B3 theta=id J= w=0,0,0 trailing"), ParseError);
    CHECK_THROWS_AS(parse_diagram("C2 theta=id J= w=0,0"), ParseError);
    // semantic violations surface from validate, not the parser
    CHECK_THROWS_AS(parse_diagram("D6 theta=1,2,3,4,6,5 J=5 w=2,0,0,0,1,1"),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_diagram("B3 theta=id J= w=3,0,0"), std::invalid_argument);
}

TEST_CASE("round-trips over full small enumerations") {
    for (const SimpleType type :
         {SimpleType{Family::A, 3}, SimpleType{Family::B, 3}, SimpleType{Family::C, 3},
          SimpleType{Family::D, 4}, SimpleType{Family::G, 2}}) {
        CAPTURE(to_string(type));
        const auto diagram = cartan_matrix(type);
        for (const auto& theta : diagram_involutions(diagram)) {
            for_each_diagram(diagram, theta, [&](const WeightedVoganDiagram& d) {
                CHECK(parse_diagram(render_text(d)) == d);
                CHECK(diagram_from_json(diagram_to_json(d)) == d);
            });
        }
    }
}

TEST_CASE("canonical text of the D6 example") {
    const auto d6_example = parse_diagram("D6 theta=1,2,3,4,6,5 J=1,4 w=2,0,0,0,1,1");
    CHECK(render_text(d6_example) == "D6 theta=1,2,3,4,6,5 J=1,4 w=2,0,0,0,1,1");
    const auto zero = parse_diagram("B3 theta=id J= w=0,0,0");
    CHECK(render_text(zero) == "B3 theta=id J= w=0,0,0");
}

TEST_CASE("underlying projections") {
    const auto d6_example = parse_diagram("D6 theta=1,2,3,4,6,5 J=1,4 w=2,0,0,0,1,1");
    const auto [dynkin1, weights1] = underlying_weighted_dynkin(d6_example);
    CHECK(dynkin1.type == SimpleType{Family::D, 6});
    CHECK(weights1 == std::vector<int>{2, 0, 0, 0, 1, 1});

    const auto b5_example = parse_diagram("B5 theta=id J=2,4,5 w=2,0,0,2,0");
    CHECK(underlying_weighted_dynkin(b5_example).second == std::vector<int>{2, 0, 0, 2, 0});
    const auto vogan3 = underlying_vogan(b5_example);
    CHECK(vogan3.theta.is_identity());
    CHECK(vogan3.painted == std::vector<int>{1, 3, 4});

    const auto b3_example = parse_diagram("B3 theta=id J=1,2 w=1,0,1");
    const auto vogan2 = underlying_vogan(b3_example);
    CHECK(vogan2.diagram.type == SimpleType{Family::B, 3});
    CHECK(vogan2.painted == std::vector<int>{0, 1});

    const auto zero = parse_diagram("D4 theta=id J= w=0,0,0,0");
    CHECK(underlying_weighted_dynkin(zero).second == std::vector<int>{0, 0, 0, 0});
    CHECK(underlying_vogan(zero).painted.empty());
}

TEST_CASE("json shape") {
    const auto b5_example = parse_diagram("B5 theta=id J=2,4,5 w=2,0,0,2,0");
    const auto j = diagram_to_json(b5_example);
    CHECK(j.at("type") == "B5");
    CHECK(j.at("theta") == nlohmann::json({1, 2, 3, 4, 5}));
    CHECK(j.at("painted") == nlohmann::json({2, 4, 5}));
    CHECK(j.at("weights") == nlohmann::json({2, 0, 0, 2, 0}));
}

TEST_CASE("renderings carry the drawing conventions") {
    const auto d6_example = parse_diagram("D6 theta=1,2,3,4,6,5 J=1,4 w=2,0,0,0,1,1");
    const auto dot = render_dot(d6_example);
    CHECK(dot.find("style=filled") != std::string::npos);
    CHECK(dot.find("dir=both, style=dashed") != std::string::npos);
    CHECK(dot.find("xlabel=\"2\"") != std::string::npos);

    const auto ascii = render_ascii(parse_diagram("B3 theta=id J=1,2 w=1,0,1"));
    CHECK(ascii.find("=2> 3") != std::string::npos);  // arrow towards the short node
    CHECK(ascii.find("1 # w=1") != std::string::npos);
    CHECK(ascii.find("3 o w=1") != std::string::npos);
}

TEST_SUITE_END();
