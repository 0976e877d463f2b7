#include "junctionlab/flowchart.hpp"

#include <doctest.h>

#include <algorithm>
#include <regex>

using namespace junctionlab;

namespace {

std::size_t count_matches(const std::string& text, const std::regex& re) {
    return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                  std::sregex_iterator()));
}

}  // namespace

TEST_CASE("node ids") {
    CHECK(k_node_id(Base(7), 13, 4) == "K_b7_n13_i4");
    CHECK(e_node_id(Base(9), 8) == "E_b9_n8");
}

TEST_CASE("smallest chart") {
    const KTable t(Base(2), 2);
    const auto chart = build_flowchart(t, 2);
    const std::string dot = to_dot(chart, t);
    CHECK(count_matches(dot, std::regex(R"(^\s*K_b2_n\d+_i\d+ \[)", std::regex::multiline)) == 2);
    CHECK(count_matches(dot, std::regex(R"(^\s*E_b2_n\d+ \[)", std::regex::multiline)) == 1);
    // K_0(2) = cB(2) + K_0(1); the cross sum K_0(1) + K_0(1) is a single bold arc.
    CHECK(dot.find("K_b2_n1_i0 -> K_b2_n2_i0") != std::string::npos);
    CHECK(dot.find("K_b2_n1_i0 -> E_b2_n2 [style=bold]") != std::string::npos);
    CHECK(lint_dot(dot, t, 2).empty());
    CHECK_THROWS(build_flowchart(t, 1));
}

TEST_CASE("charts for bases 2..10 pass the structural lint") {
    for (std::uint32_t b = 2; b <= 10; ++b) {
        const KTable t(Base(b), 16);
        const std::string dot = to_dot(build_flowchart(t, 16), t);
        const auto problems = lint_dot(dot, t, 16);
        CHECK_MESSAGE(problems.empty(), "b=" << b << ": " << (problems.empty() ? "" : problems.front()));
        CHECK(dot.rfind("digraph junctions_b" + std::to_string(b), 0) == 0);
    }
}

TEST_CASE("E-nodes without an arc from the shaded node") {
    auto missing = [](std::uint32_t b) {
        const KTable t(Base(b), 16);
        return unshaded_e_nodes(build_flowchart(t, 16), t);
    };
    CHECK(missing(7) == std::vector<std::uint64_t>{13, 15, 16});
    CHECK(missing(4) == std::vector<std::uint64_t>{13, 15, 16});
    CHECK(missing(9) == std::vector<std::uint64_t>{8, 9, 10, 11, 12, 13, 14, 16});
    for (std::uint32_t b : {2U, 3U, 5U, 6U, 8U, 10U}) CHECK_MESSAGE(missing(b).empty(), "b=" << b);
}

TEST_CASE("lint catches damaged charts") {
    const KTable t(Base(5), 6);
    const std::string dot = to_dot(build_flowchart(t, 6), t);
    REQUIRE(lint_dot(dot, t, 6).empty());

    std::string no_shade = dot;
    const auto pos = no_shade.find("style=filled, fillcolor=gray80");
    REQUIRE(pos != std::string::npos);
    no_shade.erase(pos, std::string("style=filled, fillcolor=gray80").size());
    CHECK_FALSE(lint_dot(no_shade, t, 6).empty());

    std::string dropped = dot;
    const auto arc = dropped.find(" -> K_b5_n6_i0");
    REQUIRE(arc != std::string::npos);
    const auto line_start = dropped.rfind('\n', arc) + 1;
    dropped.erase(line_start, dropped.find('\n', arc) - line_start + 1);
    CHECK_FALSE(lint_dot(dropped, t, 6).empty());

    CHECK_FALSE(lint_dot("graph {}", t, 6).empty());
}

TEST_CASE("DOT output is deterministic") {
    const KTable t(Base(10), 16);
    CHECK(to_dot(build_flowchart(t, 16), t) == to_dot(build_flowchart(t, 16), t));
}
