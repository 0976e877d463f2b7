#pragma once
// flowchart.hpp - DOT export of the K-table dependency graph.
//
// One stack per n: an E-node holding B(n) (n >= 2) and one K-node per index. A solid arc
// K_{i-2c}(h) -> K_i(n) records where each K_i(n) comes from; two dashed arcs
// K_j(ceil(n/2)) -> E and K_{-j-2}(floor(n/2)) -> E record the cross sum B(n) is taken
// from. When both dashed arcs are the same arc it is emitted once, in bold.

#include "junctionlab/kaprekar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace junctionlab {

std::string k_node_id(Base b, std::uint64_t n, std::uint32_t i);
std::string e_node_id(Base b, std::uint64_t n);

struct FlowArc {
    std::string from;
    std::string to;
    enum class Style { solid, dashed, bold } style = Style::solid;
};

struct FlowChart {
    Base base;
    std::uint64_t n_max = 0;
    std::vector<FlowArc> arcs;
    /// Index j whose cross sum feeds B(n), for n = 2..n_max (entry n-2).
    std::vector<std::uint32_t> chosen_j;

    explicit FlowChart(Base b) : base(b) {}
};

/// The chart for rows 1..n_max of the table (n_max >= 2).
FlowChart build_flowchart(const KTable& table, std::uint64_t n_max);

/// DOT text. Node labels carry the tower values; J(n) is listed in a comment per stack.
std::string to_dot(const FlowChart& chart, const KTable& table);

/// Structural problems in DOT text produced by to_dot(); empty when the chart is sound.
std::vector<std::string> lint_dot(const std::string& dot, const KTable& table, std::uint64_t n_max);

/// n values whose E-node has no incoming arc from the shaded K-node of stack ceil(n/2),
/// i.e. where B(n) is not built on K(ceil(n/2)).
std::vector<std::uint64_t> unshaded_e_nodes(const FlowChart& chart, const KTable& table);

}  // namespace junctionlab
