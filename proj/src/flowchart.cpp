#include "junctionlab/flowchart.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <string_view>
#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace junctionlab {

std::string k_node_id(Base b, std::uint64_t n, std::uint32_t i) {
    return "K_b" + std::to_string(b.value()) + "_n" + std::to_string(n) + "_i" + std::to_string(i);
}

std::string e_node_id(Base b, std::uint64_t n) {
    return "E_b" + std::to_string(b.value()) + "_n" + std::to_string(n);
}

namespace {

constexpr const char* kShade = "gray80";

std::string escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out;
}

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char ch) {
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_';
    });
}

std::string_view trim_left(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    return s;
}

struct NodeLine {
    std::string id;
    bool filled = false;
};

// `id [label="..."];` or `id [label="...", style=filled, fillcolor=name];`
std::optional<NodeLine> parse_node(std::string_view line) {
    line = trim_left(line);
    const auto sp = line.find(" [label=\"");
    if (sp == std::string_view::npos || !valid_id(line.substr(0, sp))) return std::nullopt;
    NodeLine out{std::string(line.substr(0, sp)), false};
    std::size_t pos = sp + 9;
    while (pos < line.size() && line[pos] != '"') pos += (line[pos] == '\\') ? 2 : 1;
    if (pos >= line.size()) return std::nullopt;
    const std::string_view rest = line.substr(pos + 1);
    if (rest == "];") return out;
    const std::string_view fill = ", style=filled, fillcolor=";
    if (rest.substr(0, fill.size()) != fill || rest.size() < fill.size() + 3 ||
        rest.substr(rest.size() - 2) != "];")
        return std::nullopt;
    if (!valid_id(rest.substr(fill.size(), rest.size() - fill.size() - 2))) return std::nullopt;
    out.filled = true;
    return out;
}

struct EdgeLine {
    std::string from;
    std::string to;
    std::string style;
};

// `a -> b;`, `a -> b [style=dashed];` or `a -> b [style=bold];`
std::optional<EdgeLine> parse_edge(std::string_view line) {
    line = trim_left(line);
    const auto arrow = line.find(" -> ");
    if (arrow == std::string_view::npos || line.empty() || line.back() != ';') return std::nullopt;
    EdgeLine out;
    out.from = std::string(line.substr(0, arrow));
    std::string_view rest = line.substr(arrow + 4);
    rest.remove_suffix(1);
    const auto attr = rest.find(' ');
    out.style = "solid";
    if (attr != std::string_view::npos) {
        const std::string_view a = rest.substr(attr);
        if (a == " [style=dashed]")
            out.style = "dashed";
        else if (a == " [style=bold]")
            out.style = "bold";
        else
            return std::nullopt;
        rest = rest.substr(0, attr);
    }
    out.to = std::string(rest);
    if (!valid_id(out.from) || !valid_id(out.to)) return std::nullopt;
    return out;
}

// (n, i) of a K-node id.
std::optional<std::pair<std::uint64_t, std::uint32_t>> parse_k_id(const std::string& id) {
    const auto n_at = id.find("_n");
    const auto i_at = id.find("_i");
    if (id.rfind("K_b", 0) != 0 || n_at == std::string::npos || i_at == std::string::npos)
        return std::nullopt;
    return std::make_pair(std::stoull(id.substr(n_at + 2, i_at - n_at - 2)),
                          static_cast<std::uint32_t>(std::stoul(id.substr(i_at + 2))));
}

std::uint32_t chosen_index(const KTable& table, std::uint64_t n) {
    const KTableRow& r = table.row(n);
    const std::uint32_t top = table.row((n + 1) / 2).argmin;
    const bool preferred = std::find(r.J.begin(), r.J.end(), top) != r.J.end();
    if (preferred && table.reduced_split_holds(n)) return top;
    return r.J.front();
}

}  // namespace

FlowChart build_flowchart(const KTable& table, std::uint64_t n_max) {
    if (n_max < 2) throw std::invalid_argument("flowchart needs n_max >= 2");
    const Base b = table.base();
    FlowChart chart(b);
    chart.n_max = n_max;
    for (std::uint64_t n = 2; n <= n_max; ++n) {
        const KTableRow& r = table.row(n);
        for (std::uint32_t i : table.indices()) {
            const std::uint32_t c = r.c.at(i);
            const std::uint32_t src = reduce_index(static_cast<std::int64_t>(i) - 2 * c, b);
            chart.arcs.push_back({k_node_id(b, r.h.at(i), src), k_node_id(b, n, i),
                                  FlowArc::Style::solid});
        }
        const std::uint32_t j = chosen_index(table, n);
        const std::uint32_t p = reduce_index(-static_cast<std::int64_t>(j) - 2, b);
        chart.chosen_j.push_back(j);
        const std::string first = k_node_id(b, (n + 1) / 2, j);
        const std::string second = k_node_id(b, n / 2, p);
        if (first == second) {
            chart.arcs.push_back({first, e_node_id(b, n), FlowArc::Style::bold});
        } else {
            chart.arcs.push_back({first, e_node_id(b, n), FlowArc::Style::dashed});
            chart.arcs.push_back({second, e_node_id(b, n), FlowArc::Style::dashed});
        }
    }
    return chart;
}

std::string to_dot(const FlowChart& chart, const KTable& table) {
    const Base b = chart.base;
    std::ostringstream out;
    out << "digraph junctions_b" << b.value() << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box];\n";
    for (std::uint64_t n = 1; n <= chart.n_max; ++n) {
        const KTableRow& r = table.row(n);
        out << "  subgraph cluster_n" << n << " {\n";
        out << "    label=\"n=" << n << "\";\n";
        if (n >= 2) {
            out << "    // J(" << n << ") = {";
            for (std::size_t k = 0; k < r.J.size(); ++k) out << (k ? "," : "") << r.J[k];
            out << "}, chosen j = " << chart.chosen_j[n - 2] << "\n";
            out << "    " << e_node_id(b, n) << " [label=\"E = " << escape(r.B->render())
                << "\"];\n";
        }
        for (std::uint32_t i : table.indices()) {
            out << "    " << k_node_id(b, n, i) << " [label=\"K" << i << " = "
                << escape(r.K.at(i).render()) << "\"";
            if (i == r.argmin) out << ", style=filled, fillcolor=" << kShade;
            out << "];\n";
        }
        out << "  }\n";
    }
    for (const auto& arc : chart.arcs) {
        out << "  " << arc.from << " -> " << arc.to;
        if (arc.style == FlowArc::Style::dashed) out << " [style=dashed]";
        if (arc.style == FlowArc::Style::bold) out << " [style=bold]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<std::string> lint_dot(const std::string& dot, const KTable& table,
                                  std::uint64_t n_max) {
    const Base b = table.base();
    std::vector<std::string> problems;
    const std::regex header(R"(digraph [A-Za-z_][A-Za-z0-9_]* \{)");
    const std::regex other(R"( *(rankdir=LR;|node \[shape=box\];|subgraph cluster_n\d+ \{|label="n=\d+";|\}|//.*))");

    std::istringstream in(dot);
    std::string line;
    std::set<std::string> declared;
    std::map<std::uint64_t, std::vector<std::uint32_t>> shaded;
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> incoming;
    int depth = 0;
    bool first = true;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (first) {
            first = false;
            if (!std::regex_match(line, header)) problems.push_back("missing digraph header");
            ++depth;
            continue;
        }
        if (auto nd = parse_node(line)) {
            if (!declared.insert(nd->id).second) problems.push_back("node declared twice: " + nd->id);
            if (nd->filled) {
                if (auto key = parse_k_id(nd->id)) shaded[key->first].push_back(key->second);
            }
        } else if (auto ed = parse_edge(line)) {
            incoming[ed->to].emplace_back(ed->from, ed->style);
        } else if (std::regex_match(line, other)) {
            depth += static_cast<int>(std::count(line.begin(), line.end(), '{'));
            depth -= static_cast<int>(std::count(line.begin(), line.end(), '}'));
        } else {
            problems.push_back("unparsable line " + std::to_string(lineno) + ": " + line);
        }
    }
    if (depth != 0) problems.push_back("unbalanced braces");

    for (const auto& [to, arcs] : incoming) {
        if (!declared.count(to)) problems.push_back("arc into undeclared node " + to);
        for (const auto& [from, style] : arcs)
            if (!declared.count(from)) problems.push_back("arc from undeclared node " + from);
    }

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const KTableRow& r = table.row(n);
        const std::string tag = "n=" + std::to_string(n) + ": ";
        for (std::uint32_t i : table.indices()) {
            const std::string id = k_node_id(b, n, i);
            if (!declared.count(id)) problems.push_back(tag + "missing " + id);
            const auto& arcs = incoming[id];
            if (n == 1) {
                if (!arcs.empty()) problems.push_back(tag + id + " has incoming arcs");
                continue;
            }
            if (arcs.size() != 1 || arcs[0].second != "solid") {
                problems.push_back(tag + id + " must have exactly one incoming solid arc");
                continue;
            }
            const std::uint32_t src =
                reduce_index(static_cast<std::int64_t>(i) - 2 * r.c.at(i), b);
            if (arcs[0].first != k_node_id(b, r.h.at(i), src))
                problems.push_back(tag + id + " has the wrong source " + arcs[0].first);
        }
        const auto& marks = shaded[n];
        if (marks.size() != 1 || marks[0] != r.argmin)
            problems.push_back(tag + "shaded node is not the unique argmin");
        if (n == 1) continue;
        const std::string eid = e_node_id(b, n);
        if (!declared.count(eid)) problems.push_back(tag + "missing " + eid);
        const auto& arcs = incoming[eid];
        const bool two_dashed = arcs.size() == 2 && arcs[0].second == "dashed" &&
                                arcs[1].second == "dashed" && arcs[0].first != arcs[1].first;
        const bool one_bold = arcs.size() == 1 && arcs[0].second == "bold" && n % 2 == 0;
        if (!two_dashed && !one_bold) {
            problems.push_back(tag + eid + " needs two dashed arcs or one bold arc (even n)");
            continue;
        }
        // The sources must be a minimizing cross pair K_j(ceil) + K_{-j-2}(floor).
        bool matched = false;
        for (std::uint32_t j : r.J) {
            const std::string a = k_node_id(b, (n + 1) / 2, j);
            const std::string c =
                k_node_id(b, n / 2, reduce_index(-static_cast<std::int64_t>(j) - 2, b));
            if (one_bold && arcs[0].first == a && a == c) matched = true;
            if (two_dashed && ((arcs[0].first == a && arcs[1].first == c) ||
                               (arcs[0].first == c && arcs[1].first == a)))
                matched = true;
        }
        if (!matched) problems.push_back(tag + eid + " sources are not a minimizing cross pair");
    }
    return problems;
}

std::vector<std::uint64_t> unshaded_e_nodes(const FlowChart& chart, const KTable& table) {
    const Base b = chart.base;
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= chart.n_max; ++n) {
        const std::uint64_t top = (n + 1) / 2;
        const std::string shaded = k_node_id(b, top, table.row(top).argmin);
        const std::string eid = e_node_id(b, n);
        const bool fed = std::any_of(chart.arcs.begin(), chart.arcs.end(), [&](const FlowArc& a) {
            return a.to == eid && a.from == shaded;
        });
        if (!fed) out.push_back(n);
    }
    return out;
}

}  // namespace junctionlab
