// junctionlab - command-line front end: generator queries, self/junction streams,
// K-table reports, flow-chart export and the verification suites.

#include "junctionlab/bfile.hpp"
#include "junctionlab/flowchart.hpp"
#include "junctionlab/inverse.hpp"
#include "junctionlab/kaprekar.hpp"
#include "junctionlab/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace jl = junctionlab;

namespace {

constexpr const char* kOverflow = "overflow";

jl::Nat parse_number(const std::string& text, jl::Base b) {
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos)
        return jl::Nat(text);
    const auto value = jl::parse_tower(text, b).to_natural();
    if (!value) throw std::runtime_error("'" + text + "' is too large to expand");
    return *value;
}

std::string join(const std::vector<std::uint32_t>& v) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? "," : "") + std::to_string(v[k]);
    return out;
}

std::string show(const jl::TowerInt& x, const std::string& format) {
    if (format != "decimal") return x.render();
    const auto digits = x.to_natural();
    return digits ? jl::to_string(*digits) : kOverflow;
}

void print_ktable(std::ostream& out, const jl::KTable& table, std::uint64_t n_max,
                  const std::string& format) {
    const jl::Base b = table.base();
    if (format == "quasi") out << "# cB(m) = " << b.value() << "^B(m)+1\n";
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const auto& row = table.row(n);
        out << "n = " << n << '\n';
        if (row.B) out << "  B = " << show(*row.B, format) << '\n';
        for (const auto& [i, value] : row.K) {
            out << "  K_" << i << " = ";
            if (format == "quasi")
                out << jl::render(jl::quasi_rep(table, n, i), b);
            else
                out << show(value, format);
            if (n >= 2) out << "  [c=" << row.c.at(i) << " h=" << row.h.at(i) << ']';
            out << '\n';
        }
        out << "  K = " << show(row.Kmin, format) << '\n';
        out << "  tau = " << row.tau(b) << '\n';
        if (n >= 2) out << "  J = {" << join(row.J) << "}\n";
    }
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Inverse digit-sum map and Kaprekar junction tables in any base"};
    app.require_subcommand(1);

    std::uint32_t base = 10;
    auto add_base = [&](CLI::App* cmd) {
        cmd->add_option("--base", base, "Number base")->check(CLI::Range(2U, 1U << 20U));
    };

    std::string number;
    auto* gen = app.add_subcommand("gen", "List the generators of u, one per line");
    add_base(gen);
    gen->add_option("u", number, "Integer or tower literal")->required();

    auto* count = app.add_subcommand("count", "Print the number of generators of u");
    add_base(count);
    count->add_option("u", number, "Integer or tower literal")->required();

    std::uint64_t limit = 0;
    bool bfile = false;
    auto add_stream = [&](const char* name, const char* help) {
        auto* cmd = app.add_subcommand(name, help);
        add_base(cmd);
        cmd->add_option("--limit", limit, "Number of terms")->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--bfile", bfile, "Emit 'index value' lines starting at index 1");
        return cmd;
    };
    auto* self = add_stream("self", "Numbers with no generator");
    auto* junction = add_stream("junction", "Numbers with two or more generators");

    std::uint64_t n_max = 0;
    std::string format = "tower";
    std::string out_path;
    auto* ktable = app.add_subcommand("ktable", "B(n), K_i(n), K(n), tau(n) and J(n) for n = 1..N");
    add_base(ktable);
    ktable->add_option("--n", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    ktable->add_option("--format", format, "tower, quasi or decimal")
        ->check(CLI::IsMember({"tower", "quasi", "decimal"}));
    ktable->add_option("--out", out_path, "Output file");

    auto* flow = app.add_subcommand("flowchart", "DOT graph of the K-table recurrence");
    add_base(flow);
    flow->add_option("--n", n_max, "Largest n")->required()->check(CLI::Range(2U, 1U << 16U));
    flow->add_option("--out", out_path, "Output file");

    std::string suite;
    std::vector<std::uint32_t> bases;
    std::uint64_t verify_n = 16;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "oracle, tables, properties or fixtures")
        ->required()
        ->check(CLI::IsMember({"oracle", "tables", "properties", "fixtures"}));
    verify->add_option("--base", bases, "Bases to check (default 2..10)")
        ->check(CLI::Range(2U, 64U));
    verify->add_option("--limit", limit, "Oracle: largest u")->check(CLI::PositiveNumber);
    verify->add_option("--n", verify_n, "Properties: largest n")->check(CLI::Range(2U, 64U));

    CLI11_PARSE(app, argc, argv);

    try {
        const jl::Base b(base);
        if (gen->parsed()) {
            for (const auto& v : jl::generators(parse_number(number, b), b))
                std::cout << jl::to_string(v) << '\n';
        } else if (count->parsed()) {
            std::cout << jl::count_generators(parse_number(number, b), b) << '\n';
        } else if (self->parsed() || junction->parsed()) {
            const bool want_self = self->parsed();
            const auto values = jl::stream_by_count(
                b, [&](std::uint32_t f) { return want_self ? f == 0 : f >= 2; }, limit);
            if (bfile) {
                std::vector<std::string> text;
                for (auto v : values) text.push_back(std::to_string(v));
                std::cout << jl::format_bfile(text, 1);
            } else {
                for (auto v : values) std::cout << v << '\n';
            }
        } else if (ktable->parsed()) {
            const jl::KTable table(b, n_max);
            std::ostringstream text;
            print_ktable(text, table, n_max, format);
            write_output(out_path, text.str());
        } else if (flow->parsed()) {
            const jl::KTable table(b, n_max);
            const std::string dot = jl::to_dot(jl::build_flowchart(table, n_max), table);
            const auto problems = jl::lint_dot(dot, table, n_max);
            if (!problems.empty()) {
                for (const auto& p : problems) std::cerr << "lint: " << p << '\n';
                return 1;
            }
            write_output(out_path, dot);
        } else if (verify->parsed()) {
            jl::VerifyOptions opts;
            if (!bases.empty()) opts.bases = bases;
            if (limit != 0) opts.limit = limit;
            opts.n_max = verify_n;
            const auto report = jl::run_suite(suite, opts);
            std::cout << report.format();
            return report.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
