#include "junctionlab/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace junctionlab {

std::string format_bfile(const std::vector<std::string>& values, std::uint64_t offset) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += std::to_string(offset + k);
        out += ' ';
        out += values[k];
        out += '\n';
    }
    return out;
}

std::vector<BFileLine> parse_bfile(std::istream& in) {
    std::vector<BFileLine> out;
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw std::runtime_error("b-file line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')
            fail("trailing whitespace");
        const auto sp = line.find(' ');
        if (sp == std::string::npos || sp == 0 || sp + 1 == line.size())
            fail("expected 'index value'");
        const std::string idx = line.substr(0, sp);
        if (idx.find_first_not_of("0123456789") != std::string::npos) fail("bad index");
        BFileLine entry{std::stoull(idx), line.substr(sp + 1)};
        if (entry.value.find(' ') != std::string::npos) fail("more than two fields");
        if (!out.empty() && entry.index <= out.back().index) fail("indices must increase");
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<BFileLine> read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_bfile(in);
}

std::vector<std::vector<std::string>> read_columns(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::vector<std::string> row;
        for (std::string f; fields >> f;) row.push_back(f);
        if (!row.empty()) out.push_back(std::move(row));
    }
    return out;
}

std::string default_fixture_dir() {
#ifdef JUNCTIONLAB_FIXTURE_DIR
    return JUNCTIONLAB_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

}  // namespace junctionlab
