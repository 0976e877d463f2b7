#pragma once
// bfile.hpp - OEIS b-file reading/writing and the whitespace-column fixture format.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace junctionlab {

struct BFileLine {
    std::uint64_t index;
    std::string value;

    bool operator==(const BFileLine&) const = default;
};

/// "index value" lines, indices counting up from offset.
std::string format_bfile(const std::vector<std::string>& values, std::uint64_t offset);

/// Parses b-file text: skips blank and '#' lines, requires strictly increasing indices
/// and no trailing whitespace. Throws std::runtime_error with the line number otherwise.
std::vector<BFileLine> parse_bfile(std::istream& in);
std::vector<BFileLine> read_bfile(const std::string& path);

/// Whitespace-separated columns, one record per line; blank and '#' lines skipped.
std::vector<std::vector<std::string>> read_columns(const std::string& path);

/// Directory holding the bundled fixture files.
std::string default_fixture_dir();

}  // namespace junctionlab
