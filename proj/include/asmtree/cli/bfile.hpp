#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "asmtree/natural.hpp"

namespace asmtree::cli {

class MalformedBFile : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct BFileTerm {
  std::int64_t index;
  Natural value;
};

/// Parses "index value" lines; blank lines and lines starting with '#' are
/// skipped. Negative values are rejected (every sequence here counts
/// objects).
std::vector<BFileTerm> parse_bfile(std::istream& in);
std::vector<BFileTerm> read_bfile(const std::filesystem::path& file);

}  // namespace asmtree::cli
