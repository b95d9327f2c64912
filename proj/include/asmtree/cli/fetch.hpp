#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

namespace asmtree::cli {

class FetchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Downloads <base_url>/<A-number>/b<digits>.txt into dest_dir unless a copy
/// is already there, and returns the local path. `a_number` looks like
/// "A000670".
std::filesystem::path fetch_bfile(const std::string& base_url, const std::string& a_number,
                                  const std::filesystem::path& dest_dir);

}  // namespace asmtree::cli
