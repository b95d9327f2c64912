#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "asmtree/formulas.hpp"
#include "asmtree/natural.hpp"

namespace asmtree::cli {

using FormulaProvider =
    std::function<std::optional<Natural>(const formulas::SequenceSpec&, int)>;

struct AppOptions {
  /// Where the count cache and fetched b-files live; unset disables both.
  std::optional<std::filesystem::path> cache_dir;
  /// Base URL for --fetch (ASMTREE_OEIS_BASE_URL).
  std::optional<std::string> oeis_base_url;
  /// Formula source for every command; tests swap in faulty providers.
  FormulaProvider formula = formulas::evaluate;

  static AppOptions from_environment();
};

/// The `asmtree` command line:
///   asmtree <count|table|trees|series|oeis> [flags]
/// Exit status 0 on success, 1 on a failed verification (formula/oracle
/// disagreement, series mismatch, b-file mismatch), 2 on invalid input.
class App {
public:
  explicit App(AppOptions options = AppOptions::from_environment());

  /// args excludes the program name.
  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

private:
  AppOptions options_;
};

}  // namespace asmtree::cli
