#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asmtree/assembly_tree.hpp"
#include "asmtree/formulas.hpp"
#include "asmtree/graph.hpp"

namespace asmtree::cli {

inline constexpr const char* kVersion = "1.0.0";

enum class FamilyKind { Star, Path, Cycle, Complete, Caterpillar, Custom };
enum class Method { Formula, Enumerate, Both };

std::string_view to_string(FamilyKind f);
std::string_view to_string(Method m);
FamilyKind parse_family_kind(std::string_view name);
Method parse_method(std::string_view name);

/// Raised for requests the CLI must reject with exit status 2.
class InvalidRequest : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CountRequest {
  FamilyKind family = FamilyKind::Path;
  GluingRule rule = GluingRule::Connected;
  bool timed = false;
  int n = 0;
  std::optional<Method> method;  // unset: formula when one exists, else enumerate
  std::vector<int> legs;         // caterpillar
  std::string graph_file;        // custom

  /// Throws InvalidRequest for inconsistent requests, including a formula
  /// method for caterpillar or custom graphs.
  void check() const;
  Method effective_method() const;
  /// Formula key, only for the four families with formulas.
  std::optional<formulas::SequenceSpec> sequence() const;
  Graph build_graph() const;
  /// Canonical text identifying the count, independent of file paths.
  std::string cache_key(std::string_view part) const;
};

}  // namespace asmtree::cli
