#include "asmtree/cli/request.hpp"

#include "asmtree/graph_io.hpp"

namespace asmtree::cli {

std::string_view to_string(FamilyKind f) {
  switch (f) {
    case FamilyKind::Star: return "star";
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::Caterpillar: return "caterpillar";
    case FamilyKind::Custom: return "custom";
  }
  return "?";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Enumerate: return "enumerate";
    case Method::Both: return "both";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  if (name == "caterpillar") return FamilyKind::Caterpillar;
  if (name == "custom") return FamilyKind::Custom;
  try {
    switch (parse_family(name)) {
      case Family::Star: return FamilyKind::Star;
      case Family::Path: return FamilyKind::Path;
      case Family::Cycle: return FamilyKind::Cycle;
      case Family::Complete: return FamilyKind::Complete;
    }
  } catch (const std::invalid_argument& e) {
    throw InvalidRequest(e.what());
  }
  throw InvalidRequest("unknown family");
}

Method parse_method(std::string_view name) {
  if (name == "formula") return Method::Formula;
  if (name == "enumerate") return Method::Enumerate;
  if (name == "both") return Method::Both;
  throw InvalidRequest("unknown method: " + std::string(name));
}

std::optional<formulas::SequenceSpec> CountRequest::sequence() const {
  switch (family) {
    case FamilyKind::Star: return formulas::SequenceSpec{Family::Star, rule, timed};
    case FamilyKind::Path: return formulas::SequenceSpec{Family::Path, rule, timed};
    case FamilyKind::Cycle: return formulas::SequenceSpec{Family::Cycle, rule, timed};
    case FamilyKind::Complete: return formulas::SequenceSpec{Family::Complete, rule, timed};
    default: return std::nullopt;
  }
}

Method CountRequest::effective_method() const {
  if (method) return *method;
  const auto seq = sequence();
  return seq && formulas::has_formula(*seq) ? Method::Formula : Method::Enumerate;
}

void CountRequest::check() const {
  const Method m = effective_method();
  if (family == FamilyKind::Caterpillar || family == FamilyKind::Custom) {
    if (m != Method::Enumerate) {
      throw InvalidRequest("no formula is known for " + std::string(to_string(family)) +
                           " graphs; use --method enumerate");
    }
  } else if (m != Method::Enumerate && !formulas::has_formula(*sequence())) {
    throw InvalidRequest("no formula for " + sequence()->str() + "; use --method enumerate");
  }
  if (family == FamilyKind::Caterpillar && legs.empty()) {
    throw InvalidRequest("caterpillar needs --legs");
  }
  if (family == FamilyKind::Custom && graph_file.empty()) {
    throw InvalidRequest("custom family needs --graph-file");
  }
  if (family != FamilyKind::Caterpillar && family != FamilyKind::Custom && n < 1) {
    throw InvalidRequest("--n must be positive");
  }
}

Graph CountRequest::build_graph() const {
  try {
    switch (family) {
      case FamilyKind::Star: return star(n);
      case FamilyKind::Path: return path(n);
      case FamilyKind::Cycle: return cycle(n);
      case FamilyKind::Complete: return complete(n);
      case FamilyKind::Caterpillar: return caterpillar(static_cast<int>(legs.size()), legs);
      case FamilyKind::Custom: return load_graph_file(graph_file);
    }
  } catch (const std::invalid_argument& e) {
    throw InvalidRequest(e.what());
  } catch (const std::runtime_error& e) {
    throw InvalidRequest(e.what());
  }
  throw InvalidRequest("unknown family");
}

std::string CountRequest::cache_key(std::string_view part) const {
  std::string key = "count family=" + std::string(to_string(family)) +
                    " rule=" + std::string(to_string(rule)) + " timed=" + (timed ? "1" : "0") +
                    " part=" + std::string(part);
  if (family == FamilyKind::Caterpillar || family == FamilyKind::Custom) {
    // identify by structure rather than by how it was specified
    const Graph g = build_graph();
    key += " graph=" + std::to_string(g.order()) + ":";
    for (auto [u, v] : g.edges()) key += std::to_string(u) + "-" + std::to_string(v) + ",";
  } else {
    key += " n=" + std::to_string(n);
  }
  return key;
}

}  // namespace asmtree::cli
