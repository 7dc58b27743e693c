#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "peierls/phase.hpp"

namespace peierls {

struct RelationResult {
  std::string relation;
  bool holds = false;
  std::optional<Site2> witness_site;  // a site where the two sides differ
  std::string details;
};

// Line-oriented "RELATION <name>: PASS|FAIL <details>" report with a JSON
// mirror [{relation, holds, witness_site}, ...].
class RelationReport {
 public:
  void add(RelationResult r) { entries_.push_back(std::move(r)); }
  void add(std::string relation, bool holds, std::string details = {},
           std::optional<Site2> witness = std::nullopt) {
    entries_.push_back({std::move(relation), holds, witness, std::move(details)});
  }
  void append(const RelationReport& other);

  const std::vector<RelationResult>& entries() const { return entries_; }
  bool all_pass() const;
  const RelationResult* find(std::string_view relation) const;

  std::string to_text() const;
  nlohmann::json to_json() const;

 private:
  std::vector<RelationResult> entries_;
};

}  // namespace peierls
