#include "peierls/report.hpp"

#include <algorithm>

namespace peierls {

void RelationReport::append(const RelationReport& other) {
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
}

bool RelationReport::all_pass() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const RelationResult& r) { return r.holds; });
}

const RelationResult* RelationReport::find(std::string_view relation) const {
  for (const auto& r : entries_) {
    if (r.relation == relation) return &r;
  }
  return nullptr;
}

std::string RelationReport::to_text() const {
  std::string out;
  for (const auto& r : entries_) {
    out += "RELATION " + r.relation + ": " + (r.holds ? "PASS" : "FAIL");
    if (!r.details.empty()) out += " " + r.details;
    if (r.witness_site) {
      out += " (witness site (" + std::to_string((*r.witness_site)[0]) + "," +
             std::to_string((*r.witness_site)[1]) + "))";
    }
    out += "\n";
  }
  return out;
}

nlohmann::json RelationReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& r : entries_) {
    nlohmann::json entry{{"relation", r.relation}, {"holds", r.holds}};
    if (r.witness_site) entry["witness_site"] = {(*r.witness_site)[0], (*r.witness_site)[1]};
    else entry["witness_site"] = nullptr;
    if (!r.details.empty()) entry["details"] = r.details;
    arr.push_back(std::move(entry));
  }
  return arr;
}

}  // namespace peierls
