#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prsequiv {

// One row of the decidability registry shipped in data/facts.tsv.
struct FactEntry {
  std::string left;
  std::string relation;  // bisim, weak_bisim, sim_preorder, sim_equiv, trace
  std::string right;
  std::string status;  // decidable, undecidable, open, highly_undecidable
  std::string complexity;
  std::string note;
};

// Tab-separated rows; '#' lines are comments. Throws ParseError on malformed rows.
std::vector<FactEntry> parse_facts(std::string_view tsv);
const std::vector<FactEntry>& builtin_facts();

// Class names are matched case-insensitively with '-' ignored (OC-A = OCA). The
// symmetric relations also match with the sides swapped.
std::optional<FactEntry> lookup_fact(std::string_view left, std::string_view relation, std::string_view right);

// "decidable, PSPACE-complete"
std::string describe_fact(const FactEntry& e);

}  // namespace prsequiv
