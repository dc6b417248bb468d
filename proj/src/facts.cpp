#include "prsequiv/facts.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "prsequiv/error.hpp"

namespace prsequiv {

extern const char* const kFactsTsv;

namespace {

const std::set<std::string> kRelations{"bisim", "weak_bisim", "sim_preorder", "sim_equiv", "trace"};
const std::set<std::string> kStatuses{"decidable", "undecidable", "open", "highly_undecidable"};

std::string class_key(std::string_view s) {
  std::string k;
  for (char c : s)
    if (c != '-') k += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  // Normed classes keep their lower-case prefix.
  if (k.size() > 1 && k[0] == 'N' && (k == "NBPA" || k == "NBPP" || k == "NPA")) k[0] = 'n';
  return k;
}

}  // namespace

std::vector<FactEntry> parse_facts(std::string_view tsv) {
  std::vector<FactEntry> out;
  std::size_t line_no = 0, start = 0;
  while (start < tsv.size()) {
    std::size_t end = tsv.find('\n', start);
    if (end == std::string_view::npos) end = tsv.size();
    std::string_view line = tsv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> f;
    std::size_t p = 0;
    for (;;) {
      std::size_t q = line.find('\t', p);
      f.emplace_back(line.substr(p, q == std::string_view::npos ? std::string_view::npos : q - p));
      if (q == std::string_view::npos) break;
      p = q + 1;
    }
    if (f.size() != 6) throw ParseError("registry rows need 6 tab-separated fields", line_no, 1);
    if (!kRelations.count(f[1])) throw ParseError("unknown relation '" + f[1] + "'", line_no, 1);
    if (!kStatuses.count(f[3])) throw ParseError("unknown status '" + f[3] + "'", line_no, 1);
    out.push_back({f[0], f[1], f[2], f[3], f[4], f[5]});
  }
  return out;
}

const std::vector<FactEntry>& builtin_facts() {
  static const std::vector<FactEntry> facts = parse_facts(kFactsTsv);
  return facts;
}

std::optional<FactEntry> lookup_fact(std::string_view left, std::string_view relation, std::string_view right) {
  std::string l = class_key(left), r = class_key(right);
  bool symmetric = relation != "sim_preorder";
  for (const FactEntry& e : builtin_facts()) {
    if (e.relation != relation) continue;
    std::string el = class_key(e.left), er = class_key(e.right);
    if ((el == l && er == r) || (symmetric && el == r && er == l)) return e;
  }
  return std::nullopt;
}

std::string describe_fact(const FactEntry& e) {
  std::string s = e.status;
  std::replace(s.begin(), s.end(), '_', ' ');
  if (!e.complexity.empty()) s += ", " + e.complexity;
  return s;
}

}  // namespace prsequiv
