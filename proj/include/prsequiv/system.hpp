#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "prsequiv/ext_nat.hpp"
#include "prsequiv/term.hpp"

namespace prsequiv {

inline constexpr std::string_view kTau = "tau";

struct Rule {
  TermId lhs;
  std::uint32_t action;  // index into PrsSystem::actions()
  TermId rhs;
};

// Split of the constants into control states and stack (or token) symbols.
struct ControlPartition {
  std::vector<ConstId> control;
  std::vector<ConstId> stack;
};

// A finite set of rewrite rules over one TermStore. Immutable after construction.
class PrsSystem {
 public:
  struct RuleSpec {
    TermId lhs;
    std::string action;
    TermId rhs;
  };

  // Throws PreconditionError if some lhs is eps or a declared partition overlaps.
  PrsSystem(std::shared_ptr<TermStore> store, const std::vector<RuleSpec>& rules,
            std::vector<ConstId> extra_constants = {},
            std::optional<ControlPartition> declared_partition = std::nullopt,
            std::string name = {});

  TermStore& store() const { return *store_; }
  const std::shared_ptr<TermStore>& store_ptr() const { return store_; }
  const std::string& name() const { return name_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::string& action_name(std::uint32_t a) const { return actions_[a]; }
  std::optional<std::uint32_t> find_action(std::string_view label) const;
  // Constants occurring in rules plus declared extras, sorted by name.
  const std::vector<ConstId>& constants() const { return constants_; }
  bool has_constant(ConstId c) const;
  const std::optional<ControlPartition>& declared_partition() const { return declared_; }

  // Rules whose lhs is exactly t.
  const std::vector<std::uint32_t>& rules_with_lhs(TermId t) const;
  const std::vector<std::uint32_t>& seq_lhs_rules() const { return seq_lhs_; }
  const std::vector<std::uint32_t>& par_lhs_rules() const { return par_lhs_; }
  bool lhs_all_constants() const;

 private:
  std::shared_ptr<TermStore> store_;
  std::string name_;
  std::vector<Rule> rules_;
  std::vector<std::string> actions_;
  std::vector<ConstId> constants_;
  std::vector<bool> const_member_;
  std::optional<ControlPartition> declared_;
  std::unordered_map<TermId, std::vector<std::uint32_t>> by_lhs_;
  std::vector<std::uint32_t> seq_lhs_;
  std::vector<std::uint32_t> par_lhs_;
};

// Text format: optional `system NAME`, `control: p q`, `stack: X Y` and
// `constants: A B` (constants without rules) lines, then `rules:` and one
// `LHS -act-> RHS` per line; '#' starts a comment. `name: N` and
// `partition: p q / X Y` are accepted as well.
PrsSystem parse_system(std::string_view text, std::shared_ptr<TermStore> store = nullptr,
                       std::string name = {});
PrsSystem load_system(const std::string& path, std::shared_ptr<TermStore> store = nullptr);
TermId parse_term(std::string_view text, TermStore& store);
RawTerm parse_raw_term(std::string_view text);
std::string print_system(const PrsSystem& sys);

enum class ProcessClass { FS, BPA, nBPA, BPP, nBPP, PA, nPA, PDA, PPDA, PN, OCA, OCN, PRS };

std::string_view class_name(ProcessClass c);
std::vector<ProcessClass> classify(const PrsSystem& sys);
bool has_class(const PrsSystem& sys, ProcessClass c);

// Partition under which every rule has the pushdown form p.X -a-> q.beta.
std::optional<ControlPartition> pda_partition(const PrsSystem& sys);
// Partition under which every rule has the form p|X -a-> q|beta.
std::optional<ControlPartition> ppda_partition(const PrsSystem& sys);

// Largest norm value representable before LimitExceeded is raised.
inline constexpr std::uint64_t kNormCeiling = (std::uint64_t{1} << 32) - 2;

// Least fixpoint of norm(X) = min over X -a-> beta of 1 + norm(beta), norms additive.
// Requires every lhs to be a single constant.
std::vector<ExtNat> constant_norms(const PrsSystem& sys);
std::vector<ConstId> normed_constants(const PrsSystem& sys);
ExtNat norm(const PrsSystem& sys, TermId t);
ExtNat norm_with(const TermStore& store, const std::vector<ExtNat>& by_const, TermId t);

}  // namespace prsequiv
