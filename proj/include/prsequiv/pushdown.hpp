#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "prsequiv/system.hpp"

namespace prsequiv {

using Word = std::vector<std::uint32_t>;  // stack word, top first

struct PdaRule {
  std::uint32_t control;
  std::uint32_t top;
  std::uint32_t action;
  std::uint32_t next_control;
  Word push;  // replaces top; first symbol becomes the new top
};

struct PdaConfig {
  std::uint32_t control;
  Word stack;
  friend auto operator<=>(const PdaConfig&, const PdaConfig&) = default;
};

// Pushdown system p.X -a-> q.beta with local indices for controls, stack symbols and
// actions. Built from a PRS in pushdown normal form, it can translate configurations
// to and from terms p.X1...Xn.
class PdaSystem {
 public:
  PdaSystem(std::vector<std::string> controls, std::vector<std::string> stack, std::vector<std::string> actions,
            std::vector<PdaRule> rules);
  static PdaSystem from_prs(const PrsSystem& sys);

  const std::vector<std::string>& controls() const { return controls_; }
  const std::vector<std::string>& stack_symbols() const { return stack_; }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<PdaRule>& rules() const { return rules_; }
  std::optional<std::uint32_t> find_control(std::string_view name) const;
  std::optional<std::uint32_t> find_stack(std::string_view name) const;

  // Only for systems built with from_prs.
  TermId to_term(const PdaConfig& c) const;
  PdaConfig from_term(TermId t) const;
  const PrsSystem* source() const { return source_; }

 private:
  std::vector<std::string> controls_;
  std::vector<std::string> stack_;
  std::vector<std::string> actions_;
  std::vector<PdaRule> rules_;
  const PrsSystem* source_ = nullptr;
  std::vector<ConstId> control_const_;
  std::vector<ConstId> stack_const_;
};

// Finite automaton over stack symbols whose states 0..P-1 stand for the control
// states; it accepts configuration p.w iff w leads from state p to a final state.
class PAutomaton {
 public:
  explicit PAutomaton(std::size_t num_controls) : num_controls_(num_controls), num_states_(num_controls) {}
  static PAutomaton for_configuration(std::size_t num_controls, const PdaConfig& c);

  std::uint32_t add_state() { return static_cast<std::uint32_t>(num_states_++); }
  bool add_transition(std::uint32_t from, std::uint32_t symbol, std::uint32_t to) {
    return trans_.insert({from, symbol, to}).second;
  }
  bool add_epsilon(std::uint32_t from, std::uint32_t to) { return eps_.insert({from, to}).second; }
  void set_final(std::uint32_t s) { finals_.insert(s); }

  std::size_t num_controls() const { return num_controls_; }
  std::size_t num_states() const { return num_states_; }
  const std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>& transitions() const { return trans_; }
  const std::set<std::pair<std::uint32_t, std::uint32_t>>& epsilons() const { return eps_; }
  bool is_final(std::uint32_t s) const { return finals_.count(s) != 0; }
  const std::set<std::uint32_t>& finals() const { return finals_; }

  // States reached from the control state by reading w (epsilon moves included).
  std::set<std::uint32_t> run(std::uint32_t control, std::span<const std::uint32_t> w) const;
  bool accepts(std::uint32_t control, std::span<const std::uint32_t> w) const;
  // Whether some w.gamma is accepted.
  bool accepts_prefix(std::uint32_t control, std::span<const std::uint32_t> w) const;

 private:
  std::size_t num_controls_;
  std::size_t num_states_;
  std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> trans_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> eps_;
  std::set<std::uint32_t> finals_;
};

// Saturates A so that it accepts every configuration reachable from one it accepts.
// A must have no transitions into control states.
PAutomaton pda_post_star(const PdaSystem& pda, const PAutomaton& a);

// Head ceiling: enumeration refuses to start beyond this many heads.
inline constexpr std::size_t kHeadCeiling = 1'000'000;

// All (q, beta) with |beta| <= k in lexicographic order (controls, then words with
// each word before its extensions). The callback returns false to stop early.
void heads(const PdaSystem& pda, std::size_t k, const std::function<bool(const PdaConfig&)>& visit);
std::size_t head_count(const PdaSystem& pda, std::size_t k);

}  // namespace prsequiv
