#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prsequiv/lts.hpp"
#include "prsequiv/pushdown.hpp"
#include "prsequiv/system.hpp"

namespace prsequiv {

using TermPair = std::pair<TermId, TermId>;
using GenOracle = std::function<bool(TermId, TermId)>;

inline constexpr std::size_t kCandidateCeiling = 1'000'000;

// B := G; repeat R := B; B := pairs of R that expand in Gen(R); until B = R.
// `make_gen` turns a relation into a membership test for the relation it generates.
std::vector<TermPair> compute_base(std::vector<TermPair> candidates,
                                   const std::function<bool(const TermPair&, const GenOracle&)>& expands,
                                   const std::function<GenOracle(const std::vector<TermPair>&)>& make_gen);

std::string print_base(const TermStore& store, const std::vector<TermPair>& base);

// Every pair s -a-> s' is answered by t -a-> t' with gen(s', t') and vice versa.
bool expands_strong(const PrsSystem& sys, const TermPair& p, const GenOracle& gen);

// ---------------------------------------------------------------------------
// Normed BPA

// Candidates (X, alpha) with alpha sequential and norm(alpha) = norm(X).
std::vector<TermPair> init_g_nbpa(const PrsSystem& sys, std::size_t ceiling = kCandidateCeiling);

// Membership in the least congruence (w.r.t. sequential composition) containing a
// relation of (constant, term) pairs of equal norm. Decomposes X.gamma vs Y.delta with
// norm(X) <= norm(Y) through a pair (Y, X.xi) into gamma vs xi.delta. Memoised.
class NbpaCongruence {
 public:
  NbpaCongruence(const PrsSystem& sys, const std::vector<TermPair>& base);
  bool member(TermId a, TermId b);

 private:
  std::uint64_t norm_of(TermId t);

  const PrsSystem& sys_;
  std::vector<ExtNat> norms_;
  // (P, head of rho) -> tails xi of the pairs (P, head.xi)
  std::map<std::pair<ConstId, ConstId>, std::vector<TermId>> by_heads_;
  std::unordered_map<TermId, std::uint64_t> norm_cache_;
  std::map<TermPair, bool> memo_;
};

bool gen_member_nbpa(const PrsSystem& sys, const std::vector<TermPair>& base, TermId a, TermId b);

// Base of a normed BPA and the bisimilarity test built on it.
class NbpaDecider {
 public:
  explicit NbpaDecider(const PrsSystem& sys, std::size_t ceiling = kCandidateCeiling);
  const std::vector<TermPair>& base() const { return base_; }
  bool bisimilar(TermId a, TermId b);

 private:
  const PrsSystem& sys_;
  std::vector<TermPair> base_;
  std::unique_ptr<NbpaCongruence> gen_;
};

bool decide_nbpa_bisim(const PrsSystem& sys, TermId a, TermId b);

// ---------------------------------------------------------------------------
// Weak bisimilarity between a BPA and a finite-state system

// Candidates (A.X, Y), (A, Y), (eps, Y) for BPA constants A and FS constants X, Y.
std::vector<TermPair> init_g_weak(const PrsSystem& bpa, const PrsSystem& fs);

// Automaton for {alpha | start =a=> alpha} over the joint system, as the words w
// with `post.w` accepted (control 1 after the visible action, control 0 for tau).
struct ReachAutomaton {
  PAutomaton automaton;
  std::uint32_t accept_control;
  std::vector<ConstId> symbols;  // stack symbol index -> constant
};

class WeakBpaFsDecider {
 public:
  // Both systems must share one TermStore and have disjoint constants.
  WeakBpaFsDecider(const PrsSystem& bpa, const PrsSystem& fs);

  const PrsSystem& joint() const { return *joint_; }
  const std::vector<TermPair>& candidates() const { return candidates_; }
  const std::vector<TermPair>& base();
  bool weakly_bisimilar(TermId alpha, ConstId y);

  // Membership of (alpha, Y) in the relation generated by r.
  bool gen_member(const std::vector<TermPair>& r, TermId alpha, ConstId y) const;
  bool weak_expands(const TermPair& p, const std::vector<TermPair>& r);
  ReachAutomaton reach_automaton(TermId start, const std::string& action) const;

 private:
  struct GenIndex;
  GenIndex index(const std::vector<TermPair>& r) const;
  bool gen_run(const GenIndex& g, std::span<const ConstId> word, std::uint32_t y) const;
  bool reach_meets_gen(const ReachAutomaton& ra, const GenIndex& g, std::uint32_t y) const;
  const ReachAutomaton& cached_reach(TermId start, const std::string& action);

  const PrsSystem& bpa_;
  const PrsSystem& fs_;
  std::unique_ptr<PrsSystem> joint_;
  std::vector<ExtNat> norms_;
  FiniteLts fs_lts_;
  FiniteLts fs_sat_;
  std::vector<std::uint32_t> fs_block_;      // weak bisimulation classes of the FS
  std::vector<int> fs_index_;                // raw const id -> FS state, or -1
  std::vector<bool> is_bpa_const_;
  std::vector<TermPair> candidates_;
  std::optional<std::vector<TermPair>> base_;
  std::map<std::pair<TermId, std::string>, ReachAutomaton> reach_cache_;
};

bool decide_bpa_fs_weak(const PrsSystem& bpa, TermId alpha, const PrsSystem& fs, ConstId y);

}  // namespace prsequiv
