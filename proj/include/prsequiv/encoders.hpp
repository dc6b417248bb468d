#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prsequiv/lts.hpp"
#include "prsequiv/pushdown.hpp"
#include "prsequiv/system.hpp"

namespace prsequiv {

struct MinskyInstr {
  enum class Op { Inc, Test, Halt };
  Op op = Op::Halt;
  std::size_t counter = 0;  // 1-based
  std::size_t next = 0;     // Inc: goto; Test: target when the counter is zero
  std::size_t dec = 0;      // Test: target after decrementing
};

// Instructions 1..n (stored 0-based); exactly the last one halts.
struct MinskyMachine {
  std::size_t counters = 0;
  std::vector<MinskyInstr> program;

  void validate() const;
  std::string to_string() const;
};

// `counters m`, then `i: inc cj goto k`, `i: test cj zero k dec l`, `n: halt`.
MinskyMachine parse_minsky(std::string_view text);
MinskyMachine load_minsky(const std::string& path);

struct MinskyRun {
  bool halted = false;
  std::size_t steps = 0;  // instructions executed before reaching halt, or the budget
};
MinskyRun run_minsky(const MinskyMachine& m, std::size_t budget);

// Literals are +i for x_i and -i for its negation.
struct Qbf {
  std::size_t vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate() const;
  std::string to_string() const;
};

// `vars n`, then one clause per line with literals like `x3 !x1`.
Qbf parse_qbf(std::string_view text);
Qbf load_qbf(const std::string& path);
// Truth of forall x1 exists x2 ... exists xn: C1 & ... & Cm.
bool eval_qbf(const Qbf& q);

struct PnEncoding {
  PrsSystem system;
  TermId m;        // Q1
  TermId m_prime;  // Q1'
};
// Petri net whose markings Q1 and Q1' are non-bisimilar iff the machine halts.
PnEncoding minsky_to_pn(const MinskyMachine& m, std::shared_ptr<TermStore> store = nullptr);

struct PaFsEncoding {
  PrsSystem pa;
  TermId start;  // Z1 | Z2
  PrsSystem fs;
  ConstId f1;
};
// Z1 | Z2 is simulated by f1 iff the two-counter machine does not halt.
PaFsEncoding minsky_to_pa_fs(const MinskyMachine& m, std::shared_ptr<TermStore> store = nullptr);

struct QbfEncoding {
  PdaSystem pda;
  PdaConfig start;  // g.L1.Z
  FiniteLts fs;
  StateId f;
};
// The formula holds iff g.L1.Z is simulated by f.
QbfEncoding qbf_to_pda_fs(const Qbf& q);

// Text forms of the encoded systems.
std::string print_pda(const PdaSystem& pda);
std::string print_lts_rules(const FiniteLts& lts);

}  // namespace prsequiv
