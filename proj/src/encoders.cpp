#include "prsequiv/encoders.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "prsequiv/error.hpp"

namespace prsequiv {

namespace {

std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

std::string strip_comment(std::string_view line) {
  auto p = line.find('#');
  return std::string(p == std::string_view::npos ? line : line.substr(0, p));
}

std::size_t number(const std::string& s, std::size_t line, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("expected ") + what + ", got '" + s + "'", line, 1);
  return std::stoul(s);
}

std::size_t counter_ref(const std::string& s, std::size_t line) {
  if (s.size() < 2 || s[0] != 'c') throw ParseError("expected a counter like c1, got '" + s + "'", line, 1);
  return number(s.substr(1), line, "counter number");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// Minsky machines

void MinskyMachine::validate() const {
  std::size_t n = program.size();
  if (n == 0) throw PreconditionError("machine has no instructions");
  for (std::size_t i = 0; i < n; ++i) {
    const MinskyInstr& ins = program[i];
    bool last = i + 1 == n;
    if ((ins.op == MinskyInstr::Op::Halt) != last)
      throw PreconditionError("exactly the last instruction must be halt");
    if (ins.op == MinskyInstr::Op::Halt) continue;
    if (ins.counter < 1 || ins.counter > counters)
      throw PreconditionError("instruction " + std::to_string(i + 1) + " uses an undeclared counter");
    auto target_ok = [&](std::size_t t) { return t >= 1 && t <= n; };
    if (!target_ok(ins.next) || (ins.op == MinskyInstr::Op::Test && !target_ok(ins.dec)))
      throw PreconditionError("instruction " + std::to_string(i + 1) + " jumps outside the program");
  }
}

std::string MinskyMachine::to_string() const {
  std::ostringstream out;
  out << "counters " << counters << "\n";
  for (std::size_t i = 0; i < program.size(); ++i) {
    const MinskyInstr& ins = program[i];
    out << i + 1 << ": ";
    switch (ins.op) {
      case MinskyInstr::Op::Inc: out << "inc c" << ins.counter << " goto " << ins.next; break;
      case MinskyInstr::Op::Test: out << "test c" << ins.counter << " zero " << ins.next << " dec " << ins.dec; break;
      case MinskyInstr::Op::Halt: out << "halt"; break;
    }
    out << "\n";
  }
  return out.str();
}

MinskyMachine parse_minsky(std::string_view text) {
  MinskyMachine m;
  bool have_counters = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t[0] == "counters") {
      if (t.size() != 2) throw ParseError("expected 'counters m'", line_no, 1);
      m.counters = number(t[1], line_no, "counter count");
      have_counters = true;
      continue;
    }
    if (t[0].back() != ':') throw ParseError("expected an instruction label like '1:'", line_no, 1);
    std::size_t idx = number(t[0].substr(0, t[0].size() - 1), line_no, "instruction index");
    if (idx != m.program.size() + 1) throw ParseError("instructions must be numbered 1, 2, ... in order", line_no, 1);
    MinskyInstr ins;
    if (t.size() == 2 && t[1] == "halt") {
      ins.op = MinskyInstr::Op::Halt;
    } else if (t.size() == 5 && t[1] == "inc" && t[3] == "goto") {
      ins = {MinskyInstr::Op::Inc, counter_ref(t[2], line_no), number(t[4], line_no, "target"), 0};
    } else if (t.size() == 7 && t[1] == "test" && t[3] == "zero" && t[5] == "dec") {
      ins = {MinskyInstr::Op::Test, counter_ref(t[2], line_no), number(t[4], line_no, "target"),
             number(t[6], line_no, "target")};
    } else {
      throw ParseError("unknown instruction", line_no, 1);
    }
    m.program.push_back(ins);
  }
  if (!have_counters) throw ParseError("missing 'counters m' line", line_no, 1);
  m.validate();
  return m;
}

MinskyMachine load_minsky(const std::string& path) { return parse_minsky(read_file(path)); }

MinskyRun run_minsky(const MinskyMachine& m, std::size_t budget) {
  m.validate();
  std::vector<std::uint64_t> c(m.counters + 1, 0);
  std::size_t pc = 1;
  for (std::size_t step = 0;; ++step) {
    const MinskyInstr& ins = m.program[pc - 1];
    if (ins.op == MinskyInstr::Op::Halt) return {true, step};
    if (step == budget) return {false, budget};
    if (ins.op == MinskyInstr::Op::Inc) {
      ++c[ins.counter];
      pc = ins.next;
    } else if (c[ins.counter] == 0) {
      pc = ins.next;
    } else {
      --c[ins.counter];
      pc = ins.dec;
    }
  }
}

// ---------------------------------------------------------------------------
// QBF

void Qbf::validate() const {
  if (vars % 2 != 0) throw PreconditionError("the number of variables must be even");
  for (const auto& cl : clauses)
    for (int l : cl)
      if (l == 0 || static_cast<std::size_t>(l < 0 ? -l : l) > vars)
        throw PreconditionError("literal refers to an undeclared variable");
}

std::string Qbf::to_string() const {
  std::ostringstream out;
  out << "vars " << vars << "\n";
  for (const auto& cl : clauses) {
    for (std::size_t i = 0; i < cl.size(); ++i) out << (i ? " " : "") << (cl[i] < 0 ? "!x" : "x") << std::abs(cl[i]);
    out << "\n";
  }
  return out.str();
}

Qbf parse_qbf(std::string_view text) {
  Qbf q;
  bool have_vars = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto t = tokens(strip_comment(raw));
    if (t.empty()) continue;
    if (t[0] == "vars") {
      if (t.size() != 2) throw ParseError("expected 'vars n'", line_no, 1);
      q.vars = number(t[1], line_no, "variable count");
      have_vars = true;
      continue;
    }
    std::vector<int> clause;
    for (const std::string& lit : t) {
      bool neg = lit[0] == '!';
      std::string v = neg ? lit.substr(1) : lit;
      if (v.size() < 2 || v[0] != 'x') throw ParseError("expected a literal like x1 or !x1, got '" + lit + "'", line_no, 1);
      int i = static_cast<int>(number(v.substr(1), line_no, "variable number"));
      clause.push_back(neg ? -i : i);
    }
    q.clauses.push_back(std::move(clause));
  }
  if (!have_vars) throw ParseError("missing 'vars n' line", line_no, 1);
  q.validate();
  return q;
}

Qbf load_qbf(const std::string& path) { return parse_qbf(read_file(path)); }

bool eval_qbf(const Qbf& q) {
  q.validate();
  std::vector<bool> val(q.vars + 1, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i > q.vars) {
      for (const auto& cl : q.clauses) {
        bool sat = false;
        for (int l : cl) sat |= l > 0 ? val[l] : !val[-l];
        if (!sat) return false;
      }
      return true;
    }
    bool universal = i % 2 == 1;
    for (bool b : {false, true}) {
      val[i] = b;
      bool r = go(i + 1);
      if (universal && !r) return false;
      if (!universal && r) return true;
    }
    return universal;
  };
  return go(1);
}

// ---------------------------------------------------------------------------
// Encoders

PnEncoding minsky_to_pn(const MinskyMachine& m, std::shared_ptr<TermStore> store) {
  m.validate();
  if (!store) store = std::make_shared<TermStore>();
  TermStore& st = *store;
  std::size_t n = m.program.size();
  auto q = [&](std::size_t i) { return st.constant("Q" + std::to_string(i)); };
  auto qp = [&](std::size_t i) { return st.constant("Q" + std::to_string(i) + "'"); };
  auto c = [&](std::size_t j) { return st.constant("C" + std::to_string(j)); };

  std::vector<PrsSystem::RuleSpec> rules;
  for (std::size_t i = 1; i <= n; ++i) {
    const MinskyInstr& ins = m.program[i - 1];
    switch (ins.op) {
      case MinskyInstr::Op::Inc:
        rules.push_back({q(i), "inc", st.par(q(ins.next), c(ins.counter))});
        rules.push_back({qp(i), "inc", st.par(qp(ins.next), c(ins.counter))});
        break;
      case MinskyInstr::Op::Test: {
        TermId cj = c(ins.counter);
        std::size_t k = ins.next, l = ins.dec;
        rules.push_back({st.par(q(i), cj), "dec", q(l)});
        rules.push_back({st.par(qp(i), cj), "dec", qp(l)});
        rules.push_back({q(i), "zer", q(k)});
        rules.push_back({qp(i), "zer", qp(k)});
        rules.push_back({st.par(q(i), cj), "zer", st.par(qp(k), cj)});
        rules.push_back({st.par(qp(i), cj), "zer", st.par(q(k), cj)});
        break;
      }
      case MinskyInstr::Op::Halt: rules.push_back({q(i), "hlt", st.empty()}); break;
    }
  }
  std::vector<ConstId> extra;
  for (std::size_t i = 1; i <= n; ++i) {
    extra.push_back(st.const_of(q(i)));
    extra.push_back(st.const_of(qp(i)));
  }
  for (std::size_t j = 1; j <= m.counters; ++j) extra.push_back(st.const_of(c(j)));
  TermId m0 = q(1), m1 = qp(1);
  return {PrsSystem(store, rules, extra, std::nullopt, "minsky-pn"), m0, m1};
}

PaFsEncoding minsky_to_pa_fs(const MinskyMachine& m, std::shared_ptr<TermStore> store) {
  m.validate();
  if (m.counters != 2) throw PreconditionError("this encoding needs a machine with exactly two counters");
  if (!store) store = std::make_shared<TermStore>();
  TermStore& st = *store;

  std::vector<PrsSystem::RuleSpec> pa;
  for (int j = 1; j <= 2; ++j) {
    std::string s = std::to_string(j);
    TermId z = st.constant("Z" + s), c = st.constant("C" + s);
    pa.push_back({z, "z" + s, z});
    pa.push_back({z, "i" + s, st.seq(c, z)});
    pa.push_back({c, "i" + s, st.seq(c, c)});
    pa.push_back({c, "d" + s, st.empty()});
  }
  TermId start = st.par(st.constant("Z1"), st.constant("Z2"));

  const std::vector<std::string> acts{"d1", "d2", "i1", "i2", "z1", "z2"};
  std::size_t n = m.program.size();
  auto f = [&](std::size_t i) { return st.constant("f" + std::to_string(i)); };
  TermId u = st.constant("u");
  std::vector<PrsSystem::RuleSpec> fs;
  for (const std::string& a : acts) fs.push_back({u, a, u});
  for (std::size_t i = 1; i < n; ++i) {
    const MinskyInstr& ins = m.program[i - 1];
    std::map<std::string, TermId> moves;
    std::string j = std::to_string(ins.counter);
    if (ins.op == MinskyInstr::Op::Inc) {
      moves["i" + j] = f(ins.next);
    } else {
      moves["z" + j] = f(ins.next);
      moves["d" + j] = f(ins.dec);
    }
    for (const std::string& a : acts) fs.push_back({f(i), a, moves.count(a) ? moves.at(a) : u});
  }
  std::vector<ConstId> extra;
  for (std::size_t i = 1; i <= n; ++i) extra.push_back(st.const_of(f(i)));
  PrsSystem pa_sys(store, pa, {}, std::nullopt, "minsky-pa");
  PrsSystem fs_sys(store, fs, extra, std::nullopt, "minsky-fs");
  return {std::move(pa_sys), start, std::move(fs_sys), st.const_of(f(1))};
}

QbfEncoding qbf_to_pda_fs(const Qbf& q) {
  q.validate();
  std::size_t n = q.vars, m = q.clauses.size();
  std::vector<std::string> controls{"g"};
  for (std::size_t j = 1; j <= m; ++j) controls.push_back("c" + std::to_string(j));
  std::vector<std::string> stack;
  auto L = [&](std::size_t i) { return static_cast<std::uint32_t>(i - 1); };  // L1..L(n+1)
  for (std::size_t i = 1; i <= n + 1; ++i) stack.push_back("L" + std::to_string(i));
  auto X = [&](std::size_t i) { return static_cast<std::uint32_t>(n + i); };  // X1..Xn
  for (std::size_t i = 1; i <= n; ++i) stack.push_back("X" + std::to_string(i));
  auto NX = [&](std::size_t i) { return static_cast<std::uint32_t>(2 * n + i); };  // nX1..nXn
  for (std::size_t i = 1; i <= n; ++i) stack.push_back("nX" + std::to_string(i));
  auto Z = static_cast<std::uint32_t>(3 * n + 1);
  stack.push_back("Z");
  const std::vector<std::string> acts{"a", "b", "c", "d", "e"};
  enum : std::uint32_t { A, B, C, D, E };

  std::vector<PdaRule> rules;
  for (std::size_t i = 1; i <= n; ++i) {
    bool odd = i % 2 == 1;
    rules.push_back({0, L(i), odd ? A : B, 0, {L(i + 1), X(i)}});
    rules.push_back({0, L(i), odd ? A : C, 0, {L(i + 1), NX(i)}});
  }
  for (std::uint32_t j = 1; j <= m; ++j) {
    rules.push_back({0, L(n + 1), D, j, {}});
    const auto& cl = q.clauses[j - 1];
    auto has = [&](int lit) { return std::find(cl.begin(), cl.end(), lit) != cl.end(); };
    for (std::size_t i = 1; i <= n; ++i) {
      int v = static_cast<int>(i);
      // A literal that makes the clause true stops the popping; anything else is popped.
      rules.push_back({j, X(i), D, j, has(v) ? Word{X(i)} : Word{}});
      rules.push_back({j, NX(i), D, j, has(-v) ? Word{NX(i)} : Word{}});
    }
    rules.push_back({j, Z, E, j, {Z}});
  }
  PdaSystem pda(controls, stack, acts, std::move(rules));

  LtsBuilder b;
  for (const std::string& a : acts) b.add_action(a);
  std::map<std::size_t, StateId> F;
  for (std::size_t i = 1; i <= n + 1; i += 2) F[i] = b.add_state("f" + std::to_string(i));
  StateId u = b.add_state("u");
  for (const std::string& a : acts) b.add_transition(u, a, u);
  for (std::size_t i = 1; i < n; i += 2) {
    // The defender picks x(i+1) by moving to a state that only lets b (true) or c (false) through.
    for (const std::string& pick : {"b", "c"}) {
      StateId e = b.add_state(pick + std::to_string(i + 1));
      b.add_transition(F.at(i), "a", e);
      for (const std::string& a : acts) b.add_transition(e, a, a == pick ? F.at(i + 2) : u);
    }
  }
  b.add_transition(F.at(n + 1), "d", F.at(n + 1));
  b.set_initial(F.at(1));
  StateId f1 = F.at(1);
  return {std::move(pda), PdaConfig{0, {L(1), Z}}, std::move(b).build(), f1};
}

std::string print_pda(const PdaSystem& pda) {
  std::ostringstream out;
  out << "control:";
  for (const std::string& c : pda.controls()) out << ' ' << c;
  out << "\nstack:";
  for (const std::string& s : pda.stack_symbols()) out << ' ' << s;
  out << "\nrules:\n";
  for (const PdaRule& r : pda.rules()) {
    out << pda.controls()[r.control] << '.' << pda.stack_symbols()[r.top] << " -" << pda.actions()[r.action] << "-> "
        << pda.controls()[r.next_control];
    for (auto x : r.push) out << '.' << pda.stack_symbols()[x];
    out << "\n";
  }
  return out.str();
}

std::string print_lts_rules(const FiniteLts& lts) {
  auto ident = [](const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])) || s == "eps") return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; });
  };
  auto name = [&](StateId s) { return ident(lts.label(s)) ? lts.label(s) : "s" + std::to_string(s); };
  std::ostringstream out;
  out << "constants:";
  for (StateId s = 0; s < lts.num_states(); ++s) out << ' ' << name(s);
  out << "\nrules:\n";
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (const Edge& e : lts.out(s)) out << name(s) << " -" << lts.action_name(e.action) << "-> " << name(e.target) << "\n";
  return out.str();
}

}  // namespace prsequiv
