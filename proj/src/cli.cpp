#include "prsequiv/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "prsequiv/aut.hpp"
#include "prsequiv/base.hpp"
#include "prsequiv/charform.hpp"
#include "prsequiv/dd.hpp"
#include "prsequiv/encoders.hpp"
#include "prsequiv/error.hpp"
#include "prsequiv/facts.hpp"
#include "prsequiv/formula.hpp"
#include "prsequiv/game.hpp"
#include "prsequiv/inf_vs_fs.hpp"
#include "prsequiv/model_check.hpp"
#include "prsequiv/partition.hpp"
#include "prsequiv/reductions.hpp"
#include "prsequiv/semantics.hpp"

namespace prsequiv {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

bool is_aut(const std::string& path) { return path.size() >= 4 && path.compare(path.size() - 4, 4, ".aut") == 0; }

// A process given as a file and a state: a term of a .prs system or a state of an
// .aut file (by number).
struct Loaded {
  std::shared_ptr<TermStore> store;
  std::shared_ptr<PrsSystem> sys;  // null for .aut input
  FiniteLts lts;
  std::vector<StateId> roots;
};

StateId aut_state(const FiniteLts& lts, const std::string& spec) {
  if (auto s = lts.find_state(spec)) return *s;
  throw PreconditionError("no state " + spec + " in the .aut file");
}

Loaded load_process(const std::string& path, const std::vector<std::string>& states, const ExplorationLimit& limit,
                    std::shared_ptr<TermStore> store = nullptr) {
  Loaded l;
  if (is_aut(path)) {
    l.lts = load_aut(path);
    for (const std::string& s : states) l.roots.push_back(aut_state(l.lts, s));
    return l;
  }
  l.store = store ? store : std::make_shared<TermStore>();
  l.sys = std::make_shared<PrsSystem>(load_system(path, l.store));
  std::vector<TermId> terms;
  for (const std::string& s : states) terms.push_back(parse_term(s, *l.store));
  l.lts = explore(*l.sys, terms, limit);
  for (TermId t : terms) l.roots.push_back(*l.lts.state_of(t));
  return l;
}

// Both processes of a two-sided command, in one LTS when they come from one file.
struct Pair {
  std::shared_ptr<Loaded> left;
  std::shared_ptr<Loaded> right;
  StateId s;
  StateId t;
  bool same() const { return left == right; }
};

Pair load_pair(const std::string& lp, const std::string& s, const std::string& rp, const std::string& t,
               const ExplorationLimit& limit) {
  Pair p;
  if (lp == rp) {
    p.left = p.right = std::make_shared<Loaded>(load_process(lp, {s, t}, limit));
    p.s = p.left->roots[0];
    p.t = p.left->roots[1];
  } else {
    p.left = std::make_shared<Loaded>(load_process(lp, {s}, limit));
    p.right = std::make_shared<Loaded>(load_process(rp, {t}, limit));
    p.s = p.left->roots[0];
    p.t = p.right->roots[0];
  }
  return p;
}

// One LTS holding both processes.
struct Joint {
  FiniteLts lts;
  StateId s;
  StateId t;
};

Joint joint(const Pair& p) {
  if (p.same()) return {p.left->lts, p.s, p.t};
  UnionResult u = disjoint_union(p.left->lts, p.right->lts);
  return {std::move(u.lts), p.s, u.right_offset + p.t};
}

void require_complete(const FiniteLts& lts) {
  if (!lts.all_complete())
    throw IncompleteLtsError("exploration was cut off; raise --max-states or --max-depth, or use --method game");
}

std::string position_text(const GameArena& arena, const PositionKey& k) {
  auto lab = [&](Side side, StateId x) {
    const std::string& l = arena.label(side, x);
    return l.empty() ? std::to_string(x) : l;
  };
  std::string s = "(" + lab(Side::Left, k.left) + ", " + lab(Side::Right, k.right) + ")";
  if (k.pending) s += " after " + arena.describe(*k.pending);
  return s;
}

void print_outcome(std::ostream& out, const GameArena& arena, const GameOutcome& o) {
  out << "winner: " << (o.winner == Player::Attacker ? "attacker" : "defender");
  if (o.rounds_to_win) out << " in " << *o.rounds_to_win << " rounds";
  out << "\n";
  for (const auto& [k, m] : o.strategy) out << "  " << position_text(arena, k) << " => " << arena.describe(m) << "\n";
}

GameKind game_kind(const std::string& kind) {
  if (kind == "weak") return GameKind::WeakBisimulation;
  if (kind == "sim" || kind == "simeq") return GameKind::Simulation;
  return GameKind::Bisimulation;
}

struct CheckOptions {
  std::string left, s, right, t;
  std::string kind = "bisim";
  std::string method = "partition";
  std::optional<std::size_t> k;
  bool witness = false;
  std::size_t max_states = 100000;
  std::optional<std::size_t> max_depth;
};

bool check_partition(const Pair& p, const CheckOptions& o) {
  Joint j = joint(p);
  if (o.kind == "kbisim") return kbisim(j.lts, *o.k).levels[*o.k].same(j.s, j.t);
  require_complete(j.lts);
  if (o.kind == "bisim") return bisim_partition(j.lts, RefinementMethod::Worklist).same(j.s, j.t);
  if (o.kind == "weak") return weak_bisim_partition(j.lts, RefinementMethod::Worklist).same(j.s, j.t);
  if (o.kind == "trace") return trace_inclusion(j.lts, j.s, j.t) && trace_inclusion(j.lts, j.t, j.s);
  Relation sim = sim_preorder(j.lts);
  if (o.kind == "sim") return sim.contains(j.s, j.t);
  return sim.contains(j.s, j.t) && sim.contains(j.t, j.s);
}

bool check_game(const Pair& p, const CheckOptions& o, std::ostream& out) {
  if (o.kind == "trace") throw PreconditionError("trace equivalence has no game; use --method partition");
  GameArena arena(p.left->lts, p.right->lts, game_kind(o.kind));
  std::optional<std::size_t> bound = o.kind == "kbisim" ? o.k : std::nullopt;
  GameSolution sol = solve_game(arena, p.s, p.t, bound);
  bool holds = sol.winner() == Player::Defender;
  if (o.witness) print_outcome(out, arena, sol.outcome());
  if (o.kind == "simeq" && holds) {
    GameArena back(p.right->lts, p.left->lts, GameKind::Simulation);
    GameSolution sol2 = solve_game(back, p.t, p.s);
    holds = sol2.winner() == Player::Defender;
    if (o.witness) {
      out << "converse:\n";
      print_outcome(out, back, sol2.outcome());
    }
  }
  return holds;
}

bool check_base(const CheckOptions& o) {
  if (o.kind == "bisim") {
    if (o.left != o.right) throw PreconditionError("--method base for bisim needs both terms in one normed BPA file");
    auto store = std::make_shared<TermStore>();
    PrsSystem sys = load_system(o.left, store);
    return decide_nbpa_bisim(sys, parse_term(o.s, *store), parse_term(o.t, *store));
  }
  if (o.kind == "weak") {
    auto store = std::make_shared<TermStore>();
    PrsSystem bpa = load_system(o.left, store);
    PrsSystem fs = load_system(o.right, store);
    TermId y = parse_term(o.t, *store);
    if (store->kind(y) != TermKind::Const) throw PreconditionError("the finite-state side must be a single constant");
    return decide_bpa_fs_weak(bpa, parse_term(o.s, *store), fs, store->const_of(y));
  }
  throw PreconditionError("--method base supports --kind bisim (normed BPA) and weak (BPA vs FS)");
}

bool check_thm3(const CheckOptions& o, std::ostream& out) {
  if (o.kind != "bisim") throw PreconditionError("--method thm3 supports --kind bisim");
  auto store = std::make_shared<TermStore>();
  PrsSystem sys = load_system(o.left, store);
  PdaSystem pda = PdaSystem::from_prs(sys);
  PdaConfig start = pda.from_term(parse_term(o.s, *store));
  Loaded fs = load_process(o.right, {o.t}, {o.max_states, std::nullopt, std::nullopt});
  require_complete(fs.lts);
  PdaFsVerdict v = decide_pda_fs_bisim(pda, start, fs.lts, fs.roots[0]);
  if (o.witness) {
    if (v.attacker) {
      GameArena arena(*v.fragment, fs.lts, GameKind::Bisimulation);
      out << "the start is not " << v.k << "-bisimilar:\n";
      print_outcome(out, arena, *v.attacker);
    } else if (v.bad_head) {
      out << "reachable head " << pda_config_label(pda, *v.bad_head) << " is " << v.k
          << "-bisimilar to no finite-state process\n";
    }
  }
  return v.bisimilar;
}

int run_check(const CheckOptions& o, std::ostream& out) {
  if (o.kind == "kbisim" && !o.k) throw PreconditionError("--kind kbisim needs --k");
  bool holds;
  if (o.method == "base") {
    holds = check_base(o);
  } else if (o.method == "thm3") {
    holds = check_thm3(o, out);
  } else {
    Pair p = load_pair(o.left, o.s, o.right, o.t, {o.max_states, o.max_depth, std::nullopt});
    if (o.method == "game") {
      holds = check_game(p, o, out);
    } else {
      holds = check_partition(p, o);
      if (o.witness && o.kind != "trace") check_game(p, o, out);
    }
  }
  out << (holds ? "true" : "false") << "\n";
  return holds ? kExitHolds : kExitFails;
}

std::string state_name(const FiniteLts& lts, StateId s) {
  return lts.label(s).empty() ? std::to_string(s) : lts.label(s);
}

// Interactive game: the user plays one role, the solver's strategy plays the other.
int run_game(const Pair& p, GameKind kind, bool user_attacks, std::istream& in, std::ostream& out) {
  GameArena arena(p.left->lts, p.right->lts, kind);
  GameSolution sol = solve_game(arena, p.s, p.t);
  Player user = user_attacks ? Player::Attacker : Player::Defender;
  out << "you play the " << (user_attacks ? "attacker" : "defender") << "; the "
      << (sol.winner() == Player::Attacker ? "attacker" : "defender") << " can force a win\n";
  GamePosition pos = arena.start(p.s, p.t);
  while (true) {
    out << "round " << pos.round << ": " << position_text(arena, pos.key()) << "\n";
    std::vector<Move> moves = arena.legal_moves(pos);
    Player mover = pos.to_move();
    if (moves.empty()) {
      bool user_wins = mover != user;
      out << (mover == Player::Attacker ? "attacker" : "defender") << " is stuck; "
          << (user_wins ? "you win" : "you lose") << "\n";
      return user_wins ? kExitHolds : kExitFails;
    }
    if (mover != user) {
      Move m = sol.best_move(pos).value_or(moves.front());
      out << "opponent: " << arena.describe(m) << "\n";
      pos = arena.apply_move(pos, m);
      continue;
    }
    for (std::size_t i = 0; i < moves.size(); ++i) out << "  " << i + 1 << ") " << arena.describe(moves[i]) << "\n";
    out << "> " << std::flush;
    std::string line;
    if (!std::getline(in, line) || line == "quit") {
      out << "bye\n";
      return kExitHolds;
    }
    if (line == "hint") {
      if (auto m = sol.best_move(pos)) out << "hint: " << arena.describe(*m) << "\n";
      continue;
    }
    std::size_t choice = 0;
    try {
      choice = std::stoul(line);
    } catch (const std::exception&) {
    }
    if (choice < 1 || choice > moves.size()) {
      out << "enter a move number, hint or quit\n";
      continue;
    }
    pos = arena.apply_move(pos, moves[choice - 1]);
  }
}

int run_charform(const std::string& file, const std::string& state, const std::string& logic,
                 std::optional<std::size_t> k, bool dag, std::size_t max_states, std::ostream& out) {
  Loaded l = load_process(file, {state}, {max_states, std::nullopt, std::nullopt});
  require_complete(l.lts);
  StateId f = l.roots[0];
  FormulaStore fst;
  std::vector<FormulaId> roots;
  if (logic == "hm") {
    if (!k) throw PreconditionError("--logic hm needs --k");
    roots.push_back(hm_char(l.lts, *k, fst)[*k][f]);
  } else if (logic == "ef") {
    roots.push_back(ef_char(l.lts, f, fst, false, {}, k));
  } else if (logic == "mu") {
    roots.push_back(mu_char_bisim(l.lts, f, fst));
  } else {
    SimChar sc = sim_char(l.lts, f, fst);
    roots = {sc.psi, sc.rho};
  }
  for (FormulaId r : roots) {
    if (dag) {
      out << fst.export_dag(r);
      out << "dag_size " << dag_size(fst, r) << " tree_size " << tree_size(fst, r) << "\n";
    } else {
      out << fst.to_string(r) << "\n";
    }
  }
  return kExitHolds;
}

int run_mc(const std::string& formula_file, const std::string& aut_file, const std::optional<std::string>& state,
           std::ostream& out) {
  FormulaStore fst;
  FormulaId f = parse_formula(read_file(formula_file), fst);
  FiniteLts lts = load_aut(aut_file);
  std::vector<bool> sat = satisfying_states(lts, fst, f);
  if (state) {
    bool holds = sat[aut_state(lts, *state)];
    out << (holds ? "true" : "false") << "\n";
    return holds ? kExitHolds : kExitFails;
  }
  for (StateId s = 0; s < lts.num_states(); ++s)
    if (sat[s]) out << state_name(lts, s) << "\n";
  return kExitHolds;
}

void emit_aut(std::ostream& out, const std::string& path, const FiniteLts& lts, const std::string& what) {
  if (path.empty()) {
    out << "# " << what << "\n" << export_aut(lts);
  } else {
    write_file(path, export_aut(lts));
  }
}

int run_reduce(const std::string& scheme, const std::vector<std::string>& inputs, std::optional<std::size_t> d,
               const std::string& out_left, const std::string& out_right, std::size_t max_states, std::ostream& out) {
  ExplorationLimit lim{max_states, std::nullopt, std::nullopt};
  if (scheme == "maxquot") {
    if (inputs.size() != 1) throw PreconditionError("maxquot takes one .aut file");
    FiniteLts q = max_quotient(load_aut(inputs[0]));
    emit_aut(out, out_left, q, "maximal-transition quotient");
    return kExitHolds;
  }
  if (scheme == "pre2eq") {
    if (inputs.size() != 3) throw PreconditionError("pre2eq takes FILE S T");
    Loaded l = load_process(inputs[0], {inputs[1], inputs[2]}, lim);
    require_complete(l.lts);
    EqInstance e = simpre_to_simeq(l.lts, l.roots[0], l.roots[1]);
    out << "s' = " << e.s << "\nt' = " << e.t << "\n";
    emit_aut(out, out_left, e.lts, "simulation-equivalence instance");
    return kExitHolds;
  }
  if (inputs.size() != 4) throw PreconditionError("bisim2sim takes LEFT S RIGHT T");
  Pair p = load_pair(inputs[0], inputs[1], inputs[2], inputs[3], lim);
  require_complete(p.left->lts);
  require_complete(p.right->lts);
  SimInstance si = bisim_to_sim(p.left->lts, p.s, p.right->lts, p.t, d);
  out << "s' = " << si.s << "\nt' = " << si.t << "\n";
  emit_aut(out, out_left, si.left, "left");
  emit_aut(out, out_right, si.right, "right");
  return kExitHolds;
}

int run_encode(const std::string& gadget, const std::string& input, std::ostream& out) {
  if (gadget == "qbf-pda-fs") {
    QbfEncoding e = qbf_to_pda_fs(load_qbf(input));
    out << "# pushdown side, start " << pda_config_label(e.pda, e.start) << "\n" << print_pda(e.pda);
    out << "# finite-state side, start " << e.fs.label(e.f) << "\n" << print_lts_rules(e.fs);
    return kExitHolds;
  }
  MinskyMachine m = load_minsky(input);
  if (gadget == "minsky-pn") {
    PnEncoding e = minsky_to_pn(m);
    out << "# M = " << e.system.store().to_string(e.m) << ", M' = " << e.system.store().to_string(e.m_prime) << "\n";
    out << print_system(e.system);
    return kExitHolds;
  }
  PaFsEncoding e = minsky_to_pa_fs(m);
  out << "# PA side, start " << e.pa.store().to_string(e.start) << "\n" << print_system(e.pa);
  out << "# finite-state side, start " << e.fs.store().constant_name(e.f1) << "\n" << print_system(e.fs);
  return kExitHolds;
}

int run_dd(const std::string& file, const std::string& term, const std::string& spec_text, std::size_t max_states,
           std::size_t max_depth, std::ostream& out) {
  DdSpec spec = parse_dd_spec(spec_text);
  auto store = std::make_shared<TermStore>();
  PrsSystem sys = load_system(file, store);
  TermId t = parse_term(term, *store);
  FiniteLts lts = explore(sys, std::span<const TermId>(&t, 1), {max_states, max_depth, std::nullopt});
  auto vals = dd_eval_partial(lts, spec);
  const auto& v = vals[*lts.state_of(t)];
  out << spec.to_string() << " = " << (v ? v->to_string() : std::string("?")) << "\n";
  if (has_class(sys, ProcessClass::BPP)) {
    if (auto q = find_q(sys, spec, std::span<const TermId>(&t, 1))) {
      out << "Q = {";
      for (std::size_t i = 0; i < q->size(); ++i) out << (i ? ", " : "") << store->constant_name((*q)[i]);
      out << "}\n";
    }
  }
  return v ? kExitHolds : kExitFails;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivalence checking for process rewrite systems", "prsequiv"};
  app.require_subcommand(1);
  std::size_t max_states = 100000;
  std::optional<std::size_t> max_depth;

  std::string file;
  auto* parse = app.add_subcommand("parse", "Parse a .prs file and print it back");
  parse->add_option("file", file)->required();
  auto* classify_cmd = app.add_subcommand("classify", "Print the process classes of a .prs system");
  classify_cmd->add_option("file", file)->required();

  std::vector<std::string> terms;
  auto* norm_cmd = app.add_subcommand("norm", "Print constant norms, or the norms of the given terms");
  norm_cmd->add_option("file", file)->required();
  norm_cmd->add_option("terms", terms);

  std::string term, out_path;
  auto* explore_cmd = app.add_subcommand("explore", "Explore a term into an .aut LTS");
  explore_cmd->add_option("file", file)->required();
  explore_cmd->add_option("term", term)->required();
  explore_cmd->add_option("--max-states", max_states);
  explore_cmd->add_option("--max-depth", max_depth);
  explore_cmd->add_option("--out", out_path, "Write the .aut here instead of stdout");

  CheckOptions co;
  auto* check = app.add_subcommand("check", "Decide an equivalence or preorder between two processes");
  check->add_option("left", co.left)->required();
  check->add_option("s", co.s)->required();
  check->add_option("right", co.right)->required();
  check->add_option("t", co.t)->required();
  check->add_option("--kind", co.kind)->check(CLI::IsMember({"bisim", "weak", "sim", "simeq", "trace", "kbisim"}));
  check->add_option("--method", co.method)->check(CLI::IsMember({"partition", "game", "base", "thm3"}));
  check->add_option("--k", co.k);
  check->add_flag("--witness", co.witness, "Print the winner's strategy");
  check->add_option("--max-states", co.max_states);
  check->add_option("--max-depth", co.max_depth);

  std::string spec;
  std::size_t dd_depth = 64;
  auto* dd = app.add_subcommand("dd", "Evaluate a DD-function at a term");
  dd->add_option("file", file)->required();
  dd->add_option("term", term)->required();
  dd->add_option("spec", spec)->required();
  dd->add_option("--max-states", max_states);
  dd->add_option("--max-depth", dd_depth);

  std::string variant = "nbpa", fs_file;
  auto* base = app.add_subcommand("base", "Compute a bisimulation base");
  base->add_option("file", file)->required();
  base->add_option("fs", fs_file, "Finite-state system for bpa-fs-weak");
  base->add_option("--variant", variant)->check(CLI::IsMember({"nbpa", "bpa-fs-weak"}));

  std::string logic = "hm", state;
  std::optional<std::size_t> k;
  bool dag = false;
  auto* charform = app.add_subcommand("charform", "Emit a characteristic formula of a finite-state process");
  charform->add_option("file", file)->required();
  charform->add_option("state", state)->required();
  charform->add_option("--logic", logic)->check(CLI::IsMember({"hm", "ef", "mu", "sim"}));
  charform->add_option("--k", k);
  charform->add_flag("--dag", dag, "Print the shared DAG and its sizes");
  charform->add_option("--max-states", max_states);

  std::string formula_file;
  std::optional<std::string> mc_state;
  auto* mc = app.add_subcommand("mc", "Model check a formula on an .aut LTS");
  mc->add_option("formula", formula_file)->required();
  mc->add_option("aut", file)->required();
  mc->add_option("state", mc_state);

  std::string scheme = "bisim2sim", out_right;
  std::vector<std::string> inputs;
  std::optional<std::size_t> branching;
  auto* reduce = app.add_subcommand("reduce", "Apply a reduction scheme");
  reduce->add_option("--scheme", scheme)->check(CLI::IsMember({"bisim2sim", "pre2eq", "maxquot"}));
  reduce->add_option("inputs", inputs)->required();
  reduce->add_option("--d", branching, "Branching bound for bisim2sim");
  reduce->add_option("--out", out_path, "Output .aut (left side for bisim2sim)");
  reduce->add_option("--out-right", out_right, "Right-side output .aut for bisim2sim");
  reduce->add_option("--max-states", max_states);

  std::string gadget;
  auto* encode = app.add_subcommand("encode", "Build a hardness gadget from a Minsky machine or QBF");
  encode->add_option("--gadget", gadget)->required()->check(CLI::IsMember({"minsky-pn", "minsky-pa-fs", "qbf-pda-fs"}));
  encode->add_option("input", file)->required();

  std::string role = "attacker";
  auto* game = app.add_subcommand("game", "Play the equivalence game against the solver");
  game->add_option("left", co.left)->required();
  game->add_option("s", co.s)->required();
  game->add_option("right", co.right)->required();
  game->add_option("t", co.t)->required();
  game->add_option("--kind", co.kind)->check(CLI::IsMember({"bisim", "weak", "sim"}));
  game->add_option("--as", role)->check(CLI::IsMember({"attacker", "defender"}));
  game->add_option("--max-states", co.max_states);

  std::vector<std::string> fact;
  auto* facts = app.add_subcommand("facts", "Look up a decidability result: facts LEFT RELATION RIGHT");
  facts->add_option("query", fact)->required()->expected(3);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitError;
  }

  try {
    if (parse->parsed()) {
      out << print_system(load_system(file));
      return kExitHolds;
    }
    if (classify_cmd->parsed()) {
      PrsSystem sys = load_system(file);
      bool first = true;
      for (ProcessClass c : classify(sys)) {
        out << (first ? "" : " ") << class_name(c);
        first = false;
      }
      out << "\n";
      return kExitHolds;
    }
    if (norm_cmd->parsed()) {
      auto store = std::make_shared<TermStore>();
      PrsSystem sys = load_system(file, store);
      std::vector<ExtNat> norms = constant_norms(sys);
      if (terms.empty()) {
        for (ConstId c : sys.constants())
          out << store->constant_name(c) << " " << norms[static_cast<std::uint32_t>(c)].to_string() << "\n";
      }
      for (const std::string& t : terms)
        out << t << " " << norm_with(*store, norms, parse_term(t, *store)).to_string() << "\n";
      return kExitHolds;
    }
    if (explore_cmd->parsed()) {
      Loaded l = load_process(file, {term}, {max_states, max_depth, std::nullopt});
      std::string aut = export_aut(l.lts);
      if (out_path.empty()) {
        out << aut;
      } else {
        write_file(out_path, aut);
        out << l.lts.num_states() << " states, " << l.lts.num_transitions() << " transitions"
            << (l.lts.all_complete() ? "" : " (cut off)") << "\n";
      }
      return kExitHolds;
    }
    if (check->parsed()) return run_check(co, out);
    if (dd->parsed()) return run_dd(file, term, spec, max_states, dd_depth, out);
    if (base->parsed()) {
      auto store = std::make_shared<TermStore>();
      PrsSystem sys = load_system(file, store);
      if (variant == "nbpa") {
        out << print_base(*store, NbpaDecider(sys).base());
      } else {
        if (fs_file.empty()) throw PreconditionError("bpa-fs-weak needs the finite-state system file");
        PrsSystem fs = load_system(fs_file, store);
        WeakBpaFsDecider dec(sys, fs);
        out << print_base(*store, dec.base());
      }
      return kExitHolds;
    }
    if (charform->parsed()) return run_charform(file, state, logic, k, dag, max_states, out);
    if (mc->parsed()) return run_mc(formula_file, file, mc_state, out);
    if (reduce->parsed()) return run_reduce(scheme, inputs, branching, out_path, out_right, max_states, out);
    if (encode->parsed()) return run_encode(gadget, file, out);
    if (game->parsed()) {
      Pair p = load_pair(co.left, co.s, co.right, co.t, {co.max_states, std::nullopt, std::nullopt});
      return run_game(p, game_kind(co.kind), role == "attacker", in, out);
    }
    if (facts->parsed()) {
      if (auto e = lookup_fact(fact[0], fact[1], fact[2])) {
        out << describe_fact(*e) << "\n";
        if (!e->note.empty()) out << e->note << "\n";
        return kExitHolds;
      }
      out << "not covered by the paper\n";
      return kExitFails;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cli_main(args, std::cin, std::cout, std::cerr);
}

}  // namespace prsequiv
