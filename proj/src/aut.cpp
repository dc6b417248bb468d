#include "prsequiv/aut.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "prsequiv/error.hpp"

namespace prsequiv {

std::string export_aut(const FiniteLts& lts) {
  std::ostringstream out;
  out << "des (" << lts.initial() << "," << lts.num_transitions() << "," << lts.num_states() << ")\n";
  for (StateId s = 0; s < lts.num_states(); ++s)
    for (const Edge& e : lts.out(s)) out << "(" << s << ",\"" << lts.action_name(e.action) << "\"," << e.target << ")\n";
  return out.str();
}

namespace {

class Cursor {
 public:
  Cursor(std::string_view s, std::size_t line) : s_(s), line_(line) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  void expect(char c) {
    skip_ws();
    if (i_ >= s_.size() || s_[i_] != c) fail(std::string("expected '") + c + "'");
    ++i_;
  }
  std::size_t number() {
    skip_ws();
    std::size_t b = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (b == i_) fail("expected a number");
    return std::stoull(std::string(s_.substr(b, i_ - b)));
  }
  std::string label() {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == '"') {
      std::size_t e = s_.find('"', i_ + 1);
      if (e == std::string_view::npos) fail("unterminated label");
      std::string l(s_.substr(i_ + 1, e - i_ - 1));
      i_ = e + 1;
      return l;
    }
    std::size_t b = i_;
    while (i_ < s_.size() && s_[i_] != ',') ++i_;
    std::string l(s_.substr(b, i_ - b));
    while (!l.empty() && std::isspace(static_cast<unsigned char>(l.back()))) l.pop_back();
    if (l.empty()) fail("expected a label");
    return l;
  }
  void expect_end() {
    skip_ws();
    if (i_ != s_.size()) fail("trailing characters");
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, i_ + 1); }

 private:
  std::string_view s_;
  std::size_t line_;
  std::size_t i_ = 0;
};

}  // namespace

FiniteLts import_aut(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::size_t root = 0, ntrans = 0, nstates = 0, seen = 0;
  LtsBuilder b;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Cursor c(line, line_no);
    if (!header) {
      c.skip_ws();
      if (line.compare(line.find_first_not_of(" \t"), 3, "des") != 0) c.fail("expected 'des' header");
      Cursor h(std::string_view(line).substr(line.find("des") + 3), line_no);
      h.expect('(');
      root = h.number();
      h.expect(',');
      ntrans = h.number();
      h.expect(',');
      nstates = h.number();
      h.expect(')');
      h.expect_end();
      if (nstates == 0 || root >= nstates) c.fail("root state out of range");
      for (std::size_t s = 0; s < nstates; ++s) b.add_state(std::to_string(s));
      b.set_initial(static_cast<StateId>(root));
      header = true;
      continue;
    }
    c.expect('(');
    std::size_t src = c.number();
    c.expect(',');
    std::string lab = c.label();
    c.expect(',');
    std::size_t dst = c.number();
    c.expect(')');
    c.expect_end();
    if (src >= nstates || dst >= nstates) c.fail("state out of range");
    b.add_transition(static_cast<StateId>(src), lab, static_cast<StateId>(dst));
    ++seen;
  }
  if (!header) throw ParseError("missing 'des' header", line_no, 1);
  if (seen != ntrans)
    throw ParseError("header announces " + std::to_string(ntrans) + " transitions, found " + std::to_string(seen),
                     line_no, 1);
  return std::move(b).build();
}

FiniteLts load_aut(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return import_aut(ss.str());
}

}  // namespace prsequiv
