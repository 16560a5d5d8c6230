#include "mslh/problem.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mslh {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  ProblemFile problem(bool allow_non_horn) {
    ProblemFile out;
    for (skip_space(); !at_end(); skip_space()) {
      if (peek() == '#') {
        directive(out);
        continue;
      }
      auto [line, col] = std::pair{line_, col_};
      Clause c = clause();
      if (!allow_non_horn && !c.is_horn())
        throw ParseError("non-Horn clause is not supported", line, col);
      try {
        out.signature.absorb(c);
      } catch (const SignatureError& e) {
        throw ParseError(e.what(), line, col);
      }
      out.clauses.push_back(std::move(c));
    }
    return out;
  }

  Clause clause() {
    Clause c;
    skip_space();
    if (lookahead_word() == "false") {
      word();
      expect('.');
      return c;
    }
    while (true) {
      skip_space();
      bool negative = false;
      if (peek() == '~') {
        advance();
        negative = true;
      }
      Atom a = atom();
      (negative ? c.antecedent : c.succedent).push_back(std::move(a));
      skip_space();
      if (peek() == '|') {
        advance();
        continue;
      }
      expect('.');
      return c;
    }
  }

  Atom atom() {
    skip_space();
    auto [line, col] = std::pair{line_, col_};
    if (!std::islower(static_cast<unsigned char>(peek())))
      throw ParseError("expected predicate symbol", line, col);
    Atom a(word());
    a.args = arguments();
    return a;
  }

  Term term() {
    skip_space();
    char ch = peek();
    if (std::isupper(static_cast<unsigned char>(ch)) || ch == '_') return Term::var(word());
    if (std::islower(static_cast<unsigned char>(ch))) {
      std::string name = word();
      return Term::app(std::move(name), arguments());
    }
    fail("expected term");
  }

  void finish() {
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end()) {
      char ch = peek();
      if (ch == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else {
        break;
      }
    }
  }

  void expect(char ch) {
    skip_space();
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    advance();
  }

 private:
  std::vector<Term> arguments() {
    std::vector<Term> args;
    skip_space();
    if (peek() != '(') return args;
    advance();
    while (true) {
      args.push_back(term());
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      expect(')');
      return args;
    }
  }

  void directive(ProblemFile& out) {
    auto [line, col] = std::pair{line_, col_};
    advance();
    std::string name = word();
    if (name != "split") throw ParseError("unknown directive '#" + name + "'", line, col);
    skip_space();
    if (!std::islower(static_cast<unsigned char>(peek()))) fail("expected predicate after #split");
    out.split_predicates.push_back(word());
  }

  std::string lookahead_word() const {
    std::size_t p = pos_;
    while (p < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_'))
      ++p;
    return text_.substr(pos_, p - pos_);
  }

  std::string word() {
    std::string w = lookahead_word();
    if (w.empty()) fail("expected identifier");
    for (std::size_t i = 0; i < w.size(); ++i) advance();
    return w;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  const std::string& text_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

}  // namespace

ProblemFile parse_problem(const std::string& text, bool allow_non_horn) {
  return Parser(text).problem(allow_non_horn);
}

ProblemFile parse_problem_file(const std::string& path, bool allow_non_horn) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str(), allow_non_horn);
}

Term parse_term(const std::string& text) {
  Parser p(text);
  Term t = p.term();
  p.finish();
  return t;
}

Atom parse_atom(const std::string& text) {
  Parser p(text);
  Atom a = p.atom();
  p.finish();
  return a;
}

Clause parse_clause(const std::string& text) {
  std::string s = text;
  auto last = s.find_last_not_of(" \t\n");
  if (last == std::string::npos || s[last] != '.') s += ".";
  Parser p(s);
  Clause c = p.clause();
  p.finish();
  return c;
}

ClauseSet parse_clauses(const std::string& text) { return parse_problem(text, true).clauses; }

std::string print_clause(const Clause& c) { return c.to_string() + "."; }

std::string print_clauses(const ClauseSet& cs) {
  std::string out;
  for (const auto& c : cs) out += print_clause(c) + "\n";
  return out;
}

std::string print_problem(const ProblemFile& p) {
  std::string out;
  for (const auto& r : p.split_predicates) out += "#split " + r + "\n";
  return out + print_clauses(p.clauses);
}

}  // namespace mslh
