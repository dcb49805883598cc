#pragma once

// Concrete syntax for programs (.lp) and frameworks (.aba).
//
//   .lp   p :- not q, r.        fact.        not s :- s, not p.
//   .aba  #assumption a.   #contrary a = p.   #sentence x.
//         p <- a, b.       q <- .             "any text" <- a.
//
// `%` starts a line comment. Atoms match [a-z][A-Za-z0-9_]*; `not` is a
// reserved word and must be followed by whitespace. Sentences in .aba files
// may also be double-quoted strings, which is how sentences that are neither
// atoms nor naf-atoms are written.

#include "nafaba/aba.hpp"
#include "nafaba/error.hpp"
#include "nafaba/lp.hpp"
#include "nafaba/names.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace nafaba {

struct Diagnostic {
  SourceLocation location;
  std::string message;
};

namespace detail {

enum class Tok { ident, naf, quoted, if_lp, if_aba, comma, dot, equals, directive, end };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

inline std::string describe(const Token& t) {
  switch (t.kind) {
  case Tok::ident:
    return "'" + t.text + "'";
  case Tok::naf:
    return "'not'";
  case Tok::quoted:
    return "quoted sentence";
  case Tok::if_lp:
    return "':-'";
  case Tok::if_aba:
    return "'<-'";
  case Tok::comma:
    return "','";
  case Tok::dot:
    return "'.'";
  case Tok::equals:
    return "'='";
  case Tok::directive:
    return "'#" + t.text + "'";
  case Tok::end:
    return "end of input";
  }
  return "token";
}

class Lexer {
public:
  Lexer(std::string_view text, bool allow_quoted) : text_(text), allow_quoted_(allow_quoted) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space_and_comments();
      const SourceLocation start = loc_;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::end, "", start});
        return out;
      }
      const char c = text_[pos_];
      if (c >= 'a' && c <= 'z') {
        std::string word = read_word();
        if (word == "not") {
          if (pos_ < text_.size() && !is_space(text_[pos_]))
            throw ParseError(loc_, "whitespace required after 'not'");
          out.push_back({Tok::naf, word, start});
        } else {
          out.push_back({Tok::ident, std::move(word), start});
        }
      } else if ((c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_') {
        throw ParseError(start, "identifiers must start with a lowercase letter");
      } else if (c == '"' && allow_quoted_) {
        out.push_back({Tok::quoted, read_quoted(), start});
      } else if (c == ':' && peek(1) == '-') {
        advance(2);
        out.push_back({Tok::if_lp, ":-", start});
      } else if (c == '<' && peek(1) == '-') {
        advance(2);
        out.push_back({Tok::if_aba, "<-", start});
      } else if (c == ',') {
        advance(1);
        out.push_back({Tok::comma, ",", start});
      } else if (c == '.') {
        advance(1);
        out.push_back({Tok::dot, ".", start});
      } else if (c == '=') {
        advance(1);
        out.push_back({Tok::equals, "=", start});
      } else if (c == '#') {
        advance(1);
        if (pos_ >= text_.size() || text_[pos_] < 'a' || text_[pos_] > 'z')
          throw ParseError(start, "expected directive name after '#'");
        out.push_back({Tok::directive, read_word(), start});
      } else {
        throw ParseError(start, std::string("unexpected character '") + c + "'");
      }
    }
  }

private:
  static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
  static bool is_word(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  }

  char peek(std::size_t k) const { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; }

  void advance(std::size_t n) {
    for (std::size_t k = 0; k < n && pos_ < text_.size(); ++k, ++pos_) {
      if (text_[pos_] == '\n') {
        ++loc_.line;
        loc_.column = 1;
      } else {
        ++loc_.column;
      }
    }
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      if (is_space(text_[pos_])) {
        advance(1);
      } else if (text_[pos_] == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          advance(1);
      } else {
        break;
      }
    }
  }

  std::string read_word() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && is_word(text_[pos_]))
      advance(1);
    return std::string(text_.substr(begin, pos_ - begin));
  }

  std::string read_quoted() {
    const SourceLocation start = loc_;
    advance(1);
    std::string out;
    for (;;) {
      if (pos_ >= text_.size() || text_[pos_] == '\n')
        throw ParseError(start, "unterminated quoted sentence");
      const char c = text_[pos_];
      if (c == '"') {
        advance(1);
        break;
      }
      if (c == '\\') {
        const char n = peek(1);
        if (n != '"' && n != '\\')
          throw ParseError(loc_, "unknown escape in quoted sentence");
        out.push_back(n);
        advance(2);
        continue;
      }
      out.push_back(c);
      advance(1);
    }
    if (out.empty())
      throw ParseError(start, "empty quoted sentence");
    return out;
  }

  std::string_view text_;
  bool allow_quoted_;
  std::size_t pos_ = 0;
  SourceLocation loc_{};
};

class TokenStream {
public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at(Tok k) const { return peek().kind == k; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok k, const char* what) {
    if (!at(k))
      throw ParseError(peek().loc, std::string("expected ") + what + ", found " + describe(peek()));
    return next();
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline NamedLiteral parse_lp_literal(TokenStream& ts) {
  if (ts.at(Tok::naf)) {
    ts.next();
    if (ts.at(Tok::naf))
      throw ParseError(ts.peek().loc, "expected atom after 'not', found 'not' (double negation is not allowed)");
    return named_neg(ts.expect(Tok::ident, "atom after 'not'").text);
  }
  return named_pos(ts.expect(Tok::ident, "literal").text);
}

inline std::string literal_text(const NamedLiteral& l) { return l.negated ? naf_name(l.atom) : l.atom; }

inline std::string rule_text(const NamedRule& r) {
  std::string s = literal_text(r.head);
  if (!r.body.empty()) {
    s += " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i)
      s += (i ? ", " : "") + literal_text(r.body[i]);
  }
  return s + ".";
}

} // namespace detail

/// Parses a program; duplicate clauses are reported through `warnings`.
inline LogicProgram parse_lp(std::string_view text, std::vector<Diagnostic>* warnings = nullptr) {
  detail::TokenStream ts(detail::Lexer(text, false).run());
  std::vector<NamedRule> rules;
  std::set<std::string> seen;
  while (!ts.at(detail::Tok::end)) {
    const SourceLocation start = ts.peek().loc;
    if (ts.at(detail::Tok::if_lp))
      throw ParseError(start, "rules without a head are not allowed");
    NamedRule r{detail::parse_lp_literal(ts), {}};
    if (ts.at(detail::Tok::if_lp)) {
      ts.next();
      r.body.push_back(detail::parse_lp_literal(ts));
      while (ts.at(detail::Tok::comma)) {
        ts.next();
        r.body.push_back(detail::parse_lp_literal(ts));
      }
    }
    ts.expect(detail::Tok::dot, "'.' or ':-'");
    auto sorted = r;
    std::sort(sorted.body.begin(), sorted.body.end());
    sorted.body.erase(std::unique(sorted.body.begin(), sorted.body.end()), sorted.body.end());
    if (!seen.insert(detail::rule_text(sorted)).second && warnings)
      warnings->push_back({start, "duplicate clause"});
    rules.push_back(std::move(r));
  }
  return LogicProgram(rules);
}

namespace detail {

inline std::string parse_sentence(TokenStream& ts) {
  if (ts.at(Tok::naf)) {
    ts.next();
    if (ts.at(Tok::naf))
      throw ParseError(ts.peek().loc, "expected atom after 'not', found 'not' (double negation is not allowed)");
    return naf_name(ts.expect(Tok::ident, "atom after 'not'").text);
  }
  if (ts.at(Tok::quoted))
    return ts.next().text;
  return ts.expect(Tok::ident, "sentence").text;
}

inline std::vector<std::string> parse_sentence_list(TokenStream& ts) {
  std::vector<std::string> out{parse_sentence(ts)};
  while (ts.at(Tok::comma)) {
    ts.next();
    out.push_back(parse_sentence(ts));
  }
  return out;
}

} // namespace detail

inline AbaFramework parse_aba(std::string_view text, std::vector<Diagnostic>* warnings = nullptr) {
  using detail::Tok;
  detail::TokenStream ts(detail::Lexer(text, true).run());
  AbaBuilder b;
  std::map<std::string, SourceLocation> assumption_at;
  std::map<std::string, SourceLocation> contrary_at;
  std::set<std::string> seen_rules;

  while (!ts.at(Tok::end)) {
    const SourceLocation start = ts.peek().loc;
    if (ts.at(Tok::directive)) {
      const std::string dir = ts.next().text;
      if (dir == "assumption") {
        for (auto& a : detail::parse_sentence_list(ts)) {
          assumption_at.emplace(a, start);
          b.assumption(a);
        }
      } else if (dir == "contrary") {
        const std::string a = detail::parse_sentence(ts);
        ts.expect(Tok::equals, "'='");
        const std::string c = detail::parse_sentence(ts);
        if (b.has_contrary(a))
          throw ParseError(start, "duplicate contrary declaration for " + a);
        contrary_at.emplace(a, start);
        b.contrary(a, c);
      } else if (dir == "sentence") {
        for (auto& s : detail::parse_sentence_list(ts))
          b.sentence(s);
      } else {
        throw ParseError(start, "unknown directive '#" + dir + "'");
      }
      ts.expect(Tok::dot, "'.'");
      continue;
    }
    if (ts.at(Tok::if_aba))
      throw ParseError(start, "rules without a head are not allowed");
    NamedAbaRule r{detail::parse_sentence(ts), {}};
    ts.expect(Tok::if_aba, "'<-'");
    if (!ts.at(Tok::dot))
      r.body = detail::parse_sentence_list(ts);
    ts.expect(Tok::dot, "'.'");
    auto key = r;
    std::sort(key.body.begin(), key.body.end());
    key.body.erase(std::unique(key.body.begin(), key.body.end()), key.body.end());
    std::string k = key.head + "<-";
    for (const auto& s : key.body)
      k += s + "\x1f";
    if (!seen_rules.insert(k).second && warnings)
      warnings->push_back({start, "duplicate clause"});
    b.rule(r);
  }

  for (const auto& [a, loc] : contrary_at)
    if (!b.has_assumption(a))
      throw ParseError(loc, "contrary declared for non-assumption " + a);
  for (const auto& [a, loc] : assumption_at)
    if (!b.has_contrary(a))
      throw ParseError(loc, "contrary undefined for " + a);
  return b.build();
}

/// Bare spelling for atoms and naf-atoms, a quoted string otherwise.
inline std::string serialize_sentence(const std::string& s) {
  if (is_atom_name(s) || is_naf_name(s))
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

/// One rule per line, lines sorted.
inline std::string serialize_lp(const LogicProgram& p) {
  std::vector<std::string> lines;
  for (const NamedRule& r : p.named_rules())
    lines.push_back(detail::rule_text(r));
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& l : lines)
    out += l + "\n";
  return out;
}

/// Assumptions, contraries, otherwise-unmentioned sentences, then rules; each
/// group sorted.
inline std::string serialize_aba(const AbaFramework& d) {
  std::vector<std::string> assumptions, contraries, sentences, rules;
  SentenceSet mentioned(d.sentence_count());
  for (SentenceId a : d.assumption_list()) {
    assumptions.push_back("#assumption " + serialize_sentence(d.name(a)) + ".");
    contraries.push_back("#contrary " + serialize_sentence(d.name(a)) + " = " +
                         serialize_sentence(d.name(d.contrary(a))) + ".");
    mentioned.insert(a);
    mentioned.insert(d.contrary(a));
  }
  for (const AbaRule& r : d.rules()) {
    std::string line = serialize_sentence(d.name(r.head)) + " <-";
    mentioned.insert(r.head);
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      line += (i ? ", " : " ") + serialize_sentence(d.name(r.body[i]));
      mentioned.insert(r.body[i]);
    }
    rules.push_back(line + (r.body.empty() ? " ." : "."));
  }
  for (std::size_t i = 0; i < d.sentence_count(); ++i)
    if (!mentioned.contains(SentenceId(i)))
      sentences.push_back("#sentence " + serialize_sentence(d.name(SentenceId(i))) + ".");
  std::string out;
  for (auto* group : {&assumptions, &contraries, &sentences, &rules}) {
    std::sort(group->begin(), group->end());
    for (const auto& l : *group)
      out += l + "\n";
  }
  return out;
}

/// `{a, b}` with members in name order.
template <class Names>
std::string format_set(const Names& names) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : names) {
    out += (first ? "" : ", ") + n;
    first = false;
  }
  return out + "}";
}

inline std::vector<std::string> atom_names(const LogicProgram& p, const Interpretation& i) {
  std::vector<std::string> out;
  i.for_each([&](AtomId a) { out.push_back(p.name(a)); });
  return out;
}

inline std::vector<std::string> sentence_names(const AbaFramework& d, const SentenceSet& s) {
  std::vector<std::string> out;
  s.for_each([&](SentenceId x) { out.push_back(d.name(x)); });
  return out;
}

inline std::vector<std::string> literal_names(const LogicProgram& p, const LiteralSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Literal l) { out.push_back(p.to_string(l)); });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string reduct_rule_text(const LogicProgram& p, const ReductRule& r) {
  std::string s = r.head ? p.name(*r.head) : "";
  s += r.head ? " :-" : ":-";
  for (std::size_t i = 0; i < r.body.size(); ++i)
    s += (i ? ", " : " ") + p.name(r.body[i]);
  return s + ".";
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace nafaba
