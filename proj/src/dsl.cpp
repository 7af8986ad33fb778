#include "topo/dsl.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "topo/errors.hpp"

namespace topo {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' || c == '.' || c == '\'';
}

class LineCursor {
 public:
  LineCursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  std::size_t column() const { return pos_ + 1; }
  std::size_t line() const { return line_; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, column(), what); }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t number() {
    skip_space();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])) != 0) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a non-negative integer");
    return value;
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  PointSet point_set(std::size_t points) {
    expect('{');
    PointSet out;
    while (peek() != '}') {
      if (at_end()) fail("unterminated set, expected '}'");
      const std::size_t col = column();
      const std::size_t p = number();
      if (p >= points) {
        throw ParseError(line_, col,
                         "point " + std::to_string(p) + " is out of range for " + std::to_string(points) + " points");
      }
      out.insert(static_cast<Point>(p));
    }
    expect('}');
    return out;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

struct PendingSpace {
  std::string name;
  std::size_t line = 0;
  std::optional<std::size_t> points;
  std::optional<bool> from_subbasis;
  std::size_t sets_line = 0;
  std::vector<PointSet> sets;
};

class Parser {
 public:
  SpaceDocument run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      statement(LineCursor(line, line_no));
      start = end + 1;
    }
    finish_space();
    check_classes();
    return std::move(doc_);
  }

 private:
  void statement(LineCursor cur) {
    if (cur.at_end() || cur.peek() == '#') return;
    if (cur.peek() == '{') {
      if (!pending_ || !pending_->from_subbasis) cur.fail("set list outside an 'opens' or 'subbasis' statement");
      read_sets(cur);
      return;
    }
    const std::size_t col = cur.column();
    const std::string keyword = cur.word();
    if (keyword == "space") {
      finish_space();
      pending_.emplace();
      pending_->name = cur.word();
      pending_->line = cur.line();
      if (doc_.find_space(pending_->name)) cur.fail("space '" + pending_->name + "' is already defined");
    } else if (keyword == "points") {
      if (!pending_) cur.fail("'points' outside a space block");
      if (pending_->points) cur.fail("'points' given twice");
      const std::size_t k = cur.number();
      if (k > kMaxPoints) cur.fail("at most " + std::to_string(kMaxPoints) + " points are supported");
      pending_->points = k;
    } else if (keyword == "opens" || keyword == "subbasis") {
      if (!pending_) cur.fail("'" + keyword + "' outside a space block");
      if (!pending_->points) cur.fail("'points' must come before '" + keyword + "'");
      if (pending_->from_subbasis) cur.fail("space already has an 'opens' or 'subbasis' statement");
      pending_->from_subbasis = keyword == "subbasis";
      pending_->sets_line = cur.line();
      read_sets(cur);
    } else if (keyword == "class") {
      finish_space();
      class_decl(cur);
    } else {
      throw ParseError(cur.line(), col, "unknown statement '" + keyword + "'");
    }
    if (!cur.at_end() && cur.peek() != '#') cur.fail("unexpected trailing text");
  }

  void read_sets(LineCursor& cur) {
    while (!cur.at_end() && cur.peek() != '#') pending_->sets.push_back(cur.point_set(*pending_->points));
  }

  void class_decl(LineCursor& cur) {
    ClassDecl decl;
    decl.line = cur.line();
    decl.name = cur.word();
    cur.expect('=');
    if (cur.peek() == '[') {
      cur.expect('[');
      while (cur.peek() != ']') {
        if (cur.at_end()) cur.fail("unterminated member list, expected ']'");
        if (!decl.members.empty()) cur.expect(',');
        decl.members.push_back(cur.word());
      }
      cur.expect(']');
      if (decl.members.empty()) cur.fail("class '" + decl.name + "' has no members");
    } else {
      const std::size_t col = cur.column();
      decl.builtin = cur.word();
      if (decl.builtin != "P" && decl.builtin != "A" && decl.builtin != "Sfin") {
        throw ParseError(cur.line(), col, "unknown builtin class '" + decl.builtin + "' (expected P, A or Sfin)");
      }
    }
    for (const ClassDecl& c : doc_.classes) {
      if (c.name == decl.name) cur.fail("class '" + decl.name + "' is already defined");
    }
    doc_.classes.push_back(std::move(decl));
  }

  void finish_space() {
    if (!pending_) return;
    PendingSpace p = std::move(*pending_);
    pending_.reset();
    if (!p.points) throw ParseError(p.line, 1, "space '" + p.name + "' has no 'points' statement");
    if (!p.from_subbasis) throw ParseError(p.line, 1, "space '" + p.name + "' has no 'opens' or 'subbasis' statement");
    try {
      FinSpace s = *p.from_subbasis ? FinSpace::generate(*p.points, p.sets) : FinSpace::make(*p.points, p.sets);
      doc_.spaces.push_back({p.name, std::move(s), p.line});
    } catch (const NotATopology& e) {
      throw ParseError(p.sets_line, 1, "space '" + p.name + "': " + e.what());
    }
  }

  void check_classes() const {
    for (const ClassDecl& c : doc_.classes) {
      for (const std::string& m : c.members) {
        if (!doc_.find_space(m)) {
          throw ParseError(c.line, 1, "class '" + c.name + "' refers to unknown space '" + m + "'");
        }
      }
    }
  }

  SpaceDocument doc_;
  std::optional<PendingSpace> pending_;
};

}  // namespace

const NamedSpace* SpaceDocument::find_space(std::string_view name) const {
  for (const NamedSpace& s : spaces) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

SpaceDocument parse_document(std::string_view text) { return Parser().run(text); }

SpaceDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

TestClass resolve_class(const SpaceDocument& doc, std::string_view name) {
  std::string builtin(name);
  std::vector<FinSpace> members;
  std::string declared;
  for (const ClassDecl& c : doc.classes) {
    if (c.name != name) continue;
    declared = c.name;
    builtin = c.builtin;
    for (const std::string& m : c.members) members.push_back(doc.find_space(m)->space);
  }
  if (builtin == "P") return TestClass::P();
  if (builtin == "A") return TestClass::A();
  if (builtin == "Sfin") return TestClass::Sfin();
  if (!declared.empty()) return TestClass::explicit_class(declared, std::move(members));
  throw InvalidClass("unknown class '" + std::string(name) + "'");
}

std::string format_space(const std::string& name, const FinSpace& x) {
  std::string out = "space " + name + "\npoints " + std::to_string(x.size()) + "\nopens";
  for (PointSet u : x.opens()) out += " " + u.to_string();
  return out + "\n";
}

}  // namespace topo
