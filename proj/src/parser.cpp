#include "bnsr/group.hpp"

#include <cctype>

namespace bnsr {
namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  GroupExpr parse() {
    GroupExpr e = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  // 'x' as a standalone word, or the UTF-8 multiplication sign
  bool accept_times() {
    skip_space();
    if (s_.compare(pos_, 2, "\xC3\x97") == 0) {
      pos_ += 2;
      return true;
    }
    if (pos_ < s_.size() && s_[pos_] == 'x' &&
        (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])))) {
      ++pos_;
      return true;
    }
    return false;
  }

  int number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 6) throw ParseError("number too large", start);
    return std::stoi(s_.substr(start, pos_ - start));
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  GroupExpr expr() {
    std::vector<GroupExpr> fs{dprod()};
    while (accept('*')) fs.push_back(dprod());
    if (fs.size() == 1) return fs.front();
    try {
      return GroupExpr::free(std::move(fs));
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  GroupExpr dprod() {
    std::vector<GroupExpr> fs{primary()};
    while (accept_times()) fs.push_back(primary());
    if (fs.size() == 1) return fs.front();
    return GroupExpr::direct(std::move(fs));
  }

  GroupExpr primary() {
    if (accept('(')) {
      GroupExpr e = expr();
      expect(')');
      return e;
    }
    skip_space();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail(pos_ < s_.size() ? "expected a group" : "unexpected end of input");
    try {
      return atom(w);
    } catch (const std::out_of_range& e) {
      throw ParseError(std::string("parameter out of range: ") + e.what(), start);
    }
  }

  int param() {
    expect('(');
    int n = number();
    expect(')');
    return n;
  }

  GroupAtom atom(const std::string& w) {
    if (w == "Z") {
      if (accept('^')) return GroupAtom::free_abelian(number());
      return GroupAtom::free_abelian(1);
    }
    if (w == "F") return GroupAtom::free_group(param());
    if (w == "BS") {
      expect('(');
      const std::size_t at = pos_;
      const int m = number();
      expect(',');
      const int n = number();
      expect(')');
      if (m != 1) throw ParseError("only BS(1,n) is supported", at);
      return GroupAtom::baumslag_solitar(n);
    }
    if (w == "Klein") return GroupAtom::klein();
    if (w == "B") return GroupAtom::braid(param());
    if (w == "Thompson") return GroupAtom::thompson();
    if (w == "T") return GroupAtom::generalized_thompson(param());
    if (w == "L") return GroupAtom::lamplighter(param());
    if (w == "Zmod") return GroupAtom::cyclic(param());
    throw ParseError("unknown group '" + w + "'", pos_ - w.size());
  }
};

}  // namespace

GroupExpr parse_group_expr(const std::string& text) { return Parser(text).parse(); }

}  // namespace bnsr
