#include "seacheck/parse.hpp"

#include <cctype>

namespace seacheck {

namespace {

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base = 0)
      : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  std::size_t offset() const { return base_ + pos_; }

  char take() { return text_[pos_++]; }

  bool take_if(char c) {
    if (!done() && peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (done()) {
      throw ParseError(std::string("expected '") + c + "' (" + what +
                           "), found end of input",
                       offset());
    }
    if (peek() != c) {
      throw ParseError(std::string("expected '") + c + "' (" + what +
                           "), found '" + peek() + "'",
                       offset());
    }
    ++pos_;
  }

  // nat := nonzero decimal integer, no leading zeros
  long long nat(const char* what) {
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError(std::string("expected ") + what, offset());
    }
    if (peek() == '0') {
      throw ParseError(std::string(what) + " must be a positive integer "
                                           "without leading zeros",
                       offset());
    }
    long long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (take() - '0');
      if (value > Index::max_value) {
        throw ParseError(std::string(what) + " is too large", offset());
      }
    }
    return value;
  }

  IndexSet set() {
    expect('{', "set literal");
    std::vector<int> members;
    members.push_back(static_cast<int>(nat("set member")));
    while (take_if(',')) {
      members.push_back(static_cast<int>(nat("set member")));
    }
    expect('}', "set literal");
    return IndexSet(std::move(members));
  }

  void end() {
    if (!done()) {
      throw ParseError(std::string("unexpected trailing input '") + peek() + "'",
                       offset());
    }
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse_element(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty element", 0);
  Element out = [&]() -> Element {
    switch (cur.peek()) {
      case '0':
        cur.take();
        return Element::zero();
      case '1':
        cur.take();
        return Element::one();
      case 'a':
        cur.take();
        return Element::a(Index(cur.nat("subscript")));
      case 'b':
        cur.take();
        return Element::b(Index(cur.nat("subscript")));
      case 'c': {
        cur.take();
        IndexSet s = cur.set();
        cur.expect(':', "subscript separator");
        return Element::c(std::move(s), Index(cur.nat("subscript")));
      }
      case 'd': {
        cur.take();
        IndexSet s = cur.set();
        cur.expect(':', "subscript separator");
        return Element::d(std::move(s), Index(cur.nat("subscript")));
      }
      default:
        throw ParseError(std::string("expected one of 0, 1, a, b, c, d; "
                                     "found '") +
                             cur.peek() + "'",
                         cur.offset());
    }
  }();
  cur.end();
  return out;
}

IndexSet parse_index_set(std::string_view text) {
  Cursor cur(text);
  IndexSet out = cur.set();
  cur.end();
  return out;
}

std::vector<IndexSet> parse_chain(std::string_view text) {
  std::vector<IndexSet> out;
  std::size_t start = 0;
  while (true) {
    std::size_t sep = text.find(';', start);
    std::string_view piece = text.substr(
        start, sep == std::string_view::npos ? std::string_view::npos
                                             : sep - start);
    Cursor cur(piece, start);
    out.push_back(cur.set());
    cur.end();
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  return out;
}

}  // namespace seacheck
