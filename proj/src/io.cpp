#include "qtchar/io.hpp"

#include <cctype>
#include <stdexcept>

namespace qtchar {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skipFiller() {
    while (pos_ < s_.size() &&
           (std::isspace(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '*'))
      ++pos_;
  }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void expect(char c) {
    if (done() || s_[pos_] != c)
      throw std::invalid_argument(std::string("parseMonomial: expected '") +
                                  c + "'");
    ++pos_;
  }
  int integer() {
    size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start ||
        (pos_ == start + 1 &&
         !std::isdigit(static_cast<unsigned char>(s_[start]))))
      throw std::invalid_argument("parseMonomial: expected an integer");
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

 private:
  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

YMonomial parseMonomial(int rank, std::string_view text) {
  Cursor cur(text);
  YMonomial m = YMonomial::unit(rank);
  cur.skipFiller();
  if (cur.done())
    throw std::invalid_argument("parseMonomial: empty input");
  if (cur.peek() == '1') {
    cur.expect('1');
    cur.skipFiller();
    if (!cur.done())
      throw std::invalid_argument("parseMonomial: trailing input after 1");
    return m;
  }
  while (!cur.done()) {
    cur.expect('Y');
    cur.expect('[');
    const int i = cur.integer();
    cur.expect(',');
    const int p = cur.integer();
    cur.expect(']');
    int e = 1;
    cur.skipFiller();
    if (!cur.done() && cur.peek() == '^') {
      cur.expect('^');
      e = cur.integer();
    }
    m *= YMonomial::generator(rank, i, p, e);
    cur.skipFiller();
  }
  return m;
}

}  // namespace qtchar
