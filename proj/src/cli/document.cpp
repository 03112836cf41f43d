#include "document.hpp"

#include <cctype>
#include <charconv>

#include "skew/error.hpp"

namespace skew::cli {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Drops a trailing comment, respecting quotes.
std::string strip_comment(const std::string& s) {
  bool quoted = false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '"') quoted = !quoted;
    if (s[k] == '#' && !quoted) return s.substr(0, k);
  }
  return s;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

class ValueParser {
 public:
  ValueParser(std::string text, int line) : s_(std::move(text)), line_(line) {}

  Value parse_all() {
    Value v = parse_value();
    skip();
    if (pos_ != s_.size()) fail(line_, "unexpected text after value: '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  Value parse_value() {
    skip();
    if (pos_ >= s_.size()) fail(line_, "missing value");
    Value v;
    v.line = line_;
    const char c = s_[pos_];
    if (c == '"') {
      const std::size_t close = s_.find('"', pos_ + 1);
      if (close == std::string::npos) fail(line_, "unterminated string");
      v.kind = Value::Kind::string;
      v.text = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return v;
    }
    if (c == '[') {
      ++pos_;
      v.kind = Value::Kind::array;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ']') {
        ++pos_;
        return v;
      }
      for (;;) {
        v.items.push_back(parse_value());
        skip();
        if (pos_ >= s_.size()) fail(line_, "unterminated array");
        if (s_[pos_] == ',') {
          ++pos_;
          skip();
          // Trailing comma before the closing bracket.
          if (pos_ < s_.size() && s_[pos_] == ']') {
            ++pos_;
            return v;
          }
          continue;
        }
        if (s_[pos_] == ']') {
          ++pos_;
          return v;
        }
        fail(line_, "expected ',' or ']' in array");
      }
    }
    std::size_t end = pos_;
    if (end < s_.size() && (s_[end] == '-' || s_[end] == '+')) ++end;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    const std::string token = s_.substr(pos_, end - pos_);
    long long number = 0;
    const char* first = token.data() + (token.size() > 0 && token[0] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), number);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      fail(line_, "expected a quoted string, an integer or an array");
    }
    v.kind = Value::Kind::integer;
    v.number = number;
    pos_ = end;
    return v;
  }

  std::string s_;
  int line_;
  std::size_t pos_ = 0;
};

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::string:
      return "string";
    case Value::Kind::integer:
      return "integer";
    case Value::Kind::array:
      return "array";
  }
  return "value";
}

Document parse_document(const std::string& text) {
  Document doc;
  doc.sections[""].line = 1;
  std::string current;
  std::vector<std::string> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      lines.push_back(text.substr(start, nl == std::string::npos ? std::string::npos : nl - start));
      if (nl == std::string::npos) break;
      start = nl + 1;
    }
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    const int line_no = static_cast<int>(k + 1);
    std::string line = trim(strip_comment(lines[k]));
    if (line.empty()) continue;
    if (line.front() == '[' && line.find('=') == std::string::npos) {
      if (line.back() != ']') fail(line_no, "malformed section header");
      current = trim(line.substr(1, line.size() - 2));
      if (!valid_key(current)) fail(line_no, "bad section name '" + current + "'");
      if (doc.sections.count(current)) fail(line_no, "duplicate section [" + current + "]");
      doc.sections[current].line = line_no;
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(line_no, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (!valid_key(key)) fail(line_no, "bad key '" + key + "'");
    std::string value = trim(line.substr(eq + 1));
    // Arrays may continue over following lines.
    while (bracket_balance(value) > 0 && k + 1 < lines.size()) {
      ++k;
      value += " " + trim(strip_comment(lines[k]));
    }
    auto& section = doc.sections[current];
    if (section.entries.count(key)) fail(line_no, "duplicate key '" + key + "'");
    section.entries.emplace(key, ValueParser(value, line_no).parse_all());
  }
  return doc;
}

}  // namespace skew::cli
