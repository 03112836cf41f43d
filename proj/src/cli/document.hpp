#pragma once

#include <map>
#include <string>
#include <vector>

namespace skew::cli {

// A value from a problem file: a quoted string, an integer or an array.
struct Value {
  enum class Kind { string, integer, array };
  Kind kind = Kind::string;
  std::string text;
  long long number = 0;
  std::vector<Value> items;
  int line = 0;
};

struct Section {
  int line = 0;
  std::map<std::string, Value> entries;
};

// Sections by name; top-level keys live in the section named "".
struct Document {
  std::map<std::string, Section> sections;
};

// Parses the key-value format: `[section]` headers, `key = value` lines,
// `#` comments, double-quoted strings, integers and arrays that may span
// lines. Throws ParseError carrying the line number.
Document parse_document(const std::string& text);

const char* kind_name(Value::Kind k);

}  // namespace skew::cli
