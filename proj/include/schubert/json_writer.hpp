#pragma once

// Streaming JSON emitter. Integers are written with all their digits, which
// is why this exists next to nlohmann/json: coefficients of large
// Poincare polynomials and cross-multiplied numerators overflow 64 bits.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string_view>
#include <type_traits>
#include <vector>

#include "schubert/polynomial.hpp"

namespace schubert {

class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& os) : os_(os) {}

  JsonWriter& begin_object() {
    separate();
    os_ << '{';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_object() {
    first_.pop_back();
    os_ << '}';
    return *this;
  }
  JsonWriter& begin_array() {
    separate();
    os_ << '[';
    first_.push_back(true);
    return *this;
  }
  JsonWriter& end_array() {
    first_.pop_back();
    os_ << ']';
    return *this;
  }

  JsonWriter& key(std::string_view name) {
    separate();
    quote(name);
    os_ << ':';
    after_key_ = true;
    return *this;
  }

  JsonWriter& value(std::string_view s) {
    separate();
    quote(s);
    return *this;
  }
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& value(bool b) {
    separate();
    os_ << (b ? "true" : "false");
    return *this;
  }
  template <class Int>
    requires(std::is_integral_v<Int> && !std::is_same_v<Int, bool>)
  JsonWriter& value(Int n) {
    separate();
    os_ << n;
    return *this;
  }
  JsonWriter& value(const Integer& n) {
    separate();
    os_ << n;
    return *this;
  }
  JsonWriter& null() {
    separate();
    os_ << "null";
    return *this;
  }

  /// Ascending coefficient array from degree 0, interior zeros included.
  JsonWriter& value(const Polynomial& p) {
    begin_array();
    for (const auto& c : p.coefficients()) value(c);
    return end_array();
  }

  template <class T>
  JsonWriter& field(std::string_view name, const T& v) {
    key(name);
    return value(v);
  }

 private:
  void separate() {
    if (after_key_) {
      after_key_ = false;
      return;
    }
    if (first_.empty()) return;
    if (!first_.back()) os_ << ',';
    first_.back() = false;
  }

  void quote(std::string_view s) {
    os_ << '"';
    for (char ch : s) {
      switch (ch) {
        case '"': os_ << "\\\""; break;
        case '\\': os_ << "\\\\"; break;
        case '\n': os_ << "\\n"; break;
        case '\t': os_ << "\\t"; break;
        default: os_ << ch;
      }
    }
    os_ << '"';
  }

  std::ostream& os_;
  std::vector<bool> first_;
  bool after_key_ = false;
};

}  // namespace schubert
