#pragma once

#include <cstdint>
#include <string>
#include <type_traits>

namespace specmono {

/// Streaming JSON writer with deterministic formatting: keys in insertion
/// order, floating-point values printed with 17 significant digits, "\n"-free
/// single-line output. Big integers can be written as raw number tokens.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  template <class T>
    requires(std::is_integral_v<T> && !std::is_same_v<T, bool> &&
             !std::is_same_v<T, std::int64_t> && !std::is_same_v<T, std::uint64_t>)
  JsonWriter& value(T v) {
    if constexpr (std::is_signed_v<T>)
      return value(static_cast<std::int64_t>(v));
    else
      return value(static_cast<std::uint64_t>(v));
  }
  JsonWriter& value(const char* s) { return value(std::string(s)); }
  JsonWriter& value(const std::string& s);
  JsonWriter& null();
  /// Verbatim number token (arbitrary-precision integers).
  JsonWriter& raw_number(const std::string& digits);

  const std::string& str() const { return out_; }

  static std::string format_double(double v);

 private:
  void comma();
  std::string out_;
  bool need_comma_ = false;
};

}  // namespace specmono
