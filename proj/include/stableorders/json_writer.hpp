#ifndef STABLEORDERS_JSON_WRITER_HPP
#define STABLEORDERS_JSON_WRITER_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stableorders {

/// Minimal streaming JSON emitter. Doubles are written with 17 significant
/// digits so they round-trip bit-exactly; NaN and infinities become null.
/// Output is compact and fully determined by the call sequence.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(int v) { return value(static_cast<std::int64_t>(v)); }
  JsonWriter& value(unsigned v) { return value(static_cast<std::uint64_t>(v)); }
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v) { return value(std::string_view(v)); }
  JsonWriter& null();
  JsonWriter& array(std::span<const double> values);
  /// Splices an already-serialized JSON document as the next value.
  JsonWriter& raw(std::string_view json);

  template <typename T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  const std::string& str() const { return out_; }

 private:
  void separator();
  void write_string(std::string_view v);

  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
};

std::string format_double(double v);

}  // namespace stableorders

#endif
