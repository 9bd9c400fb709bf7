#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "stableorders/json_writer.hpp"

using namespace stableorders;

TEST_CASE("writer output") {
  JsonWriter w;
  const std::vector<double> xs{1.5, -2.0};
  w.begin_object().field("a", 1).field("b", true).field("s", "q\"\n").key("xs").array(xs).key("n").null().end_object();
  CHECK(w.str() == R"({"a":1,"b":true,"s":"q\"\n","xs":[1.5,-2],"n":null})");
}

TEST_CASE("doubles round-trip and non-finite values are null") {
  const double v = 0.1 + 0.2;
  CHECK(std::stod(format_double(v)) == v);
  JsonWriter w;
  w.begin_array().value(std::numeric_limits<double>::infinity()).value(std::nan("")).end_array();
  CHECK(w.str() == "[null,null]");
}
