#pragma once

#include <string>
#include <string_view>

#include "ukp/instance.hpp"

namespace ukp {

/// Parse result: the normalized instance (capacity 1) plus what the
/// normalization had to drop.
struct LoadedInstance {
  Instance instance;
  std::size_t dropped_oversized = 0;
  Rational original_capacity;
};

/// Parses the flat instance format:
///   c <rational>              capacity (optional, defaults to 1)
///   item <profit> <size>      one line per item
///   # ...                     comment (also allowed after fields)
/// Rationals are "a/b", integers, or decimals (read exactly). Sizes are
/// divided by the capacity; items that then exceed 1 are dropped and
/// counted. Unknown directives and nonpositive fields are errors.
LoadedInstance parse_instance(std::string_view text);

/// Canonical rendering: "c 1/1" plus one "item p/q s/t" line per item.
/// parse_instance(render_instance(x)) reproduces x exactly.
std::string render_instance(const Instance& instance);

/// Reads a whole file; ParseError/Error on I/O failure.
LoadedInstance load_instance_file(const std::string& path);

}  // namespace ukp
