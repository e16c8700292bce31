#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ketsim/types.hpp"

namespace ketsim {

// Shortest decimal form that round-trips to the same double ("1", "-0.5",
// "0.7071067811865476"). All user-visible numbers go through this so output
// is byte-stable and diffable.
std::string format_double(double value);

// "a+bi" / "a-bi", both parts always present: 1+0i, 0-0.5i.
std::string format_complex(cdouble value);

// Parses one complex literal: "1", "-0.5", "2i", "-i", "1+2i", "1e-3-2.5e2i".
// No interior whitespace. Returns nullopt on malformed input.
std::optional<cdouble> parse_complex_literal(std::string_view text);

}  // namespace ketsim
