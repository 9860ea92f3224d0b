#pragma once

#include <optional>
#include <string>

#include "zetascope/types.hpp"

namespace zetascope {

/// Parses "a+bi" style complex literals: "2", "-1.5", "3i", "-i",
/// "0.5+14.134725i", "1e-3-2.5e2i". Whitespace is ignored. Returns nullopt
/// on malformed or non-finite input.
std::optional<Complex> parse_complex(const std::string& text);

}  // namespace zetascope
