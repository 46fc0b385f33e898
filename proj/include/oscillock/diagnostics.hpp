#pragma once

#include <functional>
#include <string>

namespace oscillock::diagnostics {

using Sink = std::function<void(const std::string&)>;

// Writes a warning through the installed sink (stderr by default).
// Thread-safe.
void warn(const std::string& message);

// Replaces the sink and returns the previous one. Passing an empty
// function restores the stderr sink.
Sink set_sink(Sink sink);

}  // namespace oscillock::diagnostics
