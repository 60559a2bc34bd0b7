#pragma once

#include <functional>
#include <string>

namespace frhopf {

/// Runs the built-in property suites (rotation identities, minor closed
/// forms, resultant equivalence, oracle agreement, critical-radius
/// recovery, simulator exactness) with fixed seeds. Emits one line per
/// suite through `log` and returns the number of failed suites.
int selftest(const std::function<void(const std::string&)>& log);

} // namespace frhopf
