#pragma once

#include <iosfwd>

namespace umbra::selftest
{

// Runs the invariant checks of every module with fixed seeds, printing one
// line per check. True when all of them hold.
bool run(std::ostream &out);

} // namespace umbra::selftest
