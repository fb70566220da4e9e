#pragma once

// Library version, embedded in CLI reports so result files can be traced
// back to the code that produced them.

namespace fhankel {

inline constexpr const char* version_string = "1.0.0";

}  // namespace fhankel
