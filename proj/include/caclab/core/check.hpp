#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace caclab {

[[noreturn]] inline void fail(const std::string& message) {
  throw std::runtime_error(message);
}

[[noreturn]] inline void fail_arg(const std::string& message) {
  throw std::invalid_argument(message);
}

}  // namespace caclab

// Contract checks. CACLAB_CHECK_ARG is for caller-supplied input (maps to
// std::invalid_argument), CACLAB_CHECK for internal invariants.
#define CACLAB_CHECK(cond, msg)                                      \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::ostringstream oss_;                                       \
      oss_ << "check failed (" #cond "): " << msg;                   \
      ::caclab::fail(oss_.str());                                    \
    }                                                                \
  } while (0)

#define CACLAB_CHECK_ARG(cond, msg)                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      std::ostringstream oss_;                                       \
      oss_ << msg;                                                   \
      ::caclab::fail_arg(oss_.str());                                \
    }                                                                \
  } while (0)
