#pragma once

#include <cstdint>
#include <stdexcept>
#include <sstream>
#include <string>

namespace pmlat {

// Malformed or contract-violating input data. Maps to exit code 2.
struct bad_input : std::runtime_error {
  explicit bad_input(const std::string& what) : std::runtime_error(what) {}
};

// Element-count budget exhausted during a construction. Maps to exit code 3.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// A proved lemma failed on concrete data: that is a bug in this library,
// never a property of the input.
struct internal_check_error : std::logic_error {
  explicit internal_check_error(const std::string& what) : std::logic_error(what) {}
};

template <typename... Ts>
std::string cat(const Ts&... parts) {
  std::ostringstream os;
  (os << ... << parts);
  return os.str();
}

inline void internal_check(bool ok, const std::string& what) {
  if (!ok) throw internal_check_error(what);
}

}  // namespace pmlat
