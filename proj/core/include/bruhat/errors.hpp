#pragma once

#include <stdexcept>
#include <string>

namespace bruhat {

// Bad user input: unknown type strings, malformed words, out-of-range indices.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mathematically invalid request: wrong hypotheses (v > w, non-simply-laced
// where excited-diagram multiplicities are undefined, poles, ...).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Broken internal invariant. Reaching this is always a bug.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline void check_internal(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

}  // namespace bruhat
