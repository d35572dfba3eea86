#pragma once

#include <stdexcept>
#include <string>

namespace ltop {

enum class errc {
  invalid_argument = 1,  // bad parameter, malformed id, nonpositive length
  parse = 2,             // malformed JSON / genspec
  not_found = 3,         // unknown vertex, edge, or generator
  precondition = 4,      // operation precondition violated
  internal = 5,
};

// Library-wide exception. The C API boundary maps `code` to an error code
// and exposes `what()` through ltop_last_error().
class error : public std::runtime_error {
public:
  error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace ltop
