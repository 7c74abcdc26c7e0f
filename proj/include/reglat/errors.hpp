#pragma once

#include <stdexcept>
#include <string>

namespace reglat {

// Error taxonomy shared by the library and the CLI exit-code contract:
// input/validation problems, explicit resource caps, and internal
// consistency failures (the latter always indicate a bug or a falsified
// structural claim).
enum class Errc {
  bad_spec,
  parse_error,
  not_transitive,
  env_mismatch,
  bad_index,
  not_orthogonal,
  not_in_f,
  not_antisymmetric,
  not_bipartite,
  not_d_upper,
  cap_exceeded,
  construction_mismatch,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace reglat
