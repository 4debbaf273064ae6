#pragma once

#include <stdexcept>
#include <string>

namespace pss {

enum class Err {
  length_mismatch,
  vocabulary_mismatch,
  vocabulary_too_large,
  term_explosion,
  empty_positives,
  inconsistent,
  no_ethical_response,
  index_out_of_range,
  empty_experiences,
  duplicate_token,
  unknown_token,
  no_appropriate_sign,
  empty_corpus,
  parse_error,
  header_mismatch,
  duplicate_state,
  io_error,
  invalid_vocabulary,
  invariant_violation,
  unknown_scenario,
};

const char* err_name(Err code);

// Process exit class: 2 = parse/validation, 3 = no-solution outcomes,
// 4 = resource caps exceeded.
int exit_class(Err code);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& message)
      : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

  Err code() const { return code_; }

private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pss
