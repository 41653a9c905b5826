#pragma once

#include <stdexcept>
#include <string>

namespace koszul_lift {

enum class Errc {
  parse,                  // malformed text or JSON input
  invalid_input,          // input violates a structural precondition
  level_too_low,          // homotopy family not solved far enough
  wrong_codim,            // codimension-one routine called with c != 1
  degree_bound_too_low,   // resolution generators reached the degree bound
  precondition,           // caller broke an operation contract
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace koszul_lift
