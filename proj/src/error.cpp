#include "koszul_lift/error.hpp"

namespace koszul_lift {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::parse: return "PARSE_ERROR";
    case Errc::invalid_input: return "INVALID_INPUT";
    case Errc::level_too_low: return "LEVEL_TOO_LOW";
    case Errc::wrong_codim: return "WRONG_CODIM";
    case Errc::degree_bound_too_low: return "DEGREE_BOUND_TOO_LOW";
    case Errc::precondition: return "PRECONDITION";
  }
  return "UNKNOWN";
}

}  // namespace koszul_lift
