#pragma once

#include <stdexcept>
#include <string>

namespace frieze {

// Every failure mode the library can signal.  CLI maps these to exit codes:
// input/usage problems -> 2, internal invariant violations -> 3.
enum class Errc {
  DegenerateDiagonal,    // endpoints equal or adjacent mod N
  DuplicateDiagonal,     // dissection lists the same diagonal twice
  CrossingDiagonals,     // dissection contains a crossing pair
  MalformedDissection,   // text does not parse as `a-b,c-d,...`
  UnsupportedField,      // q outside {2,3,4,5,7,8,9}
  InsufficientSamples,   // interpolation degree needs more fields than exist
  NotCrossing,           // extension check on a non-crossing pair
  MalformedFixture,      // fixture file fails schema or diamond validation
  FriezeViolation,       // internal invariant broke; always a bug
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool ok, Errc code, const std::string& what) {
  if (!ok) fail(code, what);
}

}  // namespace frieze
