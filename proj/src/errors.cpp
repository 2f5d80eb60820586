#include "frieze/errors.hpp"

namespace frieze {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DegenerateDiagonal: return "DegenerateDiagonal";
    case Errc::DuplicateDiagonal: return "DuplicateDiagonal";
    case Errc::CrossingDiagonals: return "CrossingDiagonals";
    case Errc::MalformedDissection: return "MalformedDissection";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::NotCrossing: return "NotCrossing";
    case Errc::MalformedFixture: return "MalformedFixture";
    case Errc::FriezeViolation: return "FriezeViolation";
  }
  return "UnknownError";
}

}  // namespace frieze
