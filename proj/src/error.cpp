#include "nsk/error.hpp"

namespace nsk {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::InvalidGluing: return "invalid-gluing";
    case ErrorKind::UngluedFace: return "unglued-face";
    case ErrorKind::NonManifold: return "non-manifold";
    case ErrorKind::NonOrientable: return "non-orientable";
    case ErrorKind::Coordinates: return "coordinates";
    case ErrorKind::Incompatible: return "incompatible";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Envelope: return "envelope";
    case ErrorKind::Io: return "io";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

}  // namespace nsk
