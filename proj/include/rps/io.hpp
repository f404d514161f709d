#pragma once

#include "rps/decompose.hpp"
#include "rps/realization.hpp"

#include <string>

namespace rps {

enum class IoErrc {
  ParseError,
  IndexOutOfRange,
  UnsupportedOffFeature,
};

class IoError : public CodedError<IoErrc> {
 public:
  IoError(IoErrc code, int line, const std::string& what);
  int line() const noexcept { return line_; }  // 1-based, 0 when not tied to a line

 private:
  int line_;
};

const char* to_string(IoErrc c);

// 17 significant digits, which reads back to the same double.
std::string format_double(double x);

// "RPS 1", "vertices N", N coordinate lines, "faces M", M lines "k i0 .. ik-1".
// Blank lines and text after '#' are ignored. The surface is built but not
// validated; topology errors surface as BuildError.
RealizedSurface parse_rps(const std::string& text);
std::string serialize_rps(const RealizedSurface& rs);

// ASCII OFF, optionally with C/N/ST prefixes; per-vertex and per-face
// payloads past the geometry are ignored.
RealizedSurface import_off(const std::string& text);

std::string export_obj(const RealizedSurface& rs);

// "RPSCERT 1", "bricks N", N lines "kind r00 r01 .. r22 t0 t1 t2",
// "gluings M", M lines "a fa b fb". Provenance is written as comments and not
// read back. Placements must be orthogonal within eps.
std::string serialize_certificate(const Certificate& cert);
Certificate parse_certificate(const std::string& text, double eps = kEpsCoord);

}  // namespace rps
