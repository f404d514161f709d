#include "rps/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rps {

IoError::IoError(IoErrc code, int line, const std::string& what)
    : CodedError(code, std::string(to_string(code)) + (line > 0 ? " at line " + std::to_string(line) : "") + ": " +
                           what),
      line_(line) {}

const char* to_string(IoErrc c) {
  switch (c) {
    case IoErrc::ParseError: return "ParseError";
    case IoErrc::IndexOutOfRange: return "IndexOutOfRange";
    case IoErrc::UnsupportedOffFeature: return "UnsupportedOffFeature";
  }
  return "?";
}

std::string format_double(double x) {
  if (x == 0.0) return "0";  // also folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

// Non-empty lines with comments stripped.
class Lines {
 public:
  explicit Lines(const std::string& text, char comment = '#') {
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
      ++n;
      if (auto p = raw.find(comment); p != std::string::npos) raw.erase(p);
      std::istringstream ls(raw);
      Line l{n, {}};
      for (std::string t; ls >> t;) l.tokens.push_back(t);
      if (!l.tokens.empty()) lines_.push_back(std::move(l));
    }
    last_ = n;
  }

  const Line& next(const char* what) {
    if (pos_ >= lines_.size()) throw IoError(IoErrc::ParseError, last_, std::string("unexpected end of input, expected ") + what);
    return lines_[pos_++];
  }
  bool done() const { return pos_ >= lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  int last_ = 0;
};

double to_double(const std::string& t, int line) {
  double x = 0;
  const char* b = t.data() + (t.starts_with('+') ? 1 : 0);
  auto [p, ec] = std::from_chars(b, t.data() + t.size(), x);
  if (ec != std::errc() || p != t.data() + t.size() || !std::isfinite(x))
    throw IoError(IoErrc::ParseError, line, "not a number: '" + t + "'");
  return x;
}

long long to_int(const std::string& t, int line) {
  long long x = 0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || p != t.data() + t.size())
    throw IoError(IoErrc::ParseError, line, "not an integer: '" + t + "'");
  return x;
}

int count(const Line& l, const char* keyword) {
  if (l.tokens.size() != 2 || l.tokens[0] != keyword)
    throw IoError(IoErrc::ParseError, l.number, std::string("expected '") + keyword + " <count>'");
  long long n = to_int(l.tokens[1], l.number);
  if (n < 0 || n > 100000000) throw IoError(IoErrc::ParseError, l.number, "bad count");
  return static_cast<int>(n);
}

Vec3 point(const Line& l, std::size_t first = 0) {
  if (l.tokens.size() < first + 3) throw IoError(IoErrc::ParseError, l.number, "expected three coordinates");
  return {to_double(l.tokens[first], l.number), to_double(l.tokens[first + 1], l.number),
          to_double(l.tokens[first + 2], l.number)};
}

// "k i0 .. ik-1", extra tokens allowed only when `trailing`.
std::vector<VertexId> face(const Line& l, int num_vertices, bool trailing) {
  long long k = to_int(l.tokens[0], l.number);
  if (k < 3) throw IoError(IoErrc::ParseError, l.number, "a face needs at least 3 vertices");
  const std::size_t need = static_cast<std::size_t>(k) + 1;
  if (l.tokens.size() < need || (!trailing && l.tokens.size() != need))
    throw IoError(IoErrc::ParseError, l.number,
                  "face declares " + std::to_string(k) + " vertices but lists " + std::to_string(l.tokens.size() - 1));
  std::vector<VertexId> f;
  for (std::size_t i = 1; i < need; ++i) {
    long long v = to_int(l.tokens[i], l.number);
    if (v < 0 || v >= num_vertices)
      throw IoError(IoErrc::IndexOutOfRange, l.number,
                    "vertex " + std::to_string(v) + " of " + std::to_string(num_vertices));
    f.push_back(static_cast<VertexId>(v));
  }
  return f;
}

RealizedSurface assemble(Realization coords, const std::vector<std::vector<VertexId>>& faces) {
  RealizedSurface rs;
  rs.graph = SurfaceGraph::build(static_cast<int>(coords.size()), faces);
  rs.coords = std::move(coords);
  return rs;
}

void write_point(std::ostringstream& out, const Vec3& p) {
  out << format_double(p.x()) << ' ' << format_double(p.y()) << ' ' << format_double(p.z());
}

}  // namespace

RealizedSurface parse_rps(const std::string& text) {
  Lines in(text);
  const Line& h = in.next("header");
  if (h.tokens.size() != 2 || h.tokens[0] != "RPS" || h.tokens[1] != "1")
    throw IoError(IoErrc::ParseError, h.number, "expected header 'RPS 1'");
  const int nv = count(in.next("vertex count"), "vertices");
  Realization coords;
  for (int i = 0; i < nv; ++i) {
    const Line& l = in.next("vertex");
    if (l.tokens.size() != 3) throw IoError(IoErrc::ParseError, l.number, "expected three coordinates");
    coords.push_back(point(l));
  }
  const int nf = count(in.next("face count"), "faces");
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < nf; ++i) faces.push_back(face(in.next("face"), nv, false));
  if (!in.done()) throw IoError(IoErrc::ParseError, in.peek().number, "trailing content");
  return assemble(std::move(coords), faces);
}

std::string serialize_rps(const RealizedSurface& rs) {
  std::ostringstream out;
  out << "RPS 1\nvertices " << rs.coords.size() << '\n';
  for (const Vec3& p : rs.coords) {
    write_point(out, p);
    out << '\n';
  }
  out << "faces " << rs.graph.num_faces() << '\n';
  for (FaceId f = 0; f < rs.graph.num_faces(); ++f) {
    out << rs.graph.degree(f);
    for (VertexId v : rs.graph.face_vertices(f)) out << ' ' << v;
    out << '\n';
  }
  return out.str();
}

RealizedSurface import_off(const std::string& text) {
  Lines in(text);
  const Line& h = in.next("OFF header");
  std::string key = h.tokens[0];
  // Header prefixes: ST texture, C colour, N normal (all trailing payload),
  // 4 and n change the dimension.
  std::string rest = key;
  if (rest.size() < 3 || rest.substr(rest.size() - 3) != "OFF")
    throw IoError(IoErrc::ParseError, h.number, "expected an OFF header");
  rest.erase(rest.size() - 3);
  for (const char* p : {"ST", "C", "N"})
    if (rest.starts_with(p)) rest.erase(0, std::string(p).size());
  if (!rest.empty() && (rest.find('4') != std::string::npos || rest.find('n') != std::string::npos))
    throw IoError(IoErrc::UnsupportedOffFeature, h.number, "'" + key + "' (only 3-dimensional OFF is supported)");
  if (!rest.empty()) throw IoError(IoErrc::ParseError, h.number, "unknown OFF header '" + key + "'");

  std::vector<std::string> counts(h.tokens.begin() + 1, h.tokens.end());
  int counts_line = h.number;
  if (!counts.empty() && counts[0] == "BINARY")
    throw IoError(IoErrc::UnsupportedOffFeature, h.number, "binary OFF");
  if (counts.empty()) {
    const Line& c = in.next("OFF counts");
    counts = c.tokens;
    counts_line = c.number;
  }
  if (counts.size() < 2) throw IoError(IoErrc::ParseError, counts_line, "expected vertex and face counts");
  const long long nv = to_int(counts[0], counts_line);
  const long long nf = to_int(counts[1], counts_line);
  if (nv < 0 || nf < 0) throw IoError(IoErrc::ParseError, counts_line, "negative count");

  Realization coords;
  for (long long i = 0; i < nv; ++i) coords.push_back(point(in.next("vertex")));
  std::vector<std::vector<VertexId>> faces;
  for (long long i = 0; i < nf; ++i) faces.push_back(face(in.next("face"), static_cast<int>(nv), true));
  return assemble(std::move(coords), faces);
}

std::string export_obj(const RealizedSurface& rs) {
  std::ostringstream out;
  for (const Vec3& p : rs.coords) {
    out << "v ";
    write_point(out, p);
    out << '\n';
  }
  for (FaceId f = 0; f < rs.graph.num_faces(); ++f) {
    out << 'f';
    for (VertexId v : rs.graph.face_vertices(f)) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

std::string serialize_certificate(const Certificate& cert) {
  std::ostringstream out;
  out << "RPSCERT 1\n";
  for (std::size_t i = 0; i < cert.provenance.size(); ++i) {
    const SurgeryRecord& r = cert.provenance[i];
    out << "# step " << i << ' ' << to_string(r.kind) << (r.rule.empty() ? "" : " " + r.rule) << " faces "
        << r.faces_before << " -> " << r.faces_after << '\n';
  }
  out << "bricks " << cert.bricks.size() << '\n';
  for (const Brick& b : cert.bricks) {
    out << to_string(b.kind);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out << ' ' << format_double(b.placement.rotation(i, j));
    for (int i = 0; i < 3; ++i) out << ' ' << format_double(b.placement.translation(i));
    out << '\n';
  }
  out << "gluings " << cert.gluings.size() << '\n';
  for (const auto& g : cert.gluings) out << g[0] << ' ' << g[1] << ' ' << g[2] << ' ' << g[3] << '\n';
  return out.str();
}

Certificate parse_certificate(const std::string& text, double eps) {
  Lines in(text);
  const Line& h = in.next("header");
  if (h.tokens.size() != 2 || h.tokens[0] != "RPSCERT" || h.tokens[1] != "1")
    throw IoError(IoErrc::ParseError, h.number, "expected header 'RPSCERT 1'");
  Certificate cert;
  const int nb = count(in.next("brick count"), "bricks");
  for (int i = 0; i < nb; ++i) {
    const Line& l = in.next("brick");
    if (l.tokens.size() != 13) throw IoError(IoErrc::ParseError, l.number, "expected a kind and 12 numbers");
    auto kind = solid_kind_from_string(l.tokens[0]);
    if (!kind) throw IoError(IoErrc::ParseError, l.number, "unknown solid '" + l.tokens[0] + "'");
    Brick b;
    b.kind = *kind;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) b.placement.rotation(r, c) = to_double(l.tokens[1 + 3 * r + c], l.number);
    b.placement.translation = point(l, 10);
    if (!b.placement.is_orthogonal(eps)) throw IoError(IoErrc::ParseError, l.number, "rotation is not orthogonal");
    cert.bricks.push_back(b);
  }
  const int ng = count(in.next("gluing count"), "gluings");
  for (int i = 0; i < ng; ++i) {
    const Line& l = in.next("gluing");
    if (l.tokens.size() != 4) throw IoError(IoErrc::ParseError, l.number, "expected 'brick facet brick facet'");
    std::array<int, 4> g{};
    for (int k = 0; k < 4; ++k) {
      long long x = to_int(l.tokens[k], l.number);
      bool brick = k % 2 == 0;
      long long limit = brick ? nb : (x >= 0 && g[k - 1] >= 0 && g[k - 1] < nb
                                           ? static_cast<long long>(canonical_solid(cert.bricks[g[k - 1]].kind).faces.size())
                                           : 0);
      if (x < 0 || x >= limit)
        throw IoError(IoErrc::IndexOutOfRange, l.number,
                      std::string(brick ? "brick " : "facet ") + std::to_string(x) + " of " + std::to_string(limit));
      g[k] = static_cast<int>(x);
    }
    cert.gluings.push_back(g);
  }
  if (!in.done()) throw IoError(IoErrc::ParseError, in.peek().number, "trailing content");
  return cert;
}

}  // namespace rps
