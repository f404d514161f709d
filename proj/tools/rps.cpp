// Command-line front end. Results go to stdout, diagnostics to stderr.
// Exit codes: 0 pass, 1 validation/verification failure, 2 decomposition
// failure, 3 parse or usage error.

#include "rps/bands.hpp"
#include "rps/curvature.hpp"
#include "rps/decompose.hpp"
#include "rps/generators.hpp"
#include "rps/io.hpp"
#include "rps/solids.hpp"
#include "rps/validate.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace rps;

namespace {

enum Exit { kPass = 0, kFail = 1, kDecomposeFail = 2, kUsage = 3 };

// Parse and usage problems, reported with exit code 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path.empty() || path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw UsageError("cannot write " + path);
}

// RPS or OFF, told apart by the first token.
RealizedSurface load(const std::string& path) {
  std::string text = read_input(path);
  std::istringstream in(text);
  std::string first;
  for (std::string line; std::getline(in, line);) {
    if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
    std::istringstream ls(line);
    if (ls >> first) break;
  }
  if (first.size() >= 3 && first.ends_with("OFF")) return import_off(text);
  return parse_rps(text);
}

std::string pi_fraction(const AnglePi& a) {
  std::string s = std::to_string(a.num());
  if (a.den() != 1) s += "/" + std::to_string(a.den());
  return s + " π";
}

std::string curvature_text(const AnglePi& a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", a.to_double());
  return pi_fraction(a) + " " + buf;
}

std::string genus_text(const SurfaceGraph& s) {
  try {
    return std::to_string(s.genus());
  } catch (const Error&) {
    return "n/a";
  }
}

void print_violations(const ValidationReport& rep) {
  for (const Violation& v : rep.violations) {
    std::cout << v.kind;
    if (!v.faces.empty()) {
      std::cout << " faces";
      for (FaceId f : v.faces) std::cout << ' ' << f;
    }
    if (!v.vertices.empty()) {
      std::cout << " vertices";
      for (VertexId x : v.vertices) std::cout << ' ' << x;
    }
    if (!v.detail.empty()) std::cout << " : " << v.detail;
    std::cout << '\n';
  }
}

int cmd_validate(const std::string& file, bool embedded, double eps) {
  RealizedSurface rs = load(file);
  ValidationReport all = validate_proper(rs.graph);
  for (auto& v : validate_realization(rs, eps).violations) all.violations.push_back(std::move(v));
  ValidationReport col = find_collisions(rs, {}, eps);
  if (embedded)
    for (auto& v : col.violations) all.violations.push_back(v);
  print_violations(all);
  if (!embedded && !col.ok()) std::cerr << "note: " << col.violations.size() << " non-adjacent face pairs intersect\n";
  std::cout << (all.ok() ? "valid" : "invalid") << '\n';
  return all.ok() ? kPass : kFail;
}

int cmd_info(const std::string& file) {
  RealizedSurface rs = load(file);
  const SurfaceGraph& s = rs.graph;
  std::cout << "vertices " << s.num_vertices() << "\nedges " << s.num_edges() << "\nfaces " << s.num_faces()
            << "\neuler " << s.euler_characteristic() << "\ngenus " << genus_text(s) << '\n';
  std::map<int, int> hist;
  for (FaceId f = 0; f < s.num_faces(); ++f) ++hist[s.degree(f)];
  std::cout << "degrees";
  for (auto [d, c] : hist) std::cout << ' ' << d << ':' << c;
  std::cout << '\n';
  GaussBonnet gb = gauss_bonnet_check(s);
  std::cout << "total-curvature " << pi_fraction(gb.total) << "\ngauss-bonnet " << (gb.equal ? "pass" : "fail")
            << '\n';
  return gb.equal ? kPass : kFail;
}

int cmd_curvature(const std::string& file, bool per_face, bool per_vertex) {
  RealizedSurface rs = load(file);
  const SurfaceGraph& s = rs.graph;
  if (!per_face && !per_vertex) per_face = true;
  AnglePi total;
  if (per_vertex)
    for (VertexId v = 0; v < s.num_vertices(); ++v) {
      AnglePi k = vertex_curvature(s, v);
      std::cout << "vertex " << v << ' ' << vertex_type(s, v).to_string() << ' ' << curvature_text(k) << '\n';
    }
  if (per_face)
    for (FaceId f = 0; f < s.num_faces(); ++f)
      std::cout << "face " << f << " degree " << s.degree(f) << ' ' << curvature_text(facial_curvature(s, f)) << '\n';
  std::cout << "total " << curvature_text(gauss_bonnet_check(s).total) << '\n';
  return kPass;
}

int cmd_bands(const std::string& file, bool bigons, double eps) {
  RealizedSurface rs = load(file);
  auto bands = all_bands(rs, eps);
  for (std::size_t i = 0; i < bands.size(); ++i) {
    std::cout << "band " << i << " length " << bands[i].length() << " faces";
    for (FaceId f : bands[i].faces()) std::cout << ' ' << f;
    std::cout << '\n';
  }
  std::cout << "bands " << bands.size() << '\n';
  if (bigons) {
    auto all = enumerate_bigons(rs, bands, eps);
    for (const Bigon& b : all) {
      std::cout << "bigon " << to_string(b.kind) << " bands " << b.band_a << ' ' << b.band_b << " turning " << b.t1
                << ' ' << b.t2 << " interior " << b.interior().size() << '\n';
    }
    std::cout << "bigons " << all.size() << '\n';
    if (!all.empty()) {
      Bigon m = find_minimal_bigon(all);
      std::cout << "minimal " << to_string(m.kind) << " turning " << m.t1 << ' ' << m.t2 << '\n';
    }
  }
  return kPass;
}

int cmd_audit(const std::string& file) {
  RealizedSurface rs = load(file);
  AuditReport rep = curvature_audit_5n(rs.graph);
  for (const FaceAudit& f : rep.faces) {
    std::cout << "face " << f.face << " degree " << f.degree << ' ' << curvature_text(f.curvature) << " types";
    for (const auto& t : f.vertex_types) std::cout << ' ' << t;
    std::cout << '\n';
  }
  for (const RegionalSum& r : rep.regions)
    std::cout << "region " << r.face << " n " << r.n << " sum " << pi_fraction(r.sum) << " bound " << pi_fraction(r.bound)
              << '\n';
  for (const AuditViolation& v : rep.violations) {
    std::cout << "violation " << v.kind;
    for (FaceId f : v.faces) std::cout << " f" << f;
    for (VertexId x : v.vertices) std::cout << " v" << x;
    std::cout << " : " << v.detail << '\n';
  }
  std::cout << "total " << curvature_text(rep.total) << "\ngenus " << rep.genus << "\npositive " << rep.positive_faces
            << " zero " << rep.zero_faces << " negative " << rep.negative_faces << '\n';
  if (rep.genus == 0) std::cout << "genus0 " << (rep.genus0_infeasible ? "infeasible" : "not excluded") << '\n';
  return rep.violations.empty() ? kPass : kFail;
}

int cmd_decompose(const std::string& file, std::string family, const std::string& out, double eps) {
  RealizedSurface rs = load(file);
  const SurfaceGraph& s = rs.graph;
  if (family == "auto") {
    std::set<int> degs;
    for (FaceId f = 0; f < s.num_faces(); ++f) degs.insert(s.degree(f));
    if (degs == std::set<int>{5})
      family = "pent";
    else if (std::includes(std::set<int>{4, 8}.begin(), std::set<int>{4, 8}.end(), degs.begin(), degs.end()))
      family = "square-oct";
    else {
      std::cerr << "decompose: face degrees fit neither family\n";
      return kDecomposeFail;
    }
  }
  DecomposeOptions opt;
  opt.eps = eps;
  try {
    Certificate cert = family == "pent" ? decompose_pent(rs, opt) : decompose_square_oct(rs, opt);
    write_output(out, serialize_certificate(cert));
    std::map<std::string, int> kinds;
    for (const Brick& b : cert.bricks) ++kinds[to_string(b.kind)];
    std::ostream& summary = out.empty() || out == "-" ? std::cerr : std::cout;
    summary << "bricks " << cert.bricks.size();
    for (auto& [k, c] : kinds) summary << ' ' << k << ':' << c;
    summary << '\n';
  } catch (const DecomposeError& e) {
    std::cerr << "decompose: " << e.what() << '\n';
    return kDecomposeFail;
  }
  return kPass;
}

int cmd_verify(const std::string& file, const std::string& cert_file, double eps) {
  RealizedSurface rs = load(file);
  Certificate cert = parse_certificate(read_input(cert_file), eps);
  VerificationReport rep = verify_certificate(cert, rs, eps);
  if (!rep.pass) {
    std::cout << "fail " << rep.witness << '\n';
    return kFail;
  }
  std::cout << "pass bricks " << cert.bricks.size() << " gluings " << rep.gluings.size() << '\n';
  return kPass;
}

int cmd_gen(const std::string& name, int n, int prisms, std::uint64_t seed, const std::string& pairing,
            const std::string& out) {
  RealizedSurface rs;
  if (auto k = solid_kind_from_string(name)) {
    rs = make_solid(*k);
  } else if (name == "torus" || name == "dodecahedral-torus") {
    rs = dodecahedral_torus(n > 0 ? n : 8);
  } else if (name == "great-dodecahedron") {
    rs = great_dodecahedron();
  } else if (auto c = counterexample_kind_from_string(name)) {
    std::optional<PairingScheme> p;
    if (!pairing.empty()) p = parse_pairing(read_input(pairing));
    rs = counterexample(*c, p);
  } else if (name == "pent-compound") {
    rs = random_pent_compound(n > 0 ? n : 4, seed).surface;
  } else if (name == "square-oct-compound") {
    rs = random_square_oct_compound(n >= 0 ? n : 4, prisms, seed).surface;
  } else {
    throw UsageError("unknown generator '" + name + "'");
  }
  write_output(out, serialize_rps(rs));
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regular polygon surfaces: validation, curvature, bands, surgery-based decomposition"};
  app.require_subcommand(1);
  double eps = kEpsCoord;
  app.add_option("--eps", eps, "coordinate tolerance")->check(CLI::PositiveNumber);

  std::string file, out, cert_file, family = "auto", pairing, name;
  bool per_face = false, per_vertex = false, embedded = false, bigons = false;
  int n = -1, prisms = 0;
  std::uint64_t seed = 1;

  auto input = [&](CLI::App* sub) { sub->add_option("file", file, "RPS or OFF file, '-' for stdin"); };

  auto* validate = app.add_subcommand("validate", "check properness and the realization");
  input(validate);
  validate->add_flag("--embedded", embedded, "also reject intersecting non-adjacent faces");
  auto* info = app.add_subcommand("info", "counts, genus, degree histogram, Gauss-Bonnet");
  input(info);
  auto* curv = app.add_subcommand("curvature", "exact curvature");
  input(curv);
  curv->add_flag("--per-face", per_face);
  curv->add_flag("--per-vertex", per_vertex);
  auto* bands = app.add_subcommand("bands", "bands of a (4,8) surface");
  input(bands);
  bands->add_flag("--bigons", bigons, "also enumerate bigons");
  auto* audit = app.add_subcommand("audit", "curvature audit of a (5,n) surface");
  input(audit);
  auto* dec = app.add_subcommand("decompose", "decompose into bricks");
  input(dec);
  dec->add_option("--family", family)->check(CLI::IsMember({"pent", "square-oct", "auto"}));
  dec->add_option("-o,--output", out, "certificate file (stdout by default)");
  auto* ver = app.add_subcommand("verify", "check a certificate against a surface");
  input(ver);
  ver->add_option("--cert", cert_file)->required();
  auto* gen = app.add_subcommand("gen", "generate a surface");
  gen->add_option("name", name,
                  "solid name, torus, great-dodecahedron, to4, tco4, tco3, pent-compound, square-oct-compound")
      ->required();
  gen->add_option("--n", n, "ring length, dodecahedra, or cubes");
  gen->add_option("--prisms", prisms, "octagonal prisms (square-oct-compound)");
  gen->add_option("--seed", seed);
  gen->add_option("--pairing", pairing, "tube pairing file (to4, tco4, tco3)");
  gen->add_option("-o,--output", out);
  auto* obj = app.add_subcommand("export-obj", "write OBJ");
  input(obj);
  obj->add_option("-o,--output", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, embedded, eps);
    if (*info) return cmd_info(file);
    if (*curv) return cmd_curvature(file, per_face, per_vertex);
    if (*bands) return cmd_bands(file, bigons, eps);
    if (*audit) return cmd_audit(file);
    if (*dec) return cmd_decompose(file, family, out, eps);
    if (*ver) return cmd_verify(file, cert_file, eps);
    if (*gen) return cmd_gen(name, n, prisms, seed, pairing, out);
    if (*obj) {
      write_output(out, export_obj(load(file)));
      return kPass;
    }
  } catch (const IoError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const DecomposeError& e) {
    std::cerr << e.what() << '\n';
    return kDecomposeFail;
  } catch (const BuildError& e) {
    std::cerr << "not a closed surface: " << e.what() << '\n';
    return kFail;
  } catch (const GeneratorError& e) {
    std::cerr << e.what() << '\n';
    return e.code() == GenErrc::InvalidPairing ? kUsage : kFail;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
