#include "fixtures.hpp"

#include <fstream>
#include <sstream>

#include "predraw/errors.hpp"

namespace predraw::testfix {

std::string fixture_path(const std::string& name) {
  return std::string(PREDRAW_FIXTURE_DIR) + "/" + name;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw Error("missing fixture: " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

GeometryDocument load_document(const std::string& name) {
  return parse_geometry_document(read_fixture(name));
}

IncidenceGeometry load_geometry(const std::string& name) {
  return parse_geometry(read_fixture(name));
}

NormalAssignment load_normals(const std::string& name,
                              const IncidenceGeometry& g) {
  return parse_normals_document(read_fixture(name), g);
}

IncidenceGeometry g1() { return load_geometry("g1.json"); }
IncidenceGeometry dg4() { return load_geometry("dg4.json"); }
IncidenceGeometry nf7() { return load_geometry("nf7.json"); }
IncidenceGeometry pappus_sub() { return load_geometry("pappus_sub.json"); }
IncidenceGeometry pappus_full() { return load_geometry("pappus.json"); }
IncidenceGeometry fano() { return load_geometry("fano.json"); }
IncidenceGeometry triangle() { return load_geometry("triangle.json"); }

PointConfiguration medial_coords() {
  return *load_document("nf7_medial.json").coordinates;
}

NormalAssignment medial_normals() {
  return load_normals("medial.json", nf7());
}

NormalAssignment nf7_generic_normals() {
  return load_normals("nf7_generic.json", nf7());
}

PointConfiguration pappus_exact_coords() {
  return *load_document("pappus_exact.json").coordinates;
}

NormalAssignment pappus_feasible_normals() {
  return load_normals("pappus_feasible.json", pappus_full());
}

PointConfiguration pappus_sub_degenerate_coords() {
  PointConfiguration pc;
  auto set = [&pc](const std::string& p, const std::string& x,
                   const std::string& y) {
    pc.coords[p] = {parse_rational(x), parse_rational(y)};
  };
  set("p0", "2", "0");
  set("p1", "2", "0");
  set("p2", "4", "0");
  set("p3", "2", "-5/2");
  set("p4", "2", "-5/2");
  set("p5", "4", "-3");
  set("p6", "2", "-5/4");
  set("p7", "32/11", "-15/11");
  set("p8", "32/11", "-15/11");
  return pc;
}

const char* kGoldenBracketNf7 =
    "[h1 h5][h2 h4][h0 h3]([h2 h3][h0 h5][h1 h4] - [h2 h5][h0 h4][h1 h3])";

const char* kGoldenBracketPappusSub =
    "[h1 h3][h2 h5][h4 h6]([h1 h7][h0 h6]([h0 h3][h2 h4][h5 h7] + "
    "[h0 h4][h2 h7][h3 h5]) - [h1 h6][h0 h5][h0 h4][h2 h7][h3 h7])";

const char* kGoldenBracketPappusSubAsPrinted =
    "[h1 h3][h2 h5][h4 h6]([h1 h7][h0 h6]([h0 h3][h2 h4][h5 h7] + "
    "[h0 h4][h2 h7][h3 h5]) + [h1 h6][h0 h5][h0 h4][h2 h7][h3 h7])";

}  // namespace predraw::testfix
