#include "predraw/geometry.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "predraw/errors.hpp"

namespace predraw {

using json = nlohmann::ordered_json;

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return ParseError("invalid rational literal: '" + text + "'");
  };
  if (text.empty()) throw bad();
  const std::size_t slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw bad();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw bad();
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
  };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(Int(text));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  Int d(den);
  if (d == 0) throw ParseError("zero denominator in rational: '" + text + "'");
  return make_rational(Int(num), d);
}

std::string format_rational(const Rational& q) { return q.get_str(); }

IncidenceGeometry::IncidenceGeometry(int d, std::vector<std::string> points,
                                     std::vector<std::string> hyperplanes,
                                     std::vector<IncidencePair> incidences)
    : d_(d),
      points_(std::move(points)),
      hyperplanes_(std::move(hyperplanes)),
      incidences_(std::move(incidences)) {
  if (d_ < 1) throw ValidationError("ambient dimension must be at least 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!point_index_.emplace(points_[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate point label: '" + points_[i] + "'");
  }
  for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
    if (!hyperplane_index_.emplace(hyperplanes_[i], static_cast<int>(i)).second)
      throw ValidationError("duplicate hyperplane label: '" + hyperplanes_[i] +
                            "'");
  }
  std::set<std::pair<int, int>> seen;
  incidence_indices_.reserve(incidences_.size());
  for (const auto& [p, h] : incidences_) {
    auto pit = point_index_.find(p);
    if (pit == point_index_.end())
      throw ValidationError("incidence references unknown point '" + p + "'");
    auto hit = hyperplane_index_.find(h);
    if (hit == hyperplane_index_.end())
      throw ValidationError("incidence references unknown hyperplane '" + h +
                            "'");
    if (!seen.insert({pit->second, hit->second}).second)
      throw ValidationError("duplicate incidence (" + p + ", " + h + ")");
    incidence_indices_.push_back({pit->second, hit->second});
  }
}

int IncidenceGeometry::point_index(const std::string& label) const {
  auto it = point_index_.find(label);
  if (it == point_index_.end())
    throw ValidationError("unknown point label '" + label + "'");
  return it->second;
}

int IncidenceGeometry::hyperplane_index(const std::string& label) const {
  auto it = hyperplane_index_.find(label);
  if (it == hyperplane_index_.end())
    throw ValidationError("unknown hyperplane label '" + label + "'");
  return it->second;
}

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON document");
  return j;
}

std::vector<Rational> parse_rational_vector(const json& value,
                                            const std::string& what, int d) {
  if (!value.is_array())
    throw ParseError(what + " must be an array of rational strings");
  if (static_cast<int>(value.size()) != d)
    throw ParseError(what + " must have exactly " + std::to_string(d) +
                     " entries");
  std::vector<Rational> out;
  out.reserve(value.size());
  for (const auto& entry : value) {
    if (!entry.is_string())
      throw ParseError(what +
                       ": rationals must be strings (no floating point)");
    out.push_back(parse_rational(entry.get<std::string>()));
  }
  return out;
}

NormalAssignment parse_normals_field(const json& value,
                                     const IncidenceGeometry& g) {
  if (!value.is_object()) throw ParseError("'normals' must be an object");
  NormalAssignment na;
  for (const auto& [label, vec] : value.items()) {
    g.hyperplane_index(label);  // throws on unknown
    na.entries[label] = parse_rational_vector(vec, "normal of " + label, g.d());
  }
  validate_normals(g, na);
  return na;
}

PointConfiguration parse_coordinates_field(const json& value,
                                           const IncidenceGeometry& g) {
  if (!value.is_object()) throw ParseError("'coordinates' must be an object");
  PointConfiguration pc;
  for (const auto& [label, vec] : value.items()) {
    g.point_index(label);
    pc.coords[label] =
        parse_rational_vector(vec, "coordinates of " + label, g.d());
  }
  validate_coordinates(g, pc);
  return pc;
}

}  // namespace

GeometryDocument parse_geometry_document(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("document root must be an object");
  static const std::set<std::string> known = {"d", "points", "hyperplanes",
                                              "incidences", "normals",
                                              "coordinates"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) throw ParseError("unknown key '" + key + "'");
  }
  for (const char* key : {"d", "points", "hyperplanes", "incidences"}) {
    if (!j.contains(key))
      throw ParseError(std::string("missing key '") + key + "'");
  }
  if (!j["d"].is_number_integer())
    throw ParseError("'d' must be an integer");
  const int d = j["d"].get<int>();

  auto parse_labels = [&](const char* key) {
    const json& arr = j[key];
    if (!arr.is_array())
      throw ParseError(std::string("'") + key + "' must be an array");
    std::vector<std::string> out;
    for (const auto& v : arr) {
      if (!v.is_string())
        throw ParseError(std::string("'") + key + "' entries must be strings");
      out.push_back(v.get<std::string>());
    }
    return out;
  };
  std::vector<std::string> points = parse_labels("points");
  std::vector<std::string> hyperplanes = parse_labels("hyperplanes");

  const json& inc = j["incidences"];
  if (!inc.is_array()) throw ParseError("'incidences' must be an array");
  std::vector<IncidencePair> incidences;
  for (const auto& pair : inc) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() ||
        !pair[1].is_string())
      throw ParseError("each incidence must be a [point, hyperplane] pair");
    incidences.push_back({pair[0].get<std::string>(),
                          pair[1].get<std::string>()});
  }

  IncidenceGeometry geometry(d, std::move(points), std::move(hyperplanes),
                             std::move(incidences));
  GeometryDocument doc{std::move(geometry), std::nullopt, std::nullopt};
  if (j.contains("normals"))
    doc.normals = parse_normals_field(j["normals"], doc.geometry);
  if (j.contains("coordinates"))
    doc.coordinates = parse_coordinates_field(j["coordinates"], doc.geometry);
  return doc;
}

IncidenceGeometry parse_geometry(const std::string& text) {
  return parse_geometry_document(text).geometry;
}

NormalAssignment parse_normals_document(const std::string& text,
                                        const IncidenceGeometry& g) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("document root must be an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "normals") throw ParseError("unknown key '" + key + "'");
  }
  if (!j.contains("normals"))
    throw ParseError("normals document is missing 'normals'");
  return parse_normals_field(j["normals"], g);
}

namespace {

json document_to_json(const GeometryDocument& doc) {
  const IncidenceGeometry& g = doc.geometry;
  json j;
  j["d"] = g.d();
  j["points"] = g.points();
  j["hyperplanes"] = g.hyperplanes();
  json inc = json::array();
  for (const auto& [p, h] : g.incidences()) inc.push_back({p, h});
  j["incidences"] = std::move(inc);
  if (doc.normals) {
    json n = json::object();
    for (const auto& h : g.hyperplanes()) {
      json vec = json::array();
      for (const auto& q : doc.normals->entries.at(h))
        vec.push_back(format_rational(q));
      n[h] = std::move(vec);
    }
    j["normals"] = std::move(n);
  }
  if (doc.coordinates) {
    json c = json::object();
    for (const auto& p : g.points()) {
      json vec = json::array();
      for (const auto& q : doc.coordinates->coords.at(p))
        vec.push_back(format_rational(q));
      c[p] = std::move(vec);
    }
    j["coordinates"] = std::move(c);
  }
  return j;
}

}  // namespace

std::string serialize_geometry(const IncidenceGeometry& g) {
  return serialize_document({g, std::nullopt, std::nullopt});
}

std::string serialize_document(const GeometryDocument& doc) {
  return document_to_json(doc).dump(2) + "\n";
}

InducedCounts induced_counts(const IncidenceGeometry& g,
                             const std::vector<IncidencePair>& subset) {
  std::set<std::pair<int, int>> all(g.incidence_indices().begin(),
                                    g.incidence_indices().end());
  std::set<std::pair<int, int>> seen;
  std::set<int> pts, hps;
  for (const auto& [p, h] : subset) {
    std::pair<int, int> idx;
    try {
      idx = {g.point_index(p), g.hyperplane_index(h)};
    } catch (const ValidationError&) {
      throw ValidationError("subset incidence (" + p + ", " + h +
                            ") is not an incidence of the geometry");
    }
    if (!all.count(idx))
      throw ValidationError("subset incidence (" + p + ", " + h +
                            ") is not an incidence of the geometry");
    if (!seen.insert(idx).second) continue;
    pts.insert(idx.first);
    hps.insert(idx.second);
  }
  return {static_cast<int>(seen.size()), static_cast<int>(pts.size()),
          static_cast<int>(hps.size())};
}

void validate_normals(const IncidenceGeometry& g, const NormalAssignment& na) {
  for (const auto& [label, vec] : na.entries) {
    g.hyperplane_index(label);
    if (static_cast<int>(vec.size()) != g.d())
      throw ValidationError("normal of '" + label + "' must have " +
                            std::to_string(g.d()) + " entries");
    bool all_zero = true;
    for (const auto& q : vec)
      if (q != 0) all_zero = false;
    if (all_zero)
      throw ValidationError("zero normal vector for hyperplane '" + label +
                            "'");
  }
  for (const auto& h : g.hyperplanes()) {
    if (!na.entries.count(h))
      throw ValidationError("missing normal for hyperplane '" + h + "'");
  }
}

void validate_coordinates(const IncidenceGeometry& g,
                          const PointConfiguration& pc) {
  for (const auto& [label, vec] : pc.coords) {
    g.point_index(label);
    if (static_cast<int>(vec.size()) != g.d())
      throw ValidationError("coordinates of '" + label + "' must have " +
                            std::to_string(g.d()) + " entries");
  }
  for (const auto& p : g.points()) {
    if (!pc.coords.count(p))
      throw ValidationError("missing coordinates for point '" + p + "'");
  }
}

RatMat normal_matrix(const IncidenceGeometry& g, const NormalAssignment& na) {
  validate_normals(g, na);
  RatMat s(g.d(), g.num_hyperplanes());
  for (int h = 0; h < g.num_hyperplanes(); ++h) {
    const auto& vec = na.entries.at(g.hyperplanes()[h]);
    for (int k = 0; k < g.d(); ++k) s(k, h) = vec[k];
  }
  return s;
}

NormalAssignment assignment_from_matrix(const IncidenceGeometry& g,
                                        const RatMat& s) {
  NormalAssignment na;
  for (int h = 0; h < g.num_hyperplanes(); ++h) {
    std::vector<Rational> vec(g.d());
    for (int k = 0; k < g.d(); ++k) vec[k] = s(k, h);
    na.entries[g.hyperplanes()[h]] = std::move(vec);
  }
  return na;
}

std::pair<NormalAssignment, Realization> normals_from_points(
    const IncidenceGeometry& g, const PointConfiguration& coords) {
  if (g.d() != 2)
    throw ValidationError("normals_from_points requires d = 2");
  validate_coordinates(g, coords);

  NormalAssignment na;
  Realization real;
  real.coords = coords;

  for (int h = 0; h < g.num_hyperplanes(); ++h) {
    const std::string& label = g.hyperplanes()[h];
    std::vector<const std::vector<Rational>*> pts;
    for (const auto& [pi, hi] : g.incidence_indices())
      if (hi == h) pts.push_back(&coords.coords.at(g.points()[pi]));

    const std::vector<Rational>* first = pts.empty() ? nullptr : pts[0];
    const std::vector<Rational>* second = nullptr;
    for (std::size_t i = 1; i < pts.size() && !second; ++i)
      if (*pts[i] != *first) second = pts[i];
    if (!first || !second)
      throw ValidationError("hyperplane '" + label +
                            "' has fewer than two distinct incident points; "
                            "normal is underdetermined");

    const Rational dx = (*second)[0] - (*first)[0];
    const Rational dy = (*second)[1] - (*first)[1];
    // Perpendicular of the direction, cleared to a primitive integer
    // vector with positive leading entry.
    Rational a = dy, b = -dx;
    Int scale = lcm(a.get_den(), b.get_den());
    const Rational sa = a * Rational(scale);
    const Rational sb = b * Rational(scale);
    Int ia = sa.get_num();
    Int ib = sb.get_num();
    Int content = gcd(ia, ib);
    ia /= content;
    ib /= content;
    if (ia < 0 || (ia == 0 && ib < 0)) {
      ia = -ia;
      ib = -ib;
    }
    const Rational na_a(ia), na_b(ib);
    const Rational offset = -(na_a * (*first)[0] + na_b * (*first)[1]);
    for (const auto* pt : pts) {
      if (na_a * (*pt)[0] + na_b * (*pt)[1] + offset != 0)
        throw ValidationError("incident points of hyperplane '" + label +
                              "' are not collinear");
    }
    na.entries[label] = {na_a, na_b};
    real.offsets[label] = offset;
  }
  return {na, real};
}

bool satisfies_incidence_equations(const IncidenceGeometry& g,
                                   const NormalAssignment& normals,
                                   const Realization& r) {
  for (const auto& [pi, hi] : g.incidence_indices()) {
    const auto& n = normals.entries.at(g.hyperplanes()[hi]);
    const auto& x = r.coords.coords.at(g.points()[pi]);
    Rational acc = r.offsets.at(g.hyperplanes()[hi]);
    for (int k = 0; k < g.d(); ++k) acc += n[k] * x[k];
    if (acc != 0) return false;
  }
  return true;
}

std::string geometry_fingerprint(const IncidenceGeometry& g) {
  const std::string text = serialize_geometry(g);
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex;
  for (int i = 15; i >= 0; --i) os << ((hash >> (4 * i)) & 0xF);
  return os.str();
}

}  // namespace predraw
