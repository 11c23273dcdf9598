#pragma once

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bodyorder/body.hpp"
#include "bodyorder/geometry.hpp"

namespace bodyorder {

inline constexpr const char* kFamilySchema = "bodyorder.family/1";
inline constexpr const char* kPointsSchema = "bodyorder.points/1";
inline constexpr const char* kResultSchema = "bodyorder.result/1";

/// Coordinates serialize as JSON integers when they fit, as reduced "p/q"
/// strings otherwise; floats are rejected on input to keep files exact.
inline nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.is_integer() && s.num().fits_slong_p())
    return static_cast<long long>(s.num().get_si());
  return s.str();
}

inline Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_number_integer())
    return Scalar(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw std::invalid_argument(
      "coordinate must be a JSON integer or a 'p/q' string, floats are not "
      "accepted: " +
      j.dump());
}

inline nlohmann::json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<long long>(z.get_si());
  return z.get_str();
}

inline nlohmann::json point_to_json(const Point& p) {
  return nlohmann::json::array({scalar_to_json(p.x), scalar_to_json(p.y)});
}

inline Point point_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("point must be a [x, y] pair: " + j.dump());
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

inline nlohmann::json family_to_json(const Family& f) {
  nlohmann::json bodies = nlohmann::json::array();
  for (const ConvexBody& b : f) {
    nlohmann::json verts = nlohmann::json::array();
    for (const Point& p : b.vertices) verts.push_back(point_to_json(p));
    bodies.push_back({{"id", b.id}, {"vertices", std::move(verts)}});
  }
  return {{"schema", kFamilySchema}, {"bodies", std::move(bodies)}};
}

inline Family family_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kFamilySchema)
    throw std::invalid_argument(std::string("family document must carry "
                                            "\"schema\": \"") +
                                kFamilySchema + "\"");
  if (!j.contains("bodies") || !j["bodies"].is_array())
    throw std::invalid_argument("family document needs a \"bodies\" array");
  Family f;
  std::set<std::string> seen;
  for (const auto& bj : j["bodies"]) {
    if (!bj.is_object() || !bj.contains("id") || !bj["id"].is_string() ||
        !bj.contains("vertices") || !bj["vertices"].is_array())
      throw std::invalid_argument(
          "each body needs a string \"id\" and a \"vertices\" array");
    ConvexBody b{bj["id"].get<std::string>(), {}};
    if (b.id.empty())
      throw std::invalid_argument("body ids must be nonempty");
    if (!seen.insert(b.id).second)
      throw std::invalid_argument("duplicate body id '" + b.id + "'");
    for (const auto& vj : bj["vertices"]) b.vertices.push_back(point_from_json(vj));
    validate_body(b);
    f.push_back(std::move(b));
  }
  return f;
}

inline nlohmann::json line_to_json(const Line& l) {
  return {{"a", mpz_to_json(l.a)},
          {"b", mpz_to_json(l.b)},
          {"c", mpz_to_json(l.c)}};
}

inline mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or integer string: " +
                              j.dump());
}

inline Line line_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b") ||
      !j.contains("c"))
    throw std::invalid_argument("line needs fields a, b, c");
  IVec n{mpz_from_json(j["a"]), mpz_from_json(j["b"])};
  return line_from_normal(n, Scalar(mpz_from_json(j["c"])));
}

/// Point assignment document, also emitted as a representation certificate.
struct PointsDocument {
  std::vector<Point> points;
  std::optional<std::vector<int>> body_to_point;
};

inline nlohmann::json points_to_json(const PointsDocument& d) {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& p : d.points) pts.push_back(point_to_json(p));
  nlohmann::json out{{"schema", kPointsSchema}, {"points", std::move(pts)}};
  if (d.body_to_point) out["body_to_point"] = *d.body_to_point;
  return out;
}

inline PointsDocument points_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema", "") != kPointsSchema)
    throw std::invalid_argument(std::string("points document must carry "
                                            "\"schema\": \"") +
                                kPointsSchema + "\"");
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument("points document needs a \"points\" array");
  PointsDocument d;
  for (const auto& pj : j["points"]) d.points.push_back(point_from_json(pj));
  if (j.contains("body_to_point")) {
    if (!j["body_to_point"].is_array())
      throw std::invalid_argument("body_to_point must be an index array");
    d.body_to_point.emplace();
    for (const auto& ij : j["body_to_point"]) {
      if (!ij.is_number_integer())
        throw std::invalid_argument("body_to_point entries must be integers");
      d.body_to_point->push_back(ij.get<int>());
    }
  }
  return d;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::invalid_argument("write to '" + path + "' failed");
}

}  // namespace bodyorder
