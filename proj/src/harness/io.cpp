#include "flagsbs/harness/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace flagsbs::harness {

using nlohmann::json;

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("complex number must be a [re, im] pair of numbers, got " + j.dump());
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw ParseError("complex number is not finite: " + j.dump());
  return z;
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Mat3c& m) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i) {
    json row = json::array();
    for (int j = 0; j < 3; ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json point_to_json(const ProjectivePoint& p) {
  return json::array({complex_to_json(p[0]), complex_to_json(p[1]), complex_to_json(p[2])});
}

ProjectivePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw ParseError("point must be an array of three [re, im] pairs");
  const Vec3c v(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]));
  if (v.norm() == 0) throw ParseError("point has all coordinates zero");
  return ProjectivePoint(v);
}

DivisorInput parse_divisor(const json& doc) {
  if (!doc.is_object() || !doc.contains("matrix")) throw ParseError("input must be an object with a \"matrix\" field");
  const json& rows = doc["matrix"];
  if (!rows.is_array() || rows.size() != 3) throw ParseError("\"matrix\" must have three rows");
  DivisorInput input;
  for (int i = 0; i < 3; ++i) {
    if (!rows[i].is_array() || rows[i].size() != 3)
      throw ParseError("row " + std::to_string(i) + " must have three entries");
    for (int j = 0; j < 3; ++j) input.matrix(i, j) = complex_from_json(rows[i][j]);
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
    input.label = doc["label"].get<std::string>();
  }
  return input;
}

DivisorInput parse_divisor_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_divisor(doc);
}

DivisorInput load_divisor(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_divisor_text(text.str());
}

json divisor_to_json(const DivisorInput& input) {
  json doc{{"matrix", matrix_to_json(input.matrix)}};
  if (input.label) doc["label"] = *input.label;
  return doc;
}

Complex parse_complex_flag(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected \"re,im\", got \"" + text + "\"");
  try {
    std::size_t used_re = 0, used_im = 0;
    const std::string re = text.substr(0, comma), im = text.substr(comma + 1);
    const double r = std::stod(re, &used_re), i = std::stod(im, &used_im);
    if (used_re != re.size() || used_im != im.size() || !std::isfinite(r) || !std::isfinite(i))
      throw ParseError("expected \"re,im\", got \"" + text + "\"");
    return {r, i};
  } catch (const std::logic_error&) {
    throw ParseError("expected \"re,im\", got \"" + text + "\"");
  }
}

ProjectivePoint parse_point_flag(const std::string& text) {
  const auto start = text.find_first_not_of(" \t");
  if (start != std::string::npos && text[start] == '[') {
    try {
      return point_from_json(json::parse(text));
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid point JSON: ") + e.what());
    }
  }
  std::istringstream in(text);
  std::vector<Complex> coords;
  for (std::string token; in >> token;) coords.push_back(parse_complex_flag(token));
  if (coords.size() != 3) throw ParseError("expected three \"re,im\" coordinates, got \"" + text + "\"");
  const Vec3c v(coords[0], coords[1], coords[2]);
  if (v.norm() == 0) throw ParseError("point has all coordinates zero");
  return ProjectivePoint(v);
}

}  // namespace flagsbs::harness
