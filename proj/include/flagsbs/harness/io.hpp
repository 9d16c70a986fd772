#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "flagsbs/errors.hpp"
#include "flagsbs/projective.hpp"
#include "flagsbs/types.hpp"

namespace flagsbs::harness {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// {"matrix": [[[re, im], [re, im], [re, im]], ...], "label": "..."}
struct DivisorInput {
  Mat3c matrix;
  std::optional<std::string> label;
};

DivisorInput parse_divisor(const nlohmann::json& doc);
DivisorInput parse_divisor_text(const std::string& text);
DivisorInput load_divisor(const std::filesystem::path& path);

nlohmann::json divisor_to_json(const DivisorInput& input);

/// [re, im]
nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Mat3c& m);

/// [[re, im], [re, im], [re, im]] of the canonical representative.
nlohmann::json point_to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const nlohmann::json& j);

/// "re,im" as used by --z.
Complex parse_complex_flag(const std::string& text);

/// --x: either "re,im re,im re,im" or a JSON array of three [re, im] pairs.
ProjectivePoint parse_point_flag(const std::string& text);

}  // namespace flagsbs::harness
