#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperharm/circle.hpp"
#include "hyperharm/cocycle.hpp"
#include "hyperharm/group.hpp"
#include "hyperharm/moebius.hpp"

namespace hyperharm {

using Json = nlohmann::json;

Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const MoebiusMap& m);
MoebiusMap moebius_from_json(const Json& j);

// {"genus":2,"generators":[...]}; side pairings are written when present.
Json to_json(const GroupPresentation& g);
GroupPresentation group_from_json(const Json& j);

Json to_json(const Cocycle& c);
Cocycle cocycle_from_json(const Json& j);

Json to_json(const CircleField& x);
CircleField circle_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Shortest round-trip decimal form of a double, 17 significant digits.
std::string format_double(double v);

class CsvWriter {
 public:
  explicit CsvWriter(std::vector<std::string> columns);
  void row(const std::vector<double>& values);
  std::string str() const;

 private:
  std::size_t width_;
  std::string text_;
};

}  // namespace hyperharm
