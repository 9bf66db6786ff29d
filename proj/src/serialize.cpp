#include "hyperharm/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hyperharm/errors.hpp"

namespace hyperharm {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorCode::ParseError, "complex value must be [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Json to_json(const MoebiusMap& m) {
  return Json{{"model", matrix_model_name(m.matrix_model())},
              {"a", complex_to_json(m.a())},
              {"b", complex_to_json(m.b())},
              {"c", complex_to_json(m.c())},
              {"d", complex_to_json(m.d())}};
}

MoebiusMap moebius_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "Moebius map must be an object");
  std::string model = j.value("model", "");
  MatrixModel mm;
  if (model == "SL2R")
    mm = MatrixModel::SL2R;
  else if (model == "SU11")
    mm = MatrixModel::SU11;
  else
    throw Error(ErrorCode::ParseError, "unknown matrix model '" + model + "'");
  for (const char* k : {"a", "b", "c", "d"})
    if (!j.contains(k)) throw Error(ErrorCode::ParseError, std::string("missing entry ") + k);
  return MoebiusMap::from_entries(complex_from_json(j["a"]), complex_from_json(j["b"]), complex_from_json(j["c"]),
                                  complex_from_json(j["d"]), mm);
}

Json to_json(const GroupPresentation& g) {
  Json j{{"genus", g.genus}, {"generators", Json::array()}};
  for (const auto& m : g.generators) j["generators"].push_back(to_json(m));
  if (g.has_side_pairings()) {
    j["side_pairings"] = Json::array();
    for (std::size_t k = 0; k < g.side_pairings.size(); ++k)
      j["side_pairings"].push_back({{"map", to_json(g.side_pairings[k])}, {"word", g.side_pairing_words[k]}});
  }
  return j;
}

GroupPresentation group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("genus") || !j.contains("generators"))
    throw Error(ErrorCode::ParseError, "group needs genus and generators");
  GroupPresentation g;
  g.genus = j["genus"].get<int>();
  for (const auto& m : j["generators"]) g.generators.push_back(moebius_from_json(m));
  if (j.contains("side_pairings")) {
    for (const auto& s : j["side_pairings"]) {
      g.side_pairings.push_back(moebius_from_json(s.at("map")));
      g.side_pairing_words.push_back(s.at("word").get<Word>());
    }
  }
  g.validate();
  return g;
}

Json to_json(const Cocycle& c) {
  Json j{{"convention", c.convention}, {"values", Json::array()}};
  for (const auto& v : c.values) j["values"].push_back({{"a", complex_to_json(v.a)}, {"b", v.b}});
  return j;
}

Cocycle cocycle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("values")) throw Error(ErrorCode::ParseError, "cocycle needs values");
  Cocycle c;
  c.convention = j.value("convention", "vector-field");
  if (c.convention != "vector-field")
    throw Error(ErrorCode::ParseError, "unsupported cocycle convention '" + c.convention + "'");
  for (const auto& v : j["values"]) c.values.push_back({complex_from_json(v.at("a")), v.at("b").get<double>()});
  return c;
}

Json to_json(const CircleField& x) {
  Json s = Json::array();
  for (Complex v : x.samples()) s.push_back(complex_to_json(v));
  return Json{{"N", x.size()}, {"samples", s}};
}

CircleField circle_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("samples")) throw Error(ErrorCode::ParseError, "circle field needs samples");
  std::vector<Complex> s;
  for (const auto& v : j["samples"]) s.push_back(complex_from_json(v));
  if (j.contains("N") && j["N"].get<std::size_t>() != s.size())
    throw Error(ErrorCode::ParseError, "N does not match the sample count");
  return CircleField::from_samples(std::move(s));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns) : width_(columns.size()) {
  for (std::size_t i = 0; i < columns.size(); ++i) text_ += (i ? "," : "") + columns[i];
  text_ += '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != width_) throw Error(ErrorCode::InvalidArgument, "CSV row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ',';
    text_ += format_double(values[i]);
  }
  text_ += '\n';
}

std::string CsvWriter::str() const { return text_; }

}  // namespace hyperharm
