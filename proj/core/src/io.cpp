#include "skeinym/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "skeinym/errors.hpp"

namespace skeinym {

namespace {

using nlohmann::json;

// ldexp is exact and round-trippable through a double in this band.
constexpr std::int64_t kPlainExpLimit = 960;

json scalar_to_json_value(const ScaledScalar& v) {
  if (v.is_zero()) return json(0.0);
  if (std::llabs(v.exp2()) < kPlainExpLimit) {
    const Complex c = v.to_complex();
    if (c.imag() == 0.0) return json(c.real());
    return json{{"re", c.real()}, {"im", c.imag()}};
  }
  return json{{"re", v.sig().real()},
              {"im", v.sig().imag()},
              {"log2_scale", v.exp2()}};
}

ScaledScalar scalar_from_json_value(const json& j) {
  if (j.is_number()) return ScaledScalar(j.get<double>());
  if (j.is_object()) {
    const Complex c(j.at("re").get<double>(),
                    j.value("im", 0.0));
    if (j.contains("log2_scale"))
      return ScaledScalar::from_parts(c, j.at("log2_scale").get<std::int64_t>());
    return ScaledScalar(c);
  }
  throw std::runtime_error("scalar: expected a number or {re, im[, log2_scale]}");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// nlohmann exceptions derive from std::exception only; the documented
// contract is std::runtime_error for every parse problem.
json parse_or_raise(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("json: ") + e.what());
  }
}

}  // namespace

ColoredSpine spine_from_json(const std::string& text) {
  const json j = parse_or_raise(text);
  ColoredSpine s;
  try {
    s.genus = j.at("genus").get<int>();
    s.edge_colors = j.at("edges").get<std::vector<int>>();
    for (const auto& v : j.at("vertices")) {
      if (!v.is_array() || v.size() != 3)
        throw std::runtime_error("spine: each vertex needs three edge indices");
      s.vertices.push_back({v[0].get<int>(), v[1].get<int>(), v[2].get<int>()});
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("spine: ") + e.what());
  }
  validate_spine(s);
  return s;
}

std::string spine_to_json(const ColoredSpine& s) {
  json j;
  j["genus"] = s.genus;
  j["edges"] = s.edge_colors;
  json vs = json::array();
  for (const auto& v : s.vertices) vs.push_back({v[0], v[1], v[2]});
  j["vertices"] = std::move(vs);
  return j.dump(2) + "\n";
}

ColoredSpine load_spine(const std::string& path) {
  return spine_from_json(read_file(path));
}

TorusElement torus_from_json(const std::string& text) {
  const json j = parse_or_raise(text);
  TorusElement x;
  try {
    if (j.contains("empty")) x.add_empty(scalar_from_json_value(j.at("empty")));
    if (j.contains("terms")) {
      for (const auto& term : j.at("terms")) {
        const int p = term.at("p").get<int>();
        const int q = term.at("q").get<int>();
        ScaledScalar c;
        if (term.contains("log2_scale")) {
          c = ScaledScalar::from_parts(
              Complex(term.at("re").get<double>(), term.value("im", 0.0)),
              term.at("log2_scale").get<std::int64_t>());
        } else {
          c = ScaledScalar(
              Complex(term.at("re").get<double>(), term.value("im", 0.0)));
        }
        x.add(PairClass(p, q), c);
      }
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("torus: ") + e.what());
  }
  return x;
}

std::string torus_to_json(const TorusElement& x) {
  json j;
  j["empty"] = scalar_to_json_value(x.empty_coeff());
  json terms = json::array();
  for (const auto& [c, v] : x.coeffs()) {
    json term;
    term["p"] = c.p;
    term["q"] = c.q;
    if (!v.is_zero() && std::llabs(v.exp2()) >= kPlainExpLimit) {
      term["re"] = v.sig().real();
      term["im"] = v.sig().imag();
      term["log2_scale"] = v.exp2();
    } else {
      const Complex cv = v.to_complex();
      term["re"] = cv.real();
      term["im"] = cv.imag();
    }
    terms.push_back(std::move(term));
  }
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

TorusElement load_torus_element(const std::string& path) {
  return torus_from_json(read_file(path));
}

std::string scalar_to_json(const ScaledScalar& v) {
  return scalar_to_json_value(v).dump();
}

ScaledScalar scalar_from_json(const std::string& text) {
  const json j = parse_or_raise(text);
  try {
    return scalar_from_json_value(j);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("scalar: ") + e.what());
  }
}

}  // namespace skeinym
