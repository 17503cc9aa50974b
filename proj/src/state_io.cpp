#include "cohlab/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "cohlab/error.hpp"

namespace cohlab {

namespace {

using nlohmann::json;

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw ParseError("top-level JSON value must be an object");
    return doc;
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

double number_at(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError("field '" + where + "' must be a number");
  return v.get<double>();
}

Dims parse_dims(const json& doc) {
  const json& dims = doc.at("dims");
  if (!dims.is_array() || dims.empty()) {
    throw ParseError("field 'dims' must be a non-empty array of positive integers");
  }
  Dims out;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const json& v = dims[k];
    if (!v.is_number_integer() || v.get<long long>() <= 0) {
      throw ParseError("field 'dims[" + std::to_string(k) + "]' must be a positive integer");
    }
    out.push_back(static_cast<std::size_t>(v.get<long long>()));
  }
  return out;
}

ComplexMatrix parse_matrix(const json& doc) {
  if (!doc.contains("matrix")) throw ParseError("missing field 'matrix'");
  const json& m = doc.at("matrix");
  if (!m.is_array()) throw ParseError("field 'matrix' must be an array of [re, im] pairs");
  const std::size_t n = m.size();
  const auto dim = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (n == 0 || dim * dim != n) {
    throw ParseError("field 'matrix' has " + std::to_string(n) +
                     " entries, which is not a perfect square");
  }
  std::vector<Complex> entries(n);
  for (std::size_t k = 0; k < n; ++k) {
    const json& pair = m[k];
    const std::string where = "matrix[" + std::to_string(k) + "]";
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("field '" + where + "' must be a [re, im] pair");
    }
    entries[k] = {number_at(pair[0], where + "[0]"), number_at(pair[1], where + "[1]")};
  }
  return ComplexMatrix(dim, std::move(entries));
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_document(const Dims* dims, const ComplexMatrix& m, const std::string* label) {
  std::string out = "{";
  if (label) out += "\"label\": " + json(*label).dump() + ", ";
  if (dims) {
    out += "\"dims\": [";
    for (std::size_t k = 0; k < dims->size(); ++k) {
      if (k) out += ", ";
      out += std::to_string((*dims)[k]);
    }
    out += "], ";
  }
  out += "\"matrix\": [";
  const auto entries = m.entries();
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) out += ", ";
    out += "[" + format_number(entries[k].real()) + ", " + format_number(entries[k].imag()) + "]";
  }
  out += "]}\n";
  return out;
}

}  // namespace

DensityMatrix parse_state(std::string_view json_text) {
  const json doc = parse_document(json_text);
  if (!doc.contains("dims")) throw ParseError("missing field 'dims'");
  Dims dims = parse_dims(doc);
  ComplexMatrix m = parse_matrix(doc);
  const std::size_t total =
      std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
  if (total != m.dim()) {
    throw ParseError("field 'dims' multiplies to " + std::to_string(total) +
                     " but field 'matrix' is " + std::to_string(m.dim()) + "x" +
                     std::to_string(m.dim()));
  }
  return DensityMatrix(std::move(m), std::move(dims));
}

DensityMatrix read_state(const std::filesystem::path& path) { return parse_state(slurp(path)); }

std::string format_state(const DensityMatrix& rho) {
  return format_document(&rho.dims(), rho.matrix(), nullptr);
}

void write_state(const std::filesystem::path& path, const DensityMatrix& rho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path.string() + "'");
  out << format_state(rho);
}

Basis parse_unitary(std::string_view json_text) {
  const json doc = parse_document(json_text);
  ComplexMatrix m = parse_matrix(doc);
  if (doc.contains("dims")) {
    const Dims dims = parse_dims(doc);
    const std::size_t total =
        std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
    if (total != m.dim()) throw ParseError("field 'dims' does not match field 'matrix'");
  }
  std::string label = "custom";
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("field 'label' must be a string");
    label = doc.at("label").get<std::string>();
  }
  return Basis(std::move(m), std::move(label));
}

Basis read_unitary(const std::filesystem::path& path) { return parse_unitary(slurp(path)); }

std::string format_unitary(const Basis& basis) {
  const Dims dims{basis.dim()};
  return format_document(&dims, basis.unitary(), &basis.label());
}

}  // namespace cohlab
