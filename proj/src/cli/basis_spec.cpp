#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "cohlab/cli.hpp"
#include "cohlab/error.hpp"
#include "cohlab/state_io.hpp"

namespace cohlab::cli {

namespace {

double parse_double(std::string_view text, std::string_view what) {
  const std::string s(text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ParseError(std::string(what) + ": '" + s + "' is not a number");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text, std::string_view what) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ParseError(std::string(what) + ": '" + std::string(text) + "' is not an unsigned integer");
  }
  return v;
}

std::vector<double> parse_list(std::string_view text, std::string_view what) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(parse_double(text.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.trials < 1) throw InvalidParams("--trials must be at least 1");
  if (!(config.tolerance > 0.0)) throw InvalidParams("tolerance must be positive");
}

double tolerance_from_env(double fallback) {
  const char* env = std::getenv("COHLAB_TOL");
  if (!env || !*env) return fallback;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) return fallback;
  return v;
}

Basis resolve_basis(std::string_view spec, std::size_t d) {
  if (spec == "computational") return computational_basis(d);
  if (spec == "fourier") return fourier_basis(d);
  if (spec == "hadamard" || spec == "circular") {
    if (d != 2) {
      throw DimensionMismatch("basis '" + std::string(spec) + "' is only defined for d = 2, not d = " +
                              std::to_string(d));
    }
    return spec == "hadamard" ? hadamard_basis() : circular_basis();
  }
  if (starts_with(spec, "random:")) {
    return random_basis(d, parse_u64(spec.substr(7), "random basis seed"));
  }
  const std::filesystem::path path{std::string(spec)};
  if (path.extension() == ".json" || std::filesystem::exists(path)) {
    Basis b = read_unitary(path);
    if (b.dim() != d) {
      throw DimensionMismatch("basis file '" + path.string() + "' has dimension " +
                              std::to_string(b.dim()) + ", expected " + std::to_string(d));
    }
    return b;
  }
  throw ParseError("unknown basis '" + std::string(spec) + "'");
}

DensityMatrix resolve_state(std::string_view spec) {
  if (spec.empty()) throw ParseError("no state given (--state)");
  if (starts_with(spec, "bell:") || starts_with(spec, "bell2:")) {
    const bool second = starts_with(spec, "bell2:");
    const auto w = parse_list(spec.substr(second ? 6 : 5), "Bell weights");
    if (w.size() != 4) throw ParseError("Bell weights: expected 4 values");
    return bell_diagonal(BellDiagonalParams({w[0], w[1], w[2], w[3]}),
                         second ? BellOrdering::PhiOuter : BellOrdering::PhiFirst);
  }
  if (starts_with(spec, "horodecki:")) {
    return horodecki_state(HorodeckiParams(parse_double(spec.substr(10), "Horodecki gamma")));
  }
  return read_state(std::filesystem::path{std::string(spec)});
}

}  // namespace cohlab::cli
