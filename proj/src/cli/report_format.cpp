#include <cstdio>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cohlab/cli.hpp"

namespace cohlab::cli {

namespace {

std::string fixed(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

}  // namespace

std::string report_json(const RelationReport& report) {
  nlohmann::ordered_json j;
  j["relation"] = std::string(relation_name(report.relation_id));
  j["direction"] = relation_direction(report.relation_id) == BoundDirection::Lower ? "lower" : "upper";
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  j["slack"] = report.slack;
  j["holds"] = report.holds;
  nlohmann::ordered_json terms = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.terms) terms[name] = value;
  j["terms"] = std::move(terms);
  return j.dump();
}

void print_report(std::ostream& out, const RelationReport& report) {
  const bool lower = relation_direction(report.relation_id) == BoundDirection::Lower;
  out << relation_name(report.relation_id) << " (" << (lower ? "lower bound" : "upper bound")
      << "): " << (report.holds ? "HOLDS" : "VIOLATED") << '\n';
  out << "  lhs   " << fixed(report.lhs) << '\n';
  out << "  rhs   " << fixed(report.rhs) << '\n';
  out << "  slack " << fixed(report.slack) << '\n';
  std::size_t width = 0;
  for (const auto& [name, value] : report.terms) width = std::max(width, name.size());
  for (const auto& [name, value] : report.terms) {
    out << "    " << name << std::string(width - name.size() + 1, ' ') << fixed(value) << '\n';
  }
  out << report_json(report) << '\n';
}

}  // namespace cohlab::cli
