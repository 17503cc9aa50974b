#include <cstdio>
#include <fstream>
#include <ostream>
#include <string>

#include "cohlab/cli.hpp"
#include "cohlab/coherence.hpp"
#include "cohlab/error.hpp"
#include "cohlab/lsdecomp.hpp"

namespace cohlab::cli {

namespace {

struct Panel {
  const char* file;
  double d1;
  double d2;
};

constexpr Panel kPanels[] = {{"figure1_a.csv", 0.52, 0.1}, {"figure1_b.csv", 0.6, 0.05}};
constexpr double kEdge = 1e-6;
constexpr double kSandwichTol = 1e-9;

}  // namespace

std::vector<FigureRow> figure_panel(double d1, double d2, int points) {
  if (points < 2) throw InvalidParams("figure_panel: need at least 2 points");
  const double span = 1.0 - d1 - d2;
  const double lo = kEdge;
  const double hi = span - kEdge;
  if (hi <= lo) throw InvalidParams("figure_panel: d1 + d2 leaves no room for d3");

  const Basis b1 = computational_basis(4);
  const Basis b2 = product_basis(fourier_basis(2), fourier_basis(2));
  std::vector<FigureRow> rows;
  rows.reserve(points);
  for (int k = 0; k < points; ++k) {
    const double d3 = lo + (hi - lo) * k / (points - 1);
    const double d4 = span - d3;
    const BellDiagonalParams p({d1, d2, d3, d4});
    const DensityMatrix rho = bell_diagonal(p, BellOrdering::PhiOuter);
    const LSDecomposition ls = ls_bell_diagonal(p, BellOrdering::PhiOuter);
    rows.push_back({d3, rel_ent_coherence(rho, b1) + rel_ent_coherence(rho, b2),
                    bell_ls_bound_unit_factor(p), 4.0 - 2.0 * ls.K, bell_conditional_bound(p)});
  }
  return rows;
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::string s(kFigureHeader);
  s += '\n';
  char buf[200];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.10g,%.17g,%.17g,%.17g,%.17g\n", r.d3, r.lhs, r.rhs_eq27,
                  r.rhs_eq18, r.rhs_eq28);
    s += buf;
  }
  return s;
}

int cmd_figure1(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const std::filesystem::path dir = config.output.empty() ? std::filesystem::path(".") : config.output;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    err << "error: cannot create output directory '" << dir.string() << "': " << ec.message() << '\n';
    return kExitInputError;
  }

  bool ok = true;
  for (const Panel& panel : kPanels) {
    const auto rows = figure_panel(panel.d1, panel.d2);
    const std::filesystem::path path = dir / panel.file;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << path.string() << "'\n";
      return kExitInputError;
    }
    f << figure_csv(rows);

    std::size_t ordering_fail = 0;
    std::size_t sandwich_fail = 0;
    for (const auto& r : rows) {
      if (!(r.rhs_eq28 < r.rhs_eq27)) ++ordering_fail;
      if (r.lhs > r.rhs_eq28 + kSandwichTol) ++sandwich_fail;
    }
    const bool pass = ordering_fail == 0 && sandwich_fail == 0;
    ok &= pass;
    out << path.string() << ": " << rows.size() << " rows, d1=" << panel.d1 << " d2=" << panel.d2
        << ", ordering failures " << ordering_fail << ", sandwich failures " << sandwich_fail << "  "
        << (pass ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace cohlab::cli
