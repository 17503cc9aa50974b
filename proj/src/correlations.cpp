#include "cohlab/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "cohlab/coherence.hpp"
#include "cohlab/error.hpp"

namespace cohlab {

namespace {

constexpr double kNelderMeadFtol = 1e-7;
constexpr double kNelderMeadXtol = 1e-6;
constexpr int kNelderMeadMaxIter = 500;
constexpr int kRefineCandidates = 3;

void require_bipartite(const DensityMatrix& rho, const char* what) {
  if (rho.subsystems() != 2) {
    throw DimensionMismatch(std::string(what) + ": expected a bipartite state, got " +
                            std::to_string(rho.subsystems()) + " subsystems");
  }
}

void require_two_qubits(const DensityMatrix& rho, const char* what) {
  require_bipartite(rho, what);
  if (rho.dims()[0] != 2 || rho.dims()[1] != 2) {
    throw Unsupported(std::string(what) + ": only two-qubit states are supported");
  }
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

using Block = std::array<Complex, 4>;  // 2x2 row-major

// q * S(M / q) for an unnormalised 2x2 positive matrix M with trace q.
double weighted_conditional_entropy(const Block& m) {
  const double a = m[0].real();
  const double d = m[3].real();
  const double half_gap = std::sqrt(0.25 * (a - d) * (a - d) + std::norm(m[1]));
  const double mid = 0.5 * (a + d);
  const double l1 = std::max(mid + half_gap, 0.0);
  const double l2 = std::max(mid - half_gap, 0.0);
  const double q = l1 + l2;
  return -xlog2x(l1) - xlog2x(l2) + xlog2x(q);
}

// Two-qubit state split into the pieces the measurement objective needs.
class MeasuredInformation {
 public:
  explicit MeasuredInformation(const DensityMatrix& rho) : rho_a_() {
    const ComplexMatrix& m = rho.matrix();
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t bp = 0; bp < 2; ++bp) {
        for (std::size_t a = 0; a < 2; ++a) {
          for (std::size_t ap = 0; ap < 2; ++ap) blocks_[b][bp][a * 2 + ap] = m(a * 2 + b, ap * 2 + bp);
        }
      }
    }
    for (std::size_t k = 0; k < 4; ++k) rho_a_[k] = blocks_[0][0][k] + blocks_[1][1][k];
    s_a_ = weighted_conditional_entropy(rho_a_);
  }

  double operator()(double theta, double phi) const {
    const Complex v0 = std::cos(0.5 * theta);
    const Complex v1 = std::polar(std::sin(0.5 * theta), phi);
    const Complex v[2] = {v0, v1};
    Block plus{};
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t bp = 0; bp < 2; ++bp) {
        // Tr_B[(I (x) |v><v|) rho] picks up <v|b> rho_{b b'} <b'|v>.
        const Complex w = std::conj(v[b]) * v[bp];
        for (std::size_t k = 0; k < 4; ++k) plus[k] += w * blocks_[b][bp][k];
      }
    }
    Block minus{};
    for (std::size_t k = 0; k < 4; ++k) minus[k] = rho_a_[k] - plus[k];
    return s_a_ - weighted_conditional_entropy(plus) - weighted_conditional_entropy(minus);
  }

 private:
  std::array<std::array<Block, 2>, 2> blocks_{};
  Block rho_a_;
  double s_a_ = 0.0;
};

struct Point {
  double theta;
  double phi;
  double value;
};

// Maximises f over (theta, phi) starting from `start` with initial step
// `step`. Standard Nelder-Mead coefficients.
template <class F>
Point nelder_mead_max(const F& f, Point start, double step) {
  std::array<Point, 3> s{start, Point{start.theta + step, start.phi, 0.0},
                         Point{start.theta, start.phi + step, 0.0}};
  for (std::size_t k = 1; k < 3; ++k) s[k].value = f(s[k].theta, s[k].phi);
  auto eval = [&](double t, double p) { return Point{t, p, f(t, p)}; };

  for (int iter = 0; iter < kNelderMeadMaxIter; ++iter) {
    std::sort(s.begin(), s.end(), [](const Point& x, const Point& y) { return x.value > y.value; });
    if (s[0].value - s[2].value < kNelderMeadFtol &&
        std::hypot(s[0].theta - s[2].theta, s[0].phi - s[2].phi) < kNelderMeadXtol) {
      break;
    }
    const double ct = 0.5 * (s[0].theta + s[1].theta);
    const double cp = 0.5 * (s[0].phi + s[1].phi);
    const Point refl = eval(2.0 * ct - s[2].theta, 2.0 * cp - s[2].phi);
    if (refl.value > s[0].value) {
      const Point expd = eval(3.0 * ct - 2.0 * s[2].theta, 3.0 * cp - 2.0 * s[2].phi);
      s[2] = expd.value > refl.value ? expd : refl;
    } else if (refl.value > s[1].value) {
      s[2] = refl;
    } else {
      const Point& base = refl.value > s[2].value ? refl : s[2];
      const Point contr = eval(0.5 * (ct + base.theta), 0.5 * (cp + base.phi));
      if (contr.value > base.value) {
        s[2] = contr;
      } else {
        for (std::size_t k = 1; k < 3; ++k) {
          s[k] = eval(0.5 * (s[0].theta + s[k].theta), 0.5 * (s[0].phi + s[k].phi));
        }
      }
    }
  }
  return *std::max_element(s.begin(), s.end(),
                           [](const Point& x, const Point& y) { return x.value < y.value; });
}

}  // namespace

double conditional_entropy(const DensityMatrix& rho_ab) {
  require_bipartite(rho_ab, "conditional_entropy");
  return von_neumann_entropy(rho_ab) - von_neumann_entropy(rho_ab.reduced({1}));
}

double mutual_information(const DensityMatrix& rho_ab) {
  require_bipartite(rho_ab, "mutual_information");
  return von_neumann_entropy(rho_ab.reduced({0})) + von_neumann_entropy(rho_ab.reduced({1})) -
         von_neumann_entropy(rho_ab);
}

double measured_information(const DensityMatrix& rho_ab, double theta, double phi) {
  require_two_qubits(rho_ab, "measured_information");
  return MeasuredInformation(rho_ab)(theta, phi);
}

ClassicalCorrelationResult classical_correlation_search(const DensityMatrix& rho_ab) {
  require_two_qubits(rho_ab, "classical_correlation_J");
  const MeasuredInformation f(rho_ab);

  // Polar angles include both poles so the computational measurement is a
  // grid point. Ties keep the lowest grid index.
  std::vector<Point> grid;
  grid.reserve(kDiscordGridAzimuthal * kDiscordGridPolar);
  for (int k = 0; k < kDiscordGridPolar; ++k) {
    const double theta = M_PI * k / (kDiscordGridPolar - 1);
    for (int j = 0; j < kDiscordGridAzimuthal; ++j) {
      const double phi = 2.0 * M_PI * j / kDiscordGridAzimuthal;
      grid.push_back({theta, phi, f(theta, phi)});
    }
  }
  std::vector<std::size_t> order(grid.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return grid[x].value > grid[y].value; });

  const Point grid_best = grid[order.front()];
  Point best = grid_best;
  const double step = M_PI / (kDiscordGridPolar - 1);
  for (int c = 0; c < kRefineCandidates && c < static_cast<int>(order.size()); ++c) {
    Point p = nelder_mead_max(f, grid[order[c]], step);
    p = nelder_mead_max(f, p, step * 1e-2);
    if (p.value > best.value) best = p;
  }
  return {best.value, grid_best.value, best.theta, best.phi};
}

double classical_correlation_J(const DensityMatrix& rho_ab) {
  return classical_correlation_search(rho_ab).value;
}

CorrelationSet correlation_set(const DensityMatrix& rho_ab) {
  require_bipartite(rho_ab, "correlation_set");
  const double s_ab = von_neumann_entropy(rho_ab);
  const double s_a = von_neumann_entropy(rho_ab.reduced({0}));
  const double s_b = von_neumann_entropy(rho_ab.reduced({1}));
  CorrelationSet out{s_ab - s_b, s_a + s_b - s_ab, std::nullopt, std::nullopt};
  if (rho_ab.dims()[0] == 2 && rho_ab.dims()[1] == 2) {
    const double j = classical_correlation_J(rho_ab);
    out.classical_correlation = j;
    out.discord = out.mutual_information - j;
  }
  return out;
}

ConcurrenceValue concurrence(const DensityMatrix& rho_ab) {
  require_two_qubits(rho_ab, "concurrence");
  const ComplexMatrix& rho = rho_ab.matrix();
  // sigma_y (x) sigma_y
  const ComplexMatrix yy{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
  const ComplexMatrix flipped = yy * rho.conjugate() * yy;
  // The eigenvalues of rho * flipped equal those of the Hermitian matrix
  // sqrt(rho) flipped sqrt(rho).
  const ComplexMatrix root = apply_spectral(rho, [](double x) { return std::sqrt(std::max(x, 0.0)); });
  ComplexMatrix r = root * flipped * root;
  r = (r + r.adjoint()) * Complex(0.5);
  std::vector<double> ev = hermitian_eigenvalues(r);
  std::vector<double> s(ev.size());
  for (std::size_t k = 0; k < ev.size(); ++k) s[k] = std::sqrt(std::max(ev[k], 0.0));
  std::sort(s.begin(), s.end(), std::greater<>());
  const double c = s[0] - s[1] - s[2] - s[3];
  return {std::clamp(c, 0.0, 1.0)};
}

}  // namespace cohlab
