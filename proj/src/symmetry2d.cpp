#include "dynsamp/symmetry2d.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace dynsamp {

const char* to_string(Symmetry2D s) {
  switch (s) {
    case Symmetry2D::LInf: return "linf";
    case Symmetry2D::Quadrantal: return "quadrantal";
    case Symmetry2D::Diagonal: return "diagonal";
    case Symmetry2D::Octagonal: return "octagonal";
  }
  return "unknown";
}

Symmetry2D symmetry_from_string(const std::string& name) {
  if (name == "linf") return Symmetry2D::LInf;
  if (name == "quadrantal") return Symmetry2D::Quadrantal;
  if (name == "diagonal") return Symmetry2D::Diagonal;
  if (name == "octagonal") return Symmetry2D::Octagonal;
  throw std::invalid_argument("unknown symmetry class: " + name);
}

namespace {

using Point = std::array<int, 2>;

std::vector<Point> orbit_of(Symmetry2D kind, int s, int p) {
  switch (kind) {
    case Symmetry2D::Quadrantal:
      return {{s, p}, {s, -p}, {-s, p}, {-s, -p}};
    case Symmetry2D::Diagonal:
      return {{p, s}, {s, p}, {-p, -s}, {-s, -p}};
    case Symmetry2D::Octagonal:
      return {{s, p}, {p, s}, {-p, s}, {-s, p}, {-s, -p}, {-p, -s}, {p, -s}, {s, -p}};
    case Symmetry2D::LInf:
      break;
  }
  throw std::logic_error("orbit_of: linf handled separately");
}

}  // namespace

std::vector<std::vector<int>> orbits(const SymmetryClass& sym) {
  if (sym.d < 1 || sym.d % 2 == 0)
    throw std::invalid_argument("symmetry orbits: d must be odd and positive");
  const int d = sym.d;
  const int h = (d - 1) / 2;
  const FiniteGroup g = make_group({d, d});
  auto to_flat = [&](const Point& q) {
    return g.flat(g.reduce(GroupIndex({q[0], q[1]})));
  };

  std::vector<std::vector<int>> classes;
  if (sym.kind == Symmetry2D::LInf) {
    classes.resize(h + 1);
    for (int s = -h; s <= h; ++s)
      for (int p = -h; p <= h; ++p)
        classes[std::max(std::abs(s), std::abs(p))].push_back(to_flat({s, p}));
  } else {
    std::set<Point> seen;
    for (int s = -h; s <= h; ++s) {
      for (int p = -h; p <= h; ++p) {
        if (seen.count({s, p})) continue;
        std::set<Point> orbit;
        for (const Point& q : orbit_of(sym.kind, s, p)) orbit.insert(q);
        std::vector<int> flats;
        for (const Point& q : orbit) {
          seen.insert(q);
          flats.push_back(to_flat(q));
        }
        classes.push_back(std::move(flats));
      }
    }
  }
  for (auto& c : classes) std::sort(c.begin(), c.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return classes;
}

Kernel random_symmetric_kernel(const SymmetryClass& sym, std::uint64_t seed, double group_tol) {
  const auto classes = orbits(sym);
  // Well above the 1000*group_tol floor: generous spacing keeps the
  // eigenvalue Vandermonde factors of downstream frame tests conditioned.
  const double separation = std::max(1000.0 * group_tol, 0.15);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto draw = [&] {
    while (true) {
      const Complex z(unit(rng), unit(rng));
      if (std::abs(z) <= 1.0) return z;
    }
  };

  std::vector<Complex> values(classes.size());
  for (auto& v : values) v = draw();
  // Redraw any value that lands within the separation of an earlier one.
  for (int rounds = 0; rounds < 10000; ++rounds) {
    bool clean = true;
    for (size_t a = 0; a < values.size() && clean; ++a)
      for (size_t b = a + 1; b < values.size(); ++b)
        if (std::abs(values[a] - values[b]) < separation) {
          values[b] = draw();
          clean = false;
          break;
        }
    if (clean) break;
  }

  const FiniteGroup g = make_group({sym.d, sym.d});
  CVector symbol(g.order());
  for (size_t c = 0; c < classes.size(); ++c)
    for (int idx : classes[c]) symbol(idx) = values[c];
  return kernel_from_frequency(g, std::move(symbol));
}

Kernel monotone_symmetric_kernel_1d(int d) {
  if (d < 1 || d % 2 == 0)
    throw std::invalid_argument("monotone symmetric kernel: d must be odd and positive");
  const FiniteGroup g = make_group({d});
  CVector symbol(d);
  for (int j = 0; j < d; ++j) symbol(j) = static_cast<double>(d - std::min(j, d - j));
  return kernel_from_frequency(g, std::move(symbol));
}

}  // namespace dynsamp
