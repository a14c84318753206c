#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynsamp/spectral.hpp"

namespace dynsamp {

/// Frequency-response symmetry classes on Z_d x Z_d (d odd), defined over
/// the symmetric index range I = {-(d-1)/2..(d-1)/2}^2.
enum class Symmetry2D { LInf, Quadrantal, Diagonal, Octagonal };

const char* to_string(Symmetry2D s);
Symmetry2D symmetry_from_string(const std::string& name);

struct SymmetryClass {
  Symmetry2D kind;
  int d;  // odd
};

/// Orbit partition of Z_d x Z_d under the class symmetry, as flat-index
/// classes sorted by smallest member (the level-partition convention).
/// Orbits are generated over I and canonicalized by their lexicographically
/// smallest member there; degenerate orbits (a coordinate zero, s = +-p)
/// collapse to size 1, 2 or 4 per the set-builder semantics.
std::vector<std::vector<int>> orbits(const SymmetryClass& sym);

/// Kernel whose symbol is constant on each orbit with pairwise-distinct
/// values across orbits (separated by >= 1000 * group_tol). Its level
/// partition equals orbits(sym) exactly.
Kernel random_symmetric_kernel(const SymmetryClass& sym, std::uint64_t seed,
                               double group_tol = kDefaultGroupTol);

/// 1D symbol that is symmetric (a(j) = a(d-j)) and strictly decreasing on
/// {0..(d-1)/2}; level sets are {0} and the pairs {j, d-j}.
Kernel monotone_symmetric_kernel_1d(int d);

}  // namespace dynsamp
