#pragma once

// Test-only reference computations; the elimination oracle lives in
// gorwb/oracle.hpp so the suite runner can use it too.

#include <cstdint>

#include "gorwb/oracle.hpp"

namespace gorwb::oracle {

/// Number of F_2 matrices X with X rho_m(b) = rho_n(b) X for every algebra
/// basis element b, by exhaustive enumeration (dim m * dim n <= 20).
template <class ModuleT>
std::size_t bruteForceHomCountF2(const ModuleT& m, const ModuleT& n) {
  const std::size_t dm = m.dim(), dn = n.dim(), cells = dm * dn;
  const Field f(2);
  std::size_t count = 0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cells); ++bits) {
    Mat x(f, dn, dm);
    for (std::size_t c = 0; c < cells; ++c)
      if (bits >> c & 1) x.set(c / dm, c % dm, 1);
    bool ok = true;
    for (std::size_t b = 0; b < m.actions().size() && ok; ++b) ok = x * m.action(b) == n.action(b) * x;
    if (ok) ++count;
  }
  return count;
}

}  // namespace gorwb::oracle
