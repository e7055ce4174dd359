#pragma once

#include <vector>

namespace qf3 {

enum class BesselFamily { Y, K };

// Bessel Y_0..Y_2 / K_0..K_2, self-contained: ascending series below the
// switchover, Hankel-type asymptotic expansions above, order 2 by the
// three-term recurrence. Absolute error <= 1e-10 on [1e-3, 50].
double bessel(BesselFamily family, int order, double x);

// Max relative deviation of the derivative identity
// d/dx (x^{v+1} B_{v+1}(x)) = eps x^{v+1} B_v(x)  (eps = +1 for Y, -1 for K)
// on the grid, via central finite differences.
double check_recurrence(BesselFamily family, int order,
                        const std::vector<double>& grid);

}  // namespace qf3
