#pragma once

#include <complex>

#include "mollify/kloosterman.hpp"

namespace oracle {

// Coefficient-outermost loop order, inverses by exhaustive search and
// phases from std::polar on the reduced fraction.
std::complex<double> naive_trilinear(const mollify::TrilinearInstance& inst);

// Direct exponential sum with inverses by exhaustive search.
std::complex<double> naive_kloosterman(long a, long b, long c);

}  // namespace oracle
