#pragma once

#include <complex>

namespace mollify {

// Principal branch of log Gamma(z), continued from the positive real axis.
// Throws PreconditionError at the poles z = 0, -1, -2, ...
std::complex<double> log_gamma(std::complex<double> z);

}  // namespace mollify
