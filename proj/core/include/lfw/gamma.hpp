#pragma once

#include <complex>

namespace lfw {

using cplx = std::complex<double>;

// Complex log-gamma on the standard branch (imaginary part continuous in the
// right half-plane, real-valued on the positive axis). Lanczos (g = 7, nine
// terms) for |z| < 15, Stirling with ten Bernoulli corrections beyond, and
// reflection for Re z <= 0. Throws a pole error at nonpositive integers.
cplx log_gamma(cplx z);

// Stirling branch alone; exposed for cross-checking the Lanczos branch.
cplx log_gamma_stirling(cplx z);
cplx log_gamma_lanczos(cplx z);

// log sin z and log cos z computed from exponentials so that large |Im z|
// does not overflow. Any branch of the logarithm may be returned.
cplx log_sin(cplx z);
cplx log_cos(cplx z);

}  // namespace lfw
