#pragma once

#include "mumhodge/bigfloat.hpp"

namespace mumhodge {

// Constants are computed once per precision level and cached; the caches
// are safe to read from concurrent workers.
BigFloat const_pi(Precision prec);
BigFloat const_zeta3(Precision prec);

// 2*pi*i.
BigComplex two_pi_i(Precision prec);

// kappa = zeta(3) / (2*pi*i)^3 = i * zeta(3) / (8*pi^3); purely imaginary.
BigComplex kappa(Precision prec);

}  // namespace mumhodge
