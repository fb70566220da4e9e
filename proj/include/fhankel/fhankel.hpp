#pragma once

// Umbrella header: the whole library in one include.

#include "fhankel/version.hpp"
#include "fhankel/quaternion.hpp"
#include "fhankel/special.hpp"
#include "fhankel/quadrature.hpp"
#include "fhankel/kernels.hpp"
#include "fhankel/matrix.hpp"
#include "fhankel/operators.hpp"
#include "fhankel/spectral.hpp"
#include "fhankel/verify.hpp"
