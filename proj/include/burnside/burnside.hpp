#pragma once

#include "burnside/exact.hpp"
#include "burnside/io.hpp"
#include "burnside/kernel.hpp"
#include "burnside/log_real.hpp"
#include "burnside/lumping.hpp"
#include "burnside/matrix.hpp"
#include "burnside/mixing.hpp"
#include "burnside/orthobasis.hpp"
#include "burnside/polynomials.hpp"
#include "burnside/sampler.hpp"
#include "burnside/spectral.hpp"
#include "burnside/state.hpp"
#include "burnside/statistics.hpp"
#include "burnside/verifier.hpp"
