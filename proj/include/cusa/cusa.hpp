#pragma once

#include "cusa/acceleration.hpp"
#include "cusa/bracketing.hpp"
#include "cusa/constants.hpp"
#include "cusa/core_bounds.hpp"
#include "cusa/corpus.hpp"
#include "cusa/enclosure.hpp"
#include "cusa/integrals.hpp"
#include "cusa/means.hpp"
#include "cusa/quadrature.hpp"
#include "cusa/series.hpp"
#include "cusa/verifier.hpp"
