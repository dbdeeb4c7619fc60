#pragma once

// Umbrella header: exact symbolic engine for twisted-Poisson (monopole)
// star products on T*R^3, truncated at third order in the deformation
// parameter.

#include "mstar/scalar.hpp"
#include "mstar/expr.hpp"
#include "mstar/parse.hpp"
#include "mstar/field.hpp"
#include "mstar/bidiff.hpp"
#include "mstar/cochain.hpp"
#include "mstar/series.hpp"
#include "mstar/star.hpp"
#include "mstar/associator.hpp"
#include "mstar/random.hpp"
#include "mstar/checks.hpp"
#include "mstar/report.hpp"
