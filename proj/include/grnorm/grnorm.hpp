#pragma once

// Umbrella header: exact normalization chains for algebroid curve branches
// given by power-series parametrizations.

#include "ade.hpp"
#include "commands.hpp"
#include "curve_spec.hpp"
#include "diagram.hpp"
#include "errors.hpp"
#include "lattice.hpp"
#include "normalization.hpp"
#include "rational.hpp"
#include "report.hpp"
#include "ring_model.hpp"
#include "semigroup.hpp"
#include "series.hpp"
