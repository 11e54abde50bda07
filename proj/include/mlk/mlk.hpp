#pragma once

// Umbrella header: the full exact-arithmetic toolkit.

#include "mlk/bialgebra.hpp"
#include "mlk/bundle.hpp"
#include "mlk/defext.hpp"
#include "mlk/examples.hpp"
#include "mlk/errors.hpp"
#include "mlk/linalg.hpp"
#include "mlk/mocklie.hpp"
#include "mlk/nijenhuis.hpp"
#include "mlk/operators.hpp"
#include "mlk/rational.hpp"
#include "mlk/report.hpp"
#include "mlk/yangbaxter.hpp"
