#pragma once

// Umbrella header for the entangle library: schemes of spatially deformed
// qubits, sLOCC post-selection, the catalog of reference schemes, the
// brute-force first-quantization cross-check, and the weight optimizer.

#include "catalog.hpp"
#include "core.hpp"
#include "first_quantized.hpp"
#include "matrix.hpp"
#include "optimize.hpp"
#include "scheme.hpp"
#include "scheme_json.hpp"
#include "slocc.hpp"
