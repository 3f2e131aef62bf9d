#pragma once

// Umbrella header: exact-arithmetic toolkit for submodular functions under
// symmetric-difference transformations — 2-face certificates, the mod-2
// characterization of submodularity-preserving shifts, canonical-set
// solving, and inseparable decompositions.

#include "sdt/adversary.hpp"
#include "sdt/canonical.hpp"
#include "sdt/classify.hpp"
#include "sdt/faces.hpp"
#include "sdt/ground_set.hpp"
#include "sdt/json_io.hpp"
#include "sdt/rational.hpp"
#include "sdt/set_function.hpp"
#include "sdt/structure.hpp"
#include "sdt/transform.hpp"
#include "sdt/zoo.hpp"
