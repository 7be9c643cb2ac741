#pragma once

// Umbrella header: exact plethystic Murnaghan-Nakayama expansions of
// symmetric functions via the determinant rule, vertex-operator
// straightening, and a character-table oracle.

#include "plethysm/bigint.hpp"
#include "plethysm/border_matrix.hpp"
#include "plethysm/engine.hpp"
#include "plethysm/partition.hpp"
#include "plethysm/rational.hpp"
#include "plethysm/strips.hpp"
#include "plethysm/symfunc.hpp"
#include "plethysm/verify.hpp"
