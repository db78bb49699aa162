#pragma once

// Umbrella header. The JSON layer (mclag/json_io.hpp) is kept separate so
// library users do not pay for the vendored json header.

#include "mclag/abelian_group.hpp"
#include "mclag/chain_complex.hpp"
#include "mclag/coinvariants.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/johnson.hpp"
#include "mclag/presentations.hpp"
#include "mclag/reports.hpp"
#include "mclag/smith.hpp"
#include "mclag/symplectic.hpp"
