#pragma once

// Umbrella header: the full library except the command-line front end.

#include "polydecomp/decomp/decomposition.hpp"
#include "polydecomp/decomp/field.hpp"
#include "polydecomp/decomp/monic.hpp"
#include "polydecomp/decomp/quartic.hpp"
#include "polydecomp/decomp/uniqueness.hpp"
#include "polydecomp/domains/integer.hpp"
#include "polydecomp/domains/order.hpp"
#include "polydecomp/domains/poly_t.hpp"
#include "polydecomp/domains/quadratic.hpp"
#include "polydecomp/domains/subring.hpp"
#include "polydecomp/errors.hpp"
#include "polydecomp/format.hpp"
#include "polydecomp/poly/coefficient.hpp"
#include "polydecomp/poly/degree.hpp"
#include "polydecomp/poly/polynomial.hpp"
#include "polydecomp/witness/witness.hpp"
