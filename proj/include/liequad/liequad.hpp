#pragma once

// Umbrella header: split simple Lie algebras over the exact rationals,
// their irreducible highest-weight representations, the equivariant
// projector on End(V) with its Casimir tensor, and the quadratic
// equations cutting out highest-weight orbit closures.

#include "liequad/casimir.hpp"
#include "liequad/checks.hpp"
#include "liequad/homvariety.hpp"
#include "liequad/hwmodule.hpp"
#include "liequad/liealgebra.hpp"
#include "liequad/rational.hpp"
#include "liequad/rmatrix.hpp"
#include "liequad/rootdata.hpp"
#include "liequad/sampling.hpp"
