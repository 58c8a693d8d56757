#pragma once

#include "kfg/algebra.hpp"
#include "kfg/dirac.hpp"

namespace kfg {

/// Parses a signed sum of products of scalars and generators, e.g.
/// "e1*e2 - e2*e1", "2*e1", "(1/2-1i)*e1*e3 + 1". Generator products are
/// evaluated with the twisted product of alg. Reports positions on error.
Multivector parse_multivector(const std::string& src, AlgebraPtr alg);

/// Parses a quaternion-valued polynomial spinor, e.g.
/// "x1^2*e1 + 2*x2*x4*e3 - 1/2*x3". Components 1, e1, e2, e3; variables
/// x1..x4 with optional ^power.
PolySpinor parse_spinor(const std::string& src);

}  // namespace kfg
