#pragma once

#include <string>

#include "transversal/polynomial.hpp"

namespace transversal {

/// Text form `3/2*x^2*y - z + 1`: `^` for powers, explicit `*` between
/// factors, variables are declared identifiers. print/parse round-trip
/// exactly.
std::string print_polynomial(const Polynomial& p);

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace transversal
