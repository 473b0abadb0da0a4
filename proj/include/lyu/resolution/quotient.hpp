#pragma once

#include "lyu/algebra/field.hpp"
#include "lyu/ideal/ideal.hpp"
#include "lyu/resolution/resolution.hpp"

namespace lyu {

/// Betti table, Hilbert series, dimension and depth of R/I from its minimal
/// free resolution (Groebner/Schreyer route).
ResolutionSummary resolve_quotient(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// Betti table of R/I from the minimalized Taylor complex.
BettiTable taylor_betti(const MonomialIdeal& ideal, const FieldSpec& field = {});

/// depth R/I = n - pd R/I.
int depth_ab(const MonomialIdeal& ideal, const FieldSpec& field = {});

}  // namespace lyu
