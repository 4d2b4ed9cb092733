#pragma once

#include "transversal/rees.hpp"

namespace transversal {

struct TorResult {
    int index = 1;
    ModulePresentation presentation;
    bool isZero = true;
    GradedDims gradedDims;  // internal degree -> dim, homogeneous case only
};

/// Tor_1(A/I, X) = (K cap I.F0) / (I.K) for a free cover F0 -> X with
/// kernel K. Exact over quotient rings: every step is an A-module
/// operation on presentations, so this is Tor over A, not over QQ[x].
TorResult tor1(const IdealHandle& I, const ModulePresentation& X, long dmax);

/// Tor_2(A/I, A/J) via the dimension shift Tor_2(A/I, A/J) =
/// Tor_1(A/J, I-as-module).
TorResult tor2_cyclic(const IdealHandle& I, const IdealHandle& J, long dmax);

/// Independent route for cyclic arguments: graded dims of (I cap J)/(I.J).
GradedDims tor1_shortcut_oracle(const IdealHandle& I, const IdealHandle& J, long dmax);

/// Graded dims of X tensor_A Y from the block presentation
/// (F_X tensor F_Y) / (K_X tensor F_Y + F_X tensor K_Y).
GradedDims tensor_presentation_dims(const ModulePresentation& X, const ModulePresentation& Y,
                                    long dmax);

}  // namespace transversal
