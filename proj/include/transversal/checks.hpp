#pragma once

#include <optional>
#include <string>

#include "transversal/tor.hpp"

namespace transversal {

struct CheckOptions {
    int pmax = 3;
    int qmax = 3;
    int nmax = 6;
    long dmax = 10;
    int jobs = 1;
};

struct Witness {
    int p = -1;
    int q = -1;
    int n = -1;
    int degree = -1;
    std::string mismatch;
};

/// Honest bounded verdict: HOLDS_UP_TO_BOUND never asserts the
/// unbounded statement; FAILS always carries a witness.
struct CheckVerdict {
    enum class Status { HOLDS_UP_TO_BOUND, FAILS, HYPOTHESIS_VIOLATED };
    Status status = Status::HOLDS_UP_TO_BOUND;
    CheckOptions bounds;
    std::optional<Witness> witness;
    GradedDims leftEvidence;
    GradedDims rightEvidence;
    std::string note;

    bool holds() const { return status == Status::HOLDS_UP_TO_BOUND; }
};

const char* to_string(CheckVerdict::Status s);

/// I^p M cap J^q M = I^p J^q M for 1 <= p <= pmax, 1 <= q <= qmax.
CheckVerdict check_intersection_condition(const IdealHandle& I, const IdealHandle& J,
                                          const ModulePresentation& M, const CheckOptions& opts);

/// Graded-dimension comparison of multigr_{I,J}(M) against gr_{I+J}(M)
/// in total degrees <= nmax: the natural surjection is an isomorphism
/// up to the bound iff the finite dims agree.
CheckVerdict check_sigma_iso(const IdealHandle& I, const IdealHandle& J,
                             const ModulePresentation& M, const CheckOptions& opts);

/// Bidegree comparison of gr_I(A)_p tensor gr_J(M)_q against the
/// multigraded piece (p, q).
CheckVerdict check_pi_iso(const IdealHandle& I, const IdealHandle& J, const ModulePresentation& M,
                          const CheckOptions& opts);

struct TransversalityReport {
    CheckVerdict conditionI;   // phi-bar iso, via pi-bar and sigma-bar
    CheckVerdict conditionII;  // Tor_1 vanishing, both Rees and graded arguments
    bool agree = false;        // both hold or both fail
};

TransversalityReport check_transversality(const IdealHandle& I, const IdealHandle& J,
                              const ModulePresentation& M, const CheckOptions& opts);

struct Tor2ClauseReport {
    CheckVerdict torSide;  // Tor_1 and Tor_2 of the cyclic pair vanish
    CheckVerdict phiSide;  // gr_I tensor gr_J -> gr_{I+J} iso dims
    bool agree = false;
};

Tor2ClauseReport check_tor2_clause(const IdealHandle& I, const IdealHandle& J,
                                   const CheckOptions& opts);

/// rt(I+J; M) <= max(rt(I), rt(J; M)), hypotheses first.
CheckVerdict check_rt_tensor_bound(const IdealHandle& I, const IdealHandle& J,
                                   const ModulePresentation& M, const CheckOptions& opts);

/// Bounded hypothesis check for the flatness criterion: graded pieces
/// of gr_p free over A/p (proxy: minimal covers are relation-free) and
/// the images of xs regular in A/p; then the transversality conclusion.
CheckVerdict check_flatness_criterion(const IdealHandle& p, const std::vector<Polynomial>& xs,
                                      const ModulePresentation& M, const CheckOptions& opts);

/// I^n M / I^{n+1} M as a subquotient presentation.
ModulePresentation gr_piece(const IdealHandle& I, const ModulePresentation& M, int n);

/// dims per internal degree of I^p J^q M / (I+J) I^p J^q M.
std::vector<long> multigr_piece_dims(const IdealHandle& I, const IdealHandle& J,
                                     const ModulePresentation& M, int p, int q, long dmax);

}  // namespace transversal
