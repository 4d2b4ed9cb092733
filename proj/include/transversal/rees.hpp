#pragma once

#include "transversal/graded.hpp"

namespace transversal {

/// Defining data of a Rees / multi-Rees / associated-graded object: an
/// ideal in the extended free ring QQ[x.., T..] carrying per-variable
/// (internal degree, T-degree) weights. Base variables have T-degree 0.
struct BigradedIdealHandle {
    RingPtr baseRing;                     // possibly a quotient ring
    RingPtr extendedRing;                 // free: base variables then T blocks
    std::size_t baseVars = 0;
    std::vector<std::string> tVariables;  // one block (Rees) or U-block + V-block
    std::size_t uBlockSize = 0;           // = tVariables.size() in the one-block case
    std::vector<long> internalDegree;     // per extended-ring variable
    std::vector<long> tDegree;            // 1 on the T block(s), 0 on base
    std::vector<long> uDegree, vDegree;   // two-block case only
    IdealHandle definingIdeal;            // in extendedRing

    TermOrder tdeg_first_order() const
    {
        return TermOrder::tdegree_first(static_cast<int>(baseVars),
                                        static_cast<int>(baseVars + tVariables.size()));
    }
    long tdeg_of(const Monomial& m) const { return m.weighted_degree(tDegree); }
    long tdeg_of(const Polynomial& p) const;  // -1 for zero; requires tdeg-homogeneous
};

/// Kernel of QQ[x, T1..Tr] -> A[t*s], Ti -> fi*s, by eliminating the
/// tag variable; graded by T-degree.
BigradedIdealHandle rees_ideal(const IdealHandle& I);

/// Two tag variables, (u, v)-bigraded.
BigradedIdealHandle multi_rees_ideal(const IdealHandle& I, const IdealHandle& J);

/// Rees data with the base ideal appended: presents gr_I(A).
BigradedIdealHandle assoc_graded_presentation(const IdealHandle& I);

/// T-degree Hilbert function of the graded quotient (finite pieces
/// required; base variables must be nilpotent in the quotient).
GradedDims bigraded_quotient_tdeg_dims(const BigradedIdealHandle& H, long maxTdeg);

struct RelationTypeResult {
    int rt = 1;
    std::vector<int> minimalGeneratorTDegrees;  // sorted multiset, may include 0
    GradedDims effectiveDims;                   // key (n, d): E_n in internal degree d
    int truncationBound = 0;                    // 0 = exact (one-shot elimination)
    bool stabilized = true;
};

/// Least r >= 1 with the defining ideal generated in T-degrees <= r.
RelationTypeResult relation_type(const IdealHandle& I, long dmax = 10);

/// Module case: degreewise kernels up to `tdegBound`, stabilization
/// detected by two consecutive vanishing effective-relation slices.
RelationTypeResult relation_type(const IdealHandle& I, const ModulePresentation& M, int tdegBound,
                                 long dmax = 10);

/// Presentation of R_I(M) over the extended ring, truncated at
/// `tdegBound`: cover basis in T-degree 0, relations = kernel slices.
ModulePresentation rees_module_ideal(const IdealHandle& I, const ModulePresentation& M,
                                     int tdegBound, BigradedIdealHandle* contextOut = nullptr);

/// Graded dims of E(I)_n = Q_n / (T).Q_{n-1} in coefficient degrees
/// <= dmax (module GB quotient in the slot representation).
GradedDims effective_relations_dims(const IdealHandle& I, int n, long dmax);
GradedDims effective_relations_dims(const IdealHandle& I, const ModulePresentation& M, int n,
                                    long dmax);

/// Generation profile of an arbitrary T-homogeneous ideal in the
/// extended ring: (bound, multiset of irredundant generator T-degrees).
std::pair<int, std::vector<int>> tdeg_generation_profile(const IdealHandle& Q,
                                                         const BigradedIdealHandle& context);

}  // namespace transversal
