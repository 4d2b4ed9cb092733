#pragma once

#include "transversal/ideal.hpp"

namespace transversal {

/// Finitely generated module as a subquotient of A^r: the span of
/// `generators` modulo the span of `relations`; relations must lie in
/// the span of the generators. Empty relations = plain submodule.
struct ModulePresentation {
    RingPtr ring;
    std::size_t ambientRank = 1;
    std::vector<FreeModuleElem> generators;
    std::vector<FreeModuleElem> relations;

    static ModulePresentation submodule(const RingPtr& ring, std::size_t rank,
                                        std::vector<FreeModuleElem> gens);
    static ModulePresentation cokernel(const RingPtr& ring, std::size_t rank,
                                       std::vector<FreeModuleElem> relations);
    static ModulePresentation free_module(const RingPtr& ring, std::size_t rank);
    static ModulePresentation ring_as_module(const RingPtr& ring);
    static ModulePresentation ideal_as_module(const IdealHandle& I);

    bool is_submodule() const { return relations.empty(); }
    /// Checks the relations-in-span invariant by module membership.
    void validate() const;
};

ModuleOrder default_module_order(const RingPtr& ring);

/// Reduced module GB of span(gens) inside ring^rank.
GroebnerBasis span_groebner(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                            std::size_t rank);

bool module_membership(const FreeModuleElem& e, const std::vector<FreeModuleElem>& gens,
                       const RingPtr& ring, std::size_t rank);
bool submodule_equal(const std::vector<FreeModuleElem>& a, const std::vector<FreeModuleElem>& b,
                     const RingPtr& ring, std::size_t rank);
bool submodule_contains(const std::vector<FreeModuleElem>& big,
                        const std::vector<FreeModuleElem>& small, const RingPtr& ring,
                        std::size_t rank);

/// U and V as submodules of a common A^r (relations must be empty).
ModulePresentation module_intersection(const ModulePresentation& U, const ModulePresentation& V);

/// I * M: generators scaled by the ideal generators, relations kept.
ModulePresentation scale_module(const IdealHandle& I, const ModulePresentation& M);
ModulePresentation module_sum(const ModulePresentation& U, const ModulePresentation& V);

/// Generators of all relations among `list` over the (possibly
/// quotient) ring: Schreyer-style syzygies computed in the ambient
/// ring with the quotient rows appended, projected back.
std::vector<FreeModuleElem> kernel_of_list(const std::vector<FreeModuleElem>& list,
                                           const RingPtr& ring, std::size_t rank);

/// First syzygies of the basis elements, as a submodule of A^{#elements}.
ModulePresentation syzygy_module(const GroebnerBasis& G);

/// Free cover A^g -> M (g = #generators) together with its kernel.
struct FreeCover {
    RingPtr ring;
    std::size_t rank = 0;       // g
    std::vector<long> shifts;   // generator degrees (empty if inhomogeneous)
    std::vector<FreeModuleElem> kernel;
};
FreeCover free_cover(const ModulePresentation& M);

}  // namespace transversal
