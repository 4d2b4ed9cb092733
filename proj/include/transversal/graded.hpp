#pragma once

#include <map>

#include "transversal/module_ops.hpp"

namespace transversal {

/// Finitely supported degree -> dimension table. Keys are 1-, 2- or
/// 3-entry tuples; an absent key within the computed bound means 0.
struct GradedDims {
    std::map<std::vector<int>, long> table;

    long at(std::vector<int> key) const
    {
        auto it = table.find(key);
        return it == table.end() ? 0 : it->second;
    }
    void set(std::vector<int> key, long v)
    {
        if (v != 0)
            table[std::move(key)] = v;
    }
    bool all_zero() const { return table.empty(); }
    bool operator==(const GradedDims&) const = default;

    static GradedDims from_vector(const std::vector<long>& dims)
    {
        GradedDims g;
        for (std::size_t d = 0; d < dims.size(); ++d)
            g.set({static_cast<int>(d)}, dims[d]);
        return g;
    }
};

/// Weighted grading: degree of c * x^a * e_j is sum(a_i * varWeights_i)
/// + slotShifts_j.
struct Grading {
    std::vector<long> varWeights;
    std::vector<long> slotShifts;

    static Grading standard(const RingPtr& ring, std::size_t rank = 1)
    {
        return Grading{std::vector<long>(ring->nvars(), 1), std::vector<long>(rank, 0)};
    }

    long degree_of(const Monomial& m, std::size_t slot = 0) const
    {
        return m.weighted_degree(varWeights) + slotShifts[slot];
    }
    bool is_homogeneous(const FreeModuleElem& e) const;
    bool is_homogeneous(const Polynomial& p) const;
    /// Degree of a homogeneous element; -1 for zero.
    long degree_of(const FreeModuleElem& e) const;
};

void require_homogeneous(const std::vector<FreeModuleElem>& elems, const Grading& g,
                         const char* what);

/// dim_QQ of each weighted-degree piece of span(gens) (plus the ring's
/// quotient rows) inside ring^rank, degrees 0..maxDeg. Requires
/// positive variable weights and homogeneous input.
std::vector<long> submodule_dims(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                 std::size_t rank, const Grading& grading, long maxDeg);

/// dim_QQ of each piece of ring^rank / span(gens). Weight-0 variables
/// are allowed when they are nilpotent in the quotient; otherwise an
/// InfiniteDimensionError is raised.
std::vector<long> quotient_dims(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                std::size_t rank, const Grading& grading, long maxDeg);

/// dims of a subquotient: (span(gens)+span(rels))_d - (span(rels))_d.
std::vector<long> presentation_dims(const ModulePresentation& M, const Grading& grading,
                                    long maxDeg);

/// Hilbert function of A/I (leading-term counting in the ambient ring).
GradedDims hilbert_dims(const IdealHandle& I, long maxDeg);
/// Hilbert function of a subquotient module.
GradedDims hilbert_dims(const ModulePresentation& M, long maxDeg);

}  // namespace transversal
