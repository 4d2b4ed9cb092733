#include "transversal/tor.hpp"

namespace transversal {

namespace {

std::vector<FreeModuleElem> ideal_rows(const IdealHandle& I, const RingPtr& ring, std::size_t rank)
{
    std::vector<FreeModuleElem> rows;
    for (const auto& f : I.generators()) {
        for (std::size_t j = 0; j < rank; ++j) {
            FreeModuleElem row(ring, rank);
            row[j] = f;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

GradedDims dims_if_homogeneous(const ModulePresentation& pres, const std::vector<long>& shifts,
                               long dmax)
{
    GradedDims out;
    if (shifts.size() != pres.ambientRank)
        return out;
    Grading grading{std::vector<long>(pres.ring->nvars(), 1), shifts};
    for (const auto& e : pres.generators)
        if (!grading.is_homogeneous(e))
            return out;
    for (const auto& e : pres.relations)
        if (!grading.is_homogeneous(e))
            return out;
    std::vector<long> dims = presentation_dims(pres, grading, dmax);
    for (std::size_t d = 0; d < dims.size(); ++d)
        out.set({static_cast<int>(d)}, dims[d]);
    return out;
}

}  // namespace

TorResult tor1(const IdealHandle& I, const ModulePresentation& X, long dmax)
{
    require_same_ring(I.ring(), X.ring, "tor1");
    const RingPtr& ring = X.ring;

    TorResult res;
    res.index = 1;

    FreeCover cover = free_cover(X);
    if (cover.rank == 0 || !I.has_generators()) {
        res.presentation = ModulePresentation::submodule(ring, std::max<std::size_t>(cover.rank, 1), {});
        return res;
    }

    auto K = ModulePresentation::submodule(ring, cover.rank, cover.kernel);
    auto IF0 = ModulePresentation::submodule(ring, cover.rank, ideal_rows(I, ring, cover.rank));
    ModulePresentation meet = module_intersection(K, IF0);

    std::vector<FreeModuleElem> IK;
    for (const auto& f : I.generators())
        for (const auto& k : K.generators)
            IK.push_back(k.scaled(f));

    ModulePresentation pres;
    pres.ring = ring;
    pres.ambientRank = cover.rank;
    pres.generators = meet.generators;
    pres.relations = ModulePresentation::submodule(ring, cover.rank, IK).generators;
    res.presentation = pres;

    res.isZero = pres.generators.empty() ||
                 submodule_contains(pres.relations, pres.generators, ring, cover.rank);
    res.gradedDims = dims_if_homogeneous(pres, cover.shifts, dmax);
    return res;
}

TorResult tor2_cyclic(const IdealHandle& I, const IdealHandle& J, long dmax)
{
    require_same_ring(I.ring(), J.ring(), "tor2_cyclic");
    TorResult res = tor1(J, ModulePresentation::ideal_as_module(I), dmax);
    res.index = 2;
    return res;
}

GradedDims tor1_shortcut_oracle(const IdealHandle& I, const IdealHandle& J, long dmax)
{
    require_same_ring(I.ring(), J.ring(), "tor1_shortcut_oracle");
    IdealHandle meet = ideal_intersection(I, J);
    IdealHandle prod = ideal_product(I, J);
    ModulePresentation pres;
    pres.ring = I.ring();
    pres.ambientRank = 1;
    pres.generators = ModulePresentation::ideal_as_module(meet).generators;
    pres.relations = ModulePresentation::ideal_as_module(prod).generators;
    GradedDims out = dims_if_homogeneous(pres, {0}, dmax);
    if (out.table.empty() && !pres.generators.empty()) {
        // distinguish "zero module" from "inhomogeneous input"
        Grading g = Grading::standard(I.ring());
        for (const auto& e : pres.generators)
            if (!g.is_homogeneous(e))
                throw HomogeneityError("tor1_shortcut_oracle: inhomogeneous input");
    }
    return out;
}

GradedDims tensor_presentation_dims(const ModulePresentation& X, const ModulePresentation& Y,
                                    long dmax)
{
    require_same_ring(X.ring, Y.ring, "tensor_presentation_dims");
    const RingPtr& ring = X.ring;
    FreeCover cx = free_cover(X);
    FreeCover cy = free_cover(Y);
    GradedDims out;
    if (cx.rank == 0 || cy.rank == 0)
        return out;
    if (cx.shifts.empty() || cy.shifts.empty())
        throw HomogeneityError("tensor_presentation_dims: inhomogeneous presentation");

    const std::size_t rank = cx.rank * cy.rank;
    std::vector<long> shifts(rank);
    for (std::size_t i = 0; i < cx.rank; ++i)
        for (std::size_t j = 0; j < cy.rank; ++j)
            shifts[i * cy.rank + j] = cx.shifts[i] + cy.shifts[j];

    std::vector<FreeModuleElem> rels;
    for (const auto& k : cx.kernel) {
        for (std::size_t j = 0; j < cy.rank; ++j) {
            FreeModuleElem row(ring, rank);
            for (std::size_t i = 0; i < cx.rank; ++i)
                row[i * cy.rank + j] = k[i];
            rels.push_back(std::move(row));
        }
    }
    for (std::size_t i = 0; i < cx.rank; ++i) {
        for (const auto& l : cy.kernel) {
            FreeModuleElem row(ring, rank);
            for (std::size_t j = 0; j < cy.rank; ++j)
                row[i * cy.rank + j] = l[j];
            rels.push_back(std::move(row));
        }
    }

    Grading grading{std::vector<long>(ring->nvars(), 1), shifts};
    for (const auto& r : rels)
        if (!grading.is_homogeneous(reduce_mod_ring(r)))
            throw HomogeneityError("tensor_presentation_dims: inhomogeneous relations");
    std::vector<FreeModuleElem> normalized;
    for (const auto& r : rels) {
        FreeModuleElem red = reduce_mod_ring(r);
        if (!red.is_zero())
            normalized.push_back(std::move(red));
    }
    return GradedDims::from_vector(quotient_dims(normalized, ring, rank, grading, dmax));
}

}  // namespace transversal
