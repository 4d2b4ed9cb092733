#include "transversal/module_ops.hpp"

#include <algorithm>

namespace transversal {

namespace {

std::vector<FreeModuleElem> normalize_rows(const RingPtr& ring, std::size_t rank,
                                           std::vector<FreeModuleElem> rows, bool dropZero)
{
    std::vector<FreeModuleElem> out;
    for (auto& r : rows) {
        if (r.rank() != rank)
            throw DimensionError("module element rank mismatch");
        require_same_ring(r.ring(), ring, "module presentation");
        FreeModuleElem red = reduce_mod_ring(r);
        if (dropZero && red.is_zero())
            continue;
        if (std::find(out.begin(), out.end(), red) == out.end())
            out.push_back(std::move(red));
    }
    return out;
}

}  // namespace

ModulePresentation ModulePresentation::submodule(const RingPtr& ring, std::size_t rank,
                                                 std::vector<FreeModuleElem> gens)
{
    ModulePresentation m;
    m.ring = ring;
    m.ambientRank = rank;
    m.generators = normalize_rows(ring, rank, std::move(gens), true);
    return m;
}

ModulePresentation ModulePresentation::cokernel(const RingPtr& ring, std::size_t rank,
                                                std::vector<FreeModuleElem> relations)
{
    ModulePresentation m;
    m.ring = ring;
    m.ambientRank = rank;
    for (std::size_t i = 0; i < rank; ++i)
        m.generators.push_back(FreeModuleElem::basis(ring, rank, i));
    m.relations = normalize_rows(ring, rank, std::move(relations), true);
    return m;
}

ModulePresentation ModulePresentation::free_module(const RingPtr& ring, std::size_t rank)
{
    return cokernel(ring, rank, {});
}

ModulePresentation ModulePresentation::ring_as_module(const RingPtr& ring)
{
    return free_module(ring, 1);
}

ModulePresentation ModulePresentation::ideal_as_module(const IdealHandle& I)
{
    std::vector<FreeModuleElem> gens;
    for (const auto& f : I.generators())
        gens.push_back(FreeModuleElem::from_polynomial(f));
    return submodule(I.ring(), 1, std::move(gens));
}

void ModulePresentation::validate() const
{
    if (relations.empty())
        return;
    for (const auto& r : relations)
        if (!module_membership(r, generators, ring, ambientRank))
            throw RepresentationError("module relation lies outside the generator span");
}

ModuleOrder default_module_order(const RingPtr& ring)
{
    return ModuleOrder{ring->default_order(), ModuleOrder::Style::PositionOverTerm};
}

GroebnerBasis span_groebner(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                            std::size_t rank)
{
    return buchberger_module(gens, ring, rank, default_module_order(ring));
}

bool module_membership(const FreeModuleElem& e, const std::vector<FreeModuleElem>& gens,
                       const RingPtr& ring, std::size_t rank)
{
    GroebnerBasis gb = span_groebner(gens, ring, rank);
    return normal_form(e, gb).is_zero();
}

bool submodule_equal(const std::vector<FreeModuleElem>& a, const std::vector<FreeModuleElem>& b,
                     const RingPtr& ring, std::size_t rank)
{
    return span_groebner(a, ring, rank).elements == span_groebner(b, ring, rank).elements;
}

bool submodule_contains(const std::vector<FreeModuleElem>& big,
                        const std::vector<FreeModuleElem>& small, const RingPtr& ring,
                        std::size_t rank)
{
    GroebnerBasis gb = span_groebner(big, ring, rank);
    for (const auto& e : small)
        if (!normal_form(e, gb).is_zero())
            return false;
    return true;
}

ModulePresentation module_intersection(const ModulePresentation& U, const ModulePresentation& V)
{
    require_same_ring(U.ring, V.ring, "module_intersection");
    if (U.ambientRank != V.ambientRank)
        throw DimensionError("module_intersection: ambient ranks differ");
    if (!U.is_submodule() || !V.is_submodule())
        throw RepresentationError(
            "module_intersection is defined for submodule presentations only");

    const RingPtr& ring = U.ring;
    const std::size_t rank = U.ambientRank;
    RingPtr amb = ring->ambient();

    // tag ring QQ[@w, x...] with an elimination order; TOP style so a
    // @w-free lead forces a @w-free element across components
    std::vector<std::string> vars;
    vars.push_back("@w");
    for (const auto& v : amb->variables())
        vars.push_back(v);
    RingPtr ext = RingDescriptor::make(vars, TermOrder::block_elimination(1));
    std::vector<int> inMap(amb->nvars());
    for (std::size_t i = 0; i < amb->nvars(); ++i)
        inMap[i] = static_cast<int>(i) + 1;
    Polynomial w = Polynomial::variable(ext, 0);
    Polynomial oneMinusW = Polynomial::constant(ext, Rational(1)) - w;

    auto lift_row = [&](const FreeModuleElem& e, const Polynomial& factor) {
        FreeModuleElem r(ext, rank);
        for (std::size_t c = 0; c < rank; ++c)
            r[c] = lift_to_ambient(e[c]).map_variables(ext, inMap) * factor;
        return r;
    };

    std::vector<FreeModuleElem> gens;
    for (const auto& u : U.generators)
        gens.push_back(lift_row(u, w));
    for (const auto& v : V.generators)
        gens.push_back(lift_row(v, oneMinusW));
    for (const auto& q : ring->quotient_relations()) {
        Polynomial qe = q.map_variables(ext, inMap);
        for (std::size_t c = 0; c < rank; ++c) {
            FreeModuleElem row(ext, rank);
            row[c] = qe;
            gens.push_back(std::move(row));
        }
    }

    ModuleOrder ord{TermOrder::block_elimination(1), ModuleOrder::Style::TermOverPosition};
    GroebnerBasis gb = buchberger_module(gens, ext, rank, ord);

    std::vector<int> outMap(ext->nvars());
    outMap[0] = -1;
    for (std::size_t i = 1; i < ext->nvars(); ++i)
        outMap[i] = static_cast<int>(i) - 1;

    std::vector<FreeModuleElem> result;
    for (const auto& e : gb.elements) {
        FreeModuleElem back(ring, rank);
        bool ok = true;
        for (std::size_t c = 0; c < rank && ok; ++c) {
            auto restricted = e[c].try_restrict(amb, outMap);
            if (!restricted)
                ok = false;
            else
                back[c] = project_to_ring(*restricted, ring);
        }
        if (ok)
            result.push_back(std::move(back));
    }
    return ModulePresentation::submodule(ring, rank, std::move(result));
}

ModulePresentation scale_module(const IdealHandle& I, const ModulePresentation& M)
{
    require_same_ring(I.ring(), M.ring, "scale_module");
    std::vector<FreeModuleElem> gens;
    for (const auto& f : I.generators())
        for (const auto& g : M.generators)
            gens.push_back(g.scaled(f));
    ModulePresentation r;
    r.ring = M.ring;
    r.ambientRank = M.ambientRank;
    r.generators = normalize_rows(M.ring, M.ambientRank, std::move(gens), true);
    r.relations = M.relations;
    return r;
}

ModulePresentation module_sum(const ModulePresentation& U, const ModulePresentation& V)
{
    require_same_ring(U.ring, V.ring, "module_sum");
    if (U.ambientRank != V.ambientRank)
        throw DimensionError("module_sum: ambient ranks differ");
    if (!U.is_submodule() || !V.is_submodule())
        throw RepresentationError("module_sum is defined for submodule presentations only");
    std::vector<FreeModuleElem> gens = U.generators;
    gens.insert(gens.end(), V.generators.begin(), V.generators.end());
    return ModulePresentation::submodule(U.ring, U.ambientRank, std::move(gens));
}

std::vector<FreeModuleElem> kernel_of_list(const std::vector<FreeModuleElem>& list,
                                           const RingPtr& ring, std::size_t rank)
{
    RingPtr amb = ring->ambient();
    std::vector<FreeModuleElem> lifted;
    lifted.reserve(list.size() + ring->quotient_relations().size() * rank);
    for (const auto& e : list) {
        if (e.rank() != rank)
            throw DimensionError("kernel_of_list: rank mismatch");
        lifted.push_back(lift_to_ambient(e));
    }
    for (const auto& q : ring->quotient_relations()) {
        for (std::size_t c = 0; c < rank; ++c) {
            FreeModuleElem row(amb, rank);
            row[c] = q;
            lifted.push_back(std::move(row));
        }
    }

    ModuleOrder ord{ring->default_order(), ModuleOrder::Style::PositionOverTerm};
    std::vector<FreeModuleElem> syz = syzygy_generators(lifted, amb, rank, ord);

    std::vector<FreeModuleElem> rows;
    for (const auto& s : syz) {
        FreeModuleElem row(ring, list.size());
        for (std::size_t i = 0; i < list.size(); ++i)
            row[i] = reduce_mod_ring(project_to_ring(s[i], ring));
        if (!row.is_zero())
            rows.push_back(std::move(row));
    }
    return rows;
}

ModulePresentation syzygy_module(const GroebnerBasis& G)
{
    std::vector<FreeModuleElem> list;
    list.reserve(G.elements.size());
    for (const auto& e : G.elements) {
        FreeModuleElem back(G.ring, G.rank);
        for (std::size_t c = 0; c < G.rank; ++c)
            back[c] = reduce_mod_ring(project_to_ring(e[c], G.ring));
        list.push_back(std::move(back));
    }
    auto rows = kernel_of_list(list, G.ring, G.rank);
    return ModulePresentation::submodule(G.ring, list.size(), std::move(rows));
}

FreeCover free_cover(const ModulePresentation& M)
{
    FreeCover cover;
    cover.ring = M.ring;
    cover.rank = M.generators.size();
    if (cover.rank == 0)
        return cover;

    std::vector<long> weights(M.ring->nvars(), 1);
    bool homogeneous = true;
    std::vector<long> shifts;
    for (const auto& g : M.generators) {
        long d = -1;
        for (std::size_t c = 0; c < g.rank(); ++c) {
            for (const auto& [m, coeff] : g[c].terms()) {
                long md = m.weighted_degree(weights);
                if (d == -1)
                    d = md;
                else if (d != md)
                    homogeneous = false;
            }
        }
        shifts.push_back(d < 0 ? 0 : d);
    }
    if (homogeneous)
        cover.shifts = std::move(shifts);

    std::vector<FreeModuleElem> list = M.generators;
    list.insert(list.end(), M.relations.begin(), M.relations.end());
    if (list.empty())
        return cover;

    auto rows = kernel_of_list(list, M.ring, M.ambientRank);
    for (const auto& r : rows) {
        FreeModuleElem head(M.ring, cover.rank);
        bool nonzero = false;
        for (std::size_t i = 0; i < cover.rank; ++i) {
            head[i] = r[i];
            nonzero = nonzero || !r[i].is_zero();
        }
        if (nonzero)
            cover.kernel.push_back(std::move(head));
    }
    return cover;
}

}  // namespace transversal
