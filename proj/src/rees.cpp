#include "transversal/rees.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace transversal {

namespace {

std::vector<std::string> fresh_names(const RingPtr& base, const std::string& stem, std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
        std::string name = stem + std::to_string(i);
        while (base->variable_index(name) >= 0)
            name = "@" + name;
        names.push_back(name);
    }
    return names;
}

struct ExtendedSetup {
    RingPtr ext;             // QQ[x.., T..]
    std::vector<int> inMap;  // base var -> ext index
};

ExtendedSetup make_extended(const RingPtr& baseAmbient, const std::vector<std::string>& tNames)
{
    std::vector<std::string> vars = baseAmbient->variables();
    vars.insert(vars.end(), tNames.begin(), tNames.end());
    ExtendedSetup s;
    s.ext = RingDescriptor::make(std::move(vars));
    s.inMap.resize(baseAmbient->nvars());
    for (std::size_t i = 0; i < baseAmbient->nvars(); ++i)
        s.inMap[i] = static_cast<int>(i);
    return s;
}

BigradedIdealHandle make_context(const IdealHandle& I, const std::string& stem)
{
    const RingPtr base = I.ring();
    const RingPtr amb = base->ambient();
    const std::size_t r = I.generators().size();

    BigradedIdealHandle H;
    H.baseRing = base;
    H.baseVars = amb->nvars();
    H.tVariables = fresh_names(amb, stem, r);
    H.uBlockSize = r;
    ExtendedSetup setup = make_extended(amb, H.tVariables);
    H.extendedRing = setup.ext;

    H.internalDegree.assign(H.extendedRing->nvars(), 1);
    H.tDegree.assign(H.extendedRing->nvars(), 0);
    for (std::size_t i = 0; i < r; ++i) {
        H.internalDegree[H.baseVars + i] = std::max<long>(I.generators()[i].degree(), 0);
        H.tDegree[H.baseVars + i] = 1;
    }
    H.definingIdeal = IdealHandle::zero(H.extendedRing);
    return H;
}

// Kernel of QQ[tags, x, T] -> images, computed by eliminating the tag
// block; `images[i]` is the image of T-variable i as tag * generator.
std::vector<Polynomial> eliminate_tags(const RingPtr& baseAmbient,
                                       const std::vector<Polynomial>& quotientRelations,
                                       const std::vector<std::string>& tNames,
                                       std::size_t nTags,
                                       const std::vector<std::pair<std::size_t, Polynomial>>&
                                           tagOfVar,  // (tag index, base generator)
                                       const RingPtr& extRing)
{
    std::vector<std::string> vars;
    for (std::size_t a = 0; a < nTags; ++a)
        vars.push_back("@tag" + std::to_string(a + 1));
    for (const auto& v : baseAmbient->variables())
        vars.push_back(v);
    for (const auto& t : tNames)
        vars.push_back(t);
    RingPtr big = RingDescriptor::make(vars, TermOrder::block_elimination(static_cast<int>(nTags)));

    std::vector<int> baseToBig(baseAmbient->nvars());
    for (std::size_t i = 0; i < baseAmbient->nvars(); ++i)
        baseToBig[i] = static_cast<int>(nTags + i);

    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < tagOfVar.size(); ++i) {
        Polynomial Ti = Polynomial::variable(big, nTags + baseAmbient->nvars() + i);
        Polynomial tag = Polynomial::variable(big, tagOfVar[i].first);
        Polynomial fi = tagOfVar[i].second.map_variables(big, baseToBig);
        gens.push_back(Ti - fi * tag);
    }
    for (const auto& q : quotientRelations)
        gens.push_back(q.map_variables(big, baseToBig));

    GroebnerBasis gb =
        buchberger(gens, big, TermOrder::block_elimination(static_cast<int>(nTags)));

    std::vector<int> outMap(big->nvars());
    for (std::size_t i = 0; i < nTags; ++i)
        outMap[i] = -1;
    for (std::size_t i = nTags; i < big->nvars(); ++i)
        outMap[i] = static_cast<int>(i - nTags);

    std::vector<Polynomial> result;
    for (const auto& e : gb.elements) {
        auto restricted = e[0].try_restrict(extRing, outMap);
        if (restricted && !restricted->is_zero())
            result.push_back(*restricted);
    }
    return result;
}

std::vector<Monomial> monomials_of_exact_degree(std::size_t nvars, int deg)
{
    std::vector<Monomial> out;
    std::vector<int> e(nvars, 0);
    auto rec = [&](auto&& self, std::size_t idx, int left) -> void {
        if (idx + 1 == nvars) {
            e[idx] = left;
            out.push_back(Monomial(e));
            e[idx] = 0;
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[idx] = k;
            self(self, idx + 1, left - k);
        }
        e[idx] = 0;
    };
    if (nvars == 0) {
        if (deg == 0)
            out.push_back(Monomial(std::vector<int>{}));
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

}  // namespace

long BigradedIdealHandle::tdeg_of(const Polynomial& p) const
{
    return p.weighted_degree(tDegree);
}

BigradedIdealHandle rees_ideal(const IdealHandle& I)
{
    BigradedIdealHandle H = make_context(I, "T");
    const auto& gens = I.generators();
    if (gens.empty())
        return H;

    std::vector<std::pair<std::size_t, Polynomial>> tagOfVar;
    for (const auto& f : gens)
        tagOfVar.emplace_back(0, lift_to_ambient(f));
    auto defining = eliminate_tags(I.ring()->ambient(), I.ring()->quotient_relations(),
                                   H.tVariables, 1, tagOfVar, H.extendedRing);
    H.definingIdeal = IdealHandle(H.extendedRing, std::move(defining));
    return H;
}

BigradedIdealHandle multi_rees_ideal(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "multi_rees_ideal");
    const RingPtr base = I.ring();
    const RingPtr amb = base->ambient();
    const std::size_t r = I.generators().size();
    const std::size_t s = J.generators().size();

    BigradedIdealHandle H;
    H.baseRing = base;
    H.baseVars = amb->nvars();
    auto uNames = fresh_names(amb, "U", r);
    auto vNames = fresh_names(amb, "V", s);
    H.tVariables = uNames;
    H.tVariables.insert(H.tVariables.end(), vNames.begin(), vNames.end());
    H.uBlockSize = r;
    ExtendedSetup setup = make_extended(amb, H.tVariables);
    H.extendedRing = setup.ext;

    const std::size_t n = H.extendedRing->nvars();
    H.internalDegree.assign(n, 1);
    H.tDegree.assign(n, 0);
    H.uDegree.assign(n, 0);
    H.vDegree.assign(n, 0);
    for (std::size_t i = 0; i < r; ++i) {
        H.internalDegree[H.baseVars + i] = std::max<long>(I.generators()[i].degree(), 0);
        H.tDegree[H.baseVars + i] = 1;
        H.uDegree[H.baseVars + i] = 1;
    }
    for (std::size_t j = 0; j < s; ++j) {
        H.internalDegree[H.baseVars + r + j] = std::max<long>(J.generators()[j].degree(), 0);
        H.tDegree[H.baseVars + r + j] = 1;
        H.vDegree[H.baseVars + r + j] = 1;
    }

    std::vector<std::pair<std::size_t, Polynomial>> tagOfVar;
    for (const auto& f : I.generators())
        tagOfVar.emplace_back(0, lift_to_ambient(f));
    for (const auto& g : J.generators())
        tagOfVar.emplace_back(1, lift_to_ambient(g));
    if (tagOfVar.empty()) {
        H.definingIdeal = IdealHandle::zero(H.extendedRing);
        return H;
    }
    auto defining = eliminate_tags(amb, base->quotient_relations(), H.tVariables, 2, tagOfVar,
                                   H.extendedRing);
    H.definingIdeal = IdealHandle(H.extendedRing, std::move(defining));
    return H;
}

BigradedIdealHandle assoc_graded_presentation(const IdealHandle& I)
{
    BigradedIdealHandle H = rees_ideal(I);
    std::vector<Polynomial> gens = H.definingIdeal.generators();
    std::vector<int> inMap(I.ring()->ambient()->nvars());
    for (std::size_t i = 0; i < inMap.size(); ++i)
        inMap[i] = static_cast<int>(i);
    for (const auto& f : I.generators())
        gens.push_back(lift_to_ambient(f).map_variables(H.extendedRing, inMap));
    H.definingIdeal = IdealHandle(H.extendedRing, std::move(gens));
    return H;
}

GradedDims bigraded_quotient_tdeg_dims(const BigradedIdealHandle& H, long maxTdeg)
{
    std::vector<FreeModuleElem> gens;
    for (const auto& f : H.definingIdeal.generators())
        gens.push_back(FreeModuleElem::from_polynomial(f));
    Grading g{H.tDegree, {0}};
    return GradedDims::from_vector(quotient_dims(gens, H.extendedRing, 1, g, maxTdeg));
}

std::pair<int, std::vector<int>> tdeg_generation_profile(const IdealHandle& Q,
                                                         const BigradedIdealHandle& context)
{
    const GroebnerBasis& gb = Q.groebner(context.tdeg_first_order());
    std::vector<Polynomial> elems = gb.polynomials();
    if (elems.empty())
        return {1, {}};

    // greedy irredundancy, removing high T-degree candidates first
    std::vector<std::size_t> order(elems.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        long ta = context.tdeg_of(elems[a]);
        long tb = context.tdeg_of(elems[b]);
        if (ta != tb)
            return ta > tb;
        return elems[a].degree() > elems[b].degree();
    });

    std::vector<bool> removed(elems.size(), false);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k : order) {
            if (removed[k])
                continue;
            std::vector<Polynomial> others;
            for (std::size_t i = 0; i < elems.size(); ++i)
                if (i != k && !removed[i])
                    others.push_back(elems[i]);
            if (membership(elems[k], IdealHandle(context.extendedRing, others))) {
                removed[k] = true;
                changed = true;
            }
        }
    }

    std::vector<int> tdegs;
    int bound = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (removed[i])
            continue;
        int td = static_cast<int>(context.tdeg_of(elems[i]));
        tdegs.push_back(td);
        bound = std::max(bound, td);
    }
    std::sort(tdegs.begin(), tdegs.end());
    return {bound, tdegs};
}

namespace {

// Slot representation of the T-degree-n piece of the defining ideal:
// an A-module inside A^{#T-monomials of degree n}.
struct SlicedIdeal {
    const BigradedIdealHandle& H;
    std::vector<Monomial> tmons;  // exact degree n, fixed enumeration
    std::map<std::vector<int>, std::size_t> slotOf;

    SlicedIdeal(const BigradedIdealHandle& h, int n) : H(h)
    {
        tmons = monomials_of_exact_degree(h.tVariables.size(), n);
        for (std::size_t i = 0; i < tmons.size(); ++i)
            slotOf[tmons[i].exponents()] = i;
    }

    // h = T^alpha * g expanded over the slot basis, coefficients in the
    // base ring.
    FreeModuleElem expand(const Polynomial& extPoly) const
    {
        const RingPtr base = H.baseRing;
        const std::size_t nb = H.baseVars;
        const std::size_t nt = H.tVariables.size();
        std::vector<PolynomialBuilder> builders;
        for (std::size_t i = 0; i < tmons.size(); ++i)
            builders.emplace_back(base);
        for (const auto& [m, c] : extPoly.terms()) {
            std::vector<int> beta(nb), gamma(nt);
            for (std::size_t i = 0; i < nb; ++i)
                beta[i] = m[i];
            for (std::size_t i = 0; i < nt; ++i)
                gamma[i] = m[nb + i];
            auto it = slotOf.find(gamma);
            if (it == slotOf.end())
                throw Error("internal: slice expansion hit an unexpected T-degree");
            builders[it->second].add(Monomial(beta), c);
        }
        std::vector<Polynomial> comps;
        for (auto& b : builders)
            comps.push_back(reduce_mod_ring(b.take()));
        FreeModuleElem e(base, tmons.size());
        for (std::size_t i = 0; i < tmons.size(); ++i)
            e[i] = comps[i];
        return e;
    }
};

// A-module generators of Q_n (rows) and of (T).Q_{n-1} (subset of rows
// built from products with a positive-degree T-monomial factor).
struct SliceRows {
    std::vector<FreeModuleElem> full;     // Q_n
    std::vector<FreeModuleElem> shifted;  // (T) . Q_{n-1}
    std::size_t slots = 0;
};

SliceRows slice_rows(const BigradedIdealHandle& H, int n)
{
    SliceRows rows;
    SlicedIdeal slice(H, n);
    rows.slots = slice.tmons.size();
    const GroebnerBasis& gb = H.definingIdeal.groebner(H.tdeg_first_order());
    const std::size_t nb = H.baseVars;
    const std::size_t nt = H.tVariables.size();
    for (const auto& e : gb.elements) {
        const Polynomial& g = e[0];
        long k = H.tdeg_of(g);
        if (k < 0 || k > n)
            continue;
        for (const auto& alpha : monomials_of_exact_degree(nt, static_cast<int>(n - k))) {
            std::vector<int> extExp(nb + nt, 0);
            for (std::size_t i = 0; i < nt; ++i)
                extExp[nb + i] = alpha[i];
            Polynomial prod = g.times_term(Monomial(extExp), Rational(1));
            FreeModuleElem row = slice.expand(prod);
            if (row.is_zero())
                continue;
            rows.full.push_back(row);
            if (!alpha.is_one())
                rows.shifted.push_back(row);
        }
    }
    return rows;
}

// Slot shifts: internal degree of the T-monomial, normalized so that
// equal-degree generators give shift 0 (coefficient-degree reporting).
std::vector<long> slice_shifts(const BigradedIdealHandle& H, const std::vector<Monomial>& tmons,
                               int n)
{
    long dmin = 0;
    for (std::size_t i = 0; i < H.tVariables.size(); ++i) {
        long d = H.internalDegree[H.baseVars + i];
        dmin = (i == 0) ? d : std::min(dmin, d);
    }
    std::vector<long> shifts;
    shifts.reserve(tmons.size());
    for (const auto& m : tmons) {
        long s = -static_cast<long>(n) * dmin;
        for (std::size_t i = 0; i < H.tVariables.size(); ++i)
            s += m[i] * H.internalDegree[H.baseVars + i];
        shifts.push_back(s);
    }
    return shifts;
}

std::optional<GradedDims> slice_dims(const BigradedIdealHandle& H, int n, long dmax)
{
    GradedDims out;
    if (H.tVariables.empty() || !H.definingIdeal.has_generators())
        return out;
    SlicedIdeal slice(H, n);
    SliceRows rows = slice_rows(H, n);
    if (rows.full.empty())
        return out;
    Grading grading{std::vector<long>(H.baseRing->nvars(), 1), slice_shifts(H, slice.tmons, n)};
    for (const auto& e : rows.full)
        if (!grading.is_homogeneous(e))
            return std::nullopt;
    ModulePresentation pres;
    pres.ring = H.baseRing;
    pres.ambientRank = rows.slots;
    pres.generators = rows.full;
    pres.relations = rows.shifted;
    std::vector<long> dims = presentation_dims(pres, grading, dmax);
    for (std::size_t d = 0; d < dims.size(); ++d)
        out.set({n, static_cast<int>(d)}, dims[d]);
    return out;
}

}  // namespace

GradedDims effective_relations_dims(const IdealHandle& I, int n, long dmax)
{
    if (n < 1)
        throw InvalidArgumentError("effective_relations_dims: n must be >= 1");
    BigradedIdealHandle H = rees_ideal(I);
    auto dims = slice_dims(H, n, dmax);
    if (!dims)
        throw HomogeneityError("effective_relations_dims: inhomogeneous input");
    return *dims;
}

RelationTypeResult relation_type(const IdealHandle& I, long dmax)
{
    BigradedIdealHandle H = rees_ideal(I);
    RelationTypeResult res;
    res.truncationBound = 0;
    res.stabilized = true;
    if (!H.definingIdeal.has_generators()) {
        res.rt = 1;
        return res;
    }
    auto [bound, tdegs] = tdeg_generation_profile(H.definingIdeal, H);
    res.rt = bound;
    res.minimalGeneratorTDegrees = std::move(tdegs);
    for (int n = 1; n <= res.rt + 1; ++n) {
        auto dn = slice_dims(H, n, dmax);
        if (!dn)
            break;  // inhomogeneous input: rt stands, dims unavailable
        for (const auto& [k, v] : dn->table)
            res.effectiveDims.set(k, v);
    }
    return res;
}

namespace {

// Kernel slice K_n of the Rees module cover: relations among the
// products f^alpha * m_j inside M, as rows over A^{#slots * g}.
struct ModuleSlices {
    const IdealHandle& I;
    const ModulePresentation& M;
    std::size_t g;  // cover rank

    std::vector<Monomial> tmons(int n) const
    {
        return monomials_of_exact_degree(I.generators().size(), n);
    }

    std::vector<FreeModuleElem> kernel_slice(int n) const
    {
        auto mons = tmons(n);
        std::vector<FreeModuleElem> list;
        for (const auto& alpha : mons) {
            Polynomial falpha = Polynomial::constant(M.ring, Rational(1));
            for (std::size_t i = 0; i < I.generators().size(); ++i)
                for (int e = 0; e < alpha[i]; ++e)
                    falpha = falpha * I.generators()[i];
            for (const auto& m : M.generators)
                list.push_back(m.scaled(falpha));
        }
        const std::size_t nprod = list.size();
        for (const auto& r : M.relations)
            list.push_back(r);
        if (nprod == 0)
            return {};
        auto rows = kernel_of_list(list, M.ring, M.ambientRank);
        std::vector<FreeModuleElem> out;
        for (const auto& r : rows) {
            FreeModuleElem head(M.ring, nprod);
            bool nonzero = false;
            for (std::size_t i = 0; i < nprod; ++i) {
                head[i] = r[i];
                nonzero = nonzero || !r[i].is_zero();
            }
            if (nonzero)
                out.push_back(std::move(head));
        }
        return out;
    }

    // rows of K_{n-1} pushed up by each T-variable into degree n
    std::vector<FreeModuleElem> shift_rows(const std::vector<FreeModuleElem>& prev, int n) const
    {
        auto monsPrev = tmons(n - 1);
        auto monsCur = tmons(n);
        std::map<std::vector<int>, std::size_t> slotOf;
        for (std::size_t i = 0; i < monsCur.size(); ++i)
            slotOf[monsCur[i].exponents()] = i;
        const std::size_t nT = I.generators().size();
        std::vector<FreeModuleElem> out;
        for (const auto& row : prev) {
            for (std::size_t t = 0; t < nT; ++t) {
                FreeModuleElem shifted(M.ring, monsCur.size() * g);
                for (std::size_t b = 0; b < monsPrev.size(); ++b) {
                    std::vector<int> e = monsPrev[b].exponents();
                    e[t] += 1;
                    std::size_t target = slotOf.at(e);
                    for (std::size_t j = 0; j < g; ++j)
                        shifted[target * g + j] = row[b * g + j];
                }
                if (!shifted.is_zero())
                    out.push_back(std::move(shifted));
            }
        }
        return out;
    }
};

}  // namespace

RelationTypeResult relation_type(const IdealHandle& I, const ModulePresentation& M, int tdegBound,
                                 long dmax)
{
    require_same_ring(I.ring(), M.ring, "relation_type");
    if (tdegBound < 1)
        throw InvalidArgumentError("relation_type: bound must be >= 1");

    RelationTypeResult res;
    res.truncationBound = tdegBound;
    res.rt = 1;

    ModuleSlices slices{I, M, M.generators.size()};
    if (M.generators.empty() || I.generators().empty())
        return res;

    std::vector<FreeModuleElem> prev = slices.kernel_slice(0);
    int lastNonzero = 0;
    std::vector<int> multiset;

    for (int n = 1; n <= tdegBound; ++n) {
        std::vector<FreeModuleElem> cur = slices.kernel_slice(n);
        std::vector<FreeModuleElem> shifted = slices.shift_rows(prev, n);
        const std::size_t slots = slices.tmons(n).size() * slices.g;

        // count a greedy layer of new generators in this degree
        std::vector<FreeModuleElem> span = shifted;
        int fresh = 0;
        for (const auto& row : cur) {
            if (span.empty() || !module_membership(row, span, M.ring, slots)) {
                span.push_back(row);
                ++fresh;
            }
        }
        if (fresh > 0) {
            lastNonzero = n;
            for (int k = 0; k < fresh; ++k)
                multiset.push_back(n);
            ModulePresentation pres;
            pres.ring = M.ring;
            pres.ambientRank = slots;
            pres.generators = cur;
            pres.relations = shifted;
            if (!cur.empty()) {
                // slot (alpha, j): normalized T-monomial degree plus the
                // degree of the covered module generator
                long dmin = 0;
                for (std::size_t i = 0; i < I.generators().size(); ++i) {
                    long d = std::max<long>(I.generators()[i].degree(), 0);
                    dmin = (i == 0) ? d : std::min(dmin, d);
                }
                auto mons = slices.tmons(n);
                std::vector<long> shifts(slots, 0);
                for (std::size_t b = 0; b < mons.size(); ++b) {
                    long s = -static_cast<long>(n) * dmin;
                    for (std::size_t i = 0; i < I.generators().size(); ++i)
                        s += mons[b][i] * std::max<long>(I.generators()[i].degree(), 0);
                    for (std::size_t j = 0; j < slices.g; ++j)
                        shifts[b * slices.g + j] =
                            s + std::max<long>(M.generators[j].degree(), 0);
                }
                Grading grading{std::vector<long>(M.ring->nvars(), 1), shifts};
                bool homog = true;
                for (const auto& e : cur)
                    homog = homog && grading.is_homogeneous(e);
                if (homog) {
                    std::vector<long> dims = presentation_dims(pres, grading, dmax);
                    for (std::size_t d = 0; d < dims.size(); ++d)
                        if (dims[d] != 0)
                            res.effectiveDims.set({n, static_cast<int>(d)}, dims[d]);
                }
            }
        }
        prev = std::move(cur);
    }
    res.rt = std::max(1, lastNonzero);
    res.minimalGeneratorTDegrees = std::move(multiset);
    // stabilized when the last two computed slices added nothing
    res.stabilized = (tdegBound - lastNonzero) >= 2;
    return res;
}

ModulePresentation rees_module_ideal(const IdealHandle& I, const ModulePresentation& M,
                                     int tdegBound, BigradedIdealHandle* contextOut)
{
    require_same_ring(I.ring(), M.ring, "rees_module_ideal");
    if (tdegBound < 1)
        throw InvalidArgumentError("rees_module_ideal: bound must be >= 1");

    BigradedIdealHandle H = make_context(I, "T");
    if (contextOut)
        *contextOut = H;

    const std::size_t g = M.generators.size();
    const std::size_t nb = H.baseVars;
    const std::size_t nt = H.tVariables.size();
    ModuleSlices slices{I, M, g};

    std::vector<FreeModuleElem> relations;
    auto emit = [&](const std::vector<FreeModuleElem>& rows, int n) {
        auto mons = monomials_of_exact_degree(nt, n);
        for (const auto& row : rows) {
            FreeModuleElem ext(H.extendedRing, g);
            for (std::size_t b = 0; b < mons.size(); ++b) {
                std::vector<int> extExp(nb + nt, 0);
                for (std::size_t i = 0; i < nt; ++i)
                    extExp[nb + i] = mons[b][i];
                Monomial talpha(extExp);
                std::vector<int> inMap(nb);
                for (std::size_t i = 0; i < nb; ++i)
                    inMap[i] = static_cast<int>(i);
                for (std::size_t j = 0; j < g; ++j) {
                    Polynomial coeff =
                        lift_to_ambient(row[b * g + j]).map_variables(H.extendedRing, inMap);
                    ext[j] += coeff.times_term(talpha, Rational(1));
                }
            }
            if (!ext.is_zero())
                relations.push_back(std::move(ext));
        }
    };

    std::vector<FreeModuleElem> prev = slices.kernel_slice(0);
    emit(prev, 0);
    for (int n = 1; n <= tdegBound && g > 0 && !I.generators().empty(); ++n) {
        std::vector<FreeModuleElem> cur = slices.kernel_slice(n);
        emit(cur, n);
        prev = std::move(cur);
    }

    return ModulePresentation::cokernel(H.extendedRing, std::max<std::size_t>(g, 1),
                                        std::move(relations));
}

GradedDims effective_relations_dims(const IdealHandle& I, const ModulePresentation& M, int n,
                                    long dmax)
{
    if (n < 1)
        throw InvalidArgumentError("effective_relations_dims: n must be >= 1");
    RelationTypeResult r = relation_type(I, M, n, dmax);
    GradedDims out;
    for (const auto& [k, v] : r.effectiveDims.table)
        if (k[0] == n)
            out.set(k, v);
    return out;
}

}  // namespace transversal
