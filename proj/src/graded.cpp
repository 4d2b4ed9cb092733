#include "transversal/graded.hpp"

namespace transversal {

bool Grading::is_homogeneous(const FreeModuleElem& e) const
{
    long d = -1;
    for (std::size_t c = 0; c < e.rank(); ++c) {
        for (const auto& [m, coeff] : e[c].terms()) {
            long md = degree_of(m, c);
            if (d == -1)
                d = md;
            else if (d != md)
                return false;
        }
    }
    return true;
}

bool Grading::is_homogeneous(const Polynomial& p) const
{
    return is_homogeneous(FreeModuleElem::from_polynomial(p));
}

long Grading::degree_of(const FreeModuleElem& e) const
{
    long d = -1;
    for (std::size_t c = 0; c < e.rank(); ++c)
        for (const auto& [m, coeff] : e[c].terms())
            d = std::max(d, degree_of(m, c));
    return d;
}

void require_homogeneous(const std::vector<FreeModuleElem>& elems, const Grading& g,
                         const char* what)
{
    for (const auto& e : elems)
        if (!g.is_homogeneous(e))
            throw HomogeneityError(std::string(what) + ": inhomogeneous input '" + e.to_string() +
                                   "'");
}

namespace {

struct LeadModule {
    std::size_t rank;
    std::vector<std::vector<Monomial>> bySlot;  // minimal lead monomials per component

    bool contains(const Monomial& m, std::size_t slot) const
    {
        for (const auto& g : bySlot[slot])
            if (g.divides(m))
                return true;
        return false;
    }
};

LeadModule lead_module_of(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                          std::size_t rank)
{
    GroebnerBasis gb = span_groebner(gens, ring, rank);
    LeadModule L;
    L.rank = rank;
    L.bySlot.resize(rank);
    for (const auto& e : gb.elements) {
        ModTerm t = leading_term(e, gb.order);
        L.bySlot[static_cast<std::size_t>(t.comp)].push_back(t.mono);
    }
    return L;
}

void check_quotient_relations_homogeneous(const RingPtr& ring, const Grading& g, const char* what)
{
    for (const auto& q : ring->quotient_relations()) {
        Grading ringGrading{g.varWeights, {0}};
        if (!ringGrading.is_homogeneous(q))
            throw HomogeneityError(std::string(what) +
                                   ": quotient relation is inhomogeneous for this grading");
    }
}

// Enumerates exponent vectors within `bounds` (exclusive) whose
// weighted degree stays <= budget; calls fn(monomial weighted degree,
// exponents).
template <typename Fn>
void enumerate_box(const std::vector<long>& weights, const std::vector<long>& bounds, long budget,
                   Fn&& fn)
{
    std::vector<int> e(weights.size(), 0);
    auto rec = [&](auto&& self, std::size_t idx, long used) -> void {
        if (idx == e.size()) {
            fn(used, e);
            return;
        }
        for (int k = 0;; ++k) {
            long u = used + weights[idx] * k;
            if (k >= bounds[idx] || u > budget)
                break;
            e[idx] = k;
            self(self, idx + 1, u);
        }
        e[idx] = 0;
    };
    rec(rec, 0, 0);
}

}  // namespace

std::vector<long> submodule_dims(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                 std::size_t rank, const Grading& grading, long maxDeg)
{
    for (long w : grading.varWeights)
        if (w < 1)
            throw InvalidArgumentError("submodule_dims requires positive variable weights");
    require_homogeneous(gens, grading, "submodule_dims");
    check_quotient_relations_homogeneous(ring, grading, "submodule_dims");

    LeadModule L = lead_module_of(gens, ring, rank);
    std::vector<long> dims(static_cast<std::size_t>(maxDeg) + 1, 0);
    for (std::size_t slot = 0; slot < rank; ++slot) {
        long budget = maxDeg - grading.slotShifts[slot];
        if (budget < 0)
            continue;
        std::vector<long> bounds(grading.varWeights.size());
        for (std::size_t v = 0; v < bounds.size(); ++v)
            bounds[v] = budget / grading.varWeights[v] + 1;
        enumerate_box(grading.varWeights, bounds, budget, [&](long wdeg, const std::vector<int>& e) {
            long d = wdeg + grading.slotShifts[slot];
            if (d < 0 || d > maxDeg)
                return;
            if (L.contains(Monomial(e), slot))
                ++dims[static_cast<std::size_t>(d)];
        });
    }
    return dims;
}

std::vector<long> quotient_dims(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                std::size_t rank, const Grading& grading, long maxDeg)
{
    require_homogeneous(gens, grading, "quotient_dims");
    check_quotient_relations_homogeneous(ring, grading, "quotient_dims");

    LeadModule L = lead_module_of(gens, ring, rank);
    const std::size_t nvars = grading.varWeights.size();
    std::vector<long> dims(static_cast<std::size_t>(maxDeg) + 1, 0);

    for (std::size_t slot = 0; slot < rank; ++slot) {
        std::vector<long> bounds(nvars, 0);
        for (std::size_t v = 0; v < nvars; ++v) {
            if (grading.varWeights[v] >= 1) {
                long budget = maxDeg - grading.slotShifts[slot];
                bounds[v] = budget < 0 ? 0 : budget / grading.varWeights[v] + 1;
                continue;
            }
            // weight-0 variable: needs a pure power of it in the lead
            // module for the quotient to stay finite-dimensional
            long bound = -1;
            for (const auto& g : L.bySlot[slot]) {
                bool pure = true;
                for (std::size_t u = 0; u < nvars && pure; ++u)
                    if (u != v && g[u] != 0)
                        pure = false;
                if (pure && g[v] > 0)
                    bound = bound < 0 ? g[v] : std::min(bound, static_cast<long>(g[v]));
            }
            if (bound < 0)
                throw InfiniteDimensionError(
                    "quotient has infinite-dimensional graded pieces (variable " +
                    ring->ambient()->variable_name(v) + " is not nilpotent)");
            bounds[v] = bound;
        }
        enumerate_box(grading.varWeights, bounds, maxDeg - grading.slotShifts[slot],
                      [&](long wdeg, const std::vector<int>& e) {
                          long d = wdeg + grading.slotShifts[slot];
                          if (d < 0 || d > maxDeg)
                              return;
                          if (!L.contains(Monomial(e), slot))
                              ++dims[static_cast<std::size_t>(d)];
                      });
    }
    return dims;
}

std::vector<long> presentation_dims(const ModulePresentation& M, const Grading& grading,
                                    long maxDeg)
{
    std::vector<FreeModuleElem> all = M.generators;
    all.insert(all.end(), M.relations.begin(), M.relations.end());
    std::vector<long> top = submodule_dims(all, M.ring, M.ambientRank, grading, maxDeg);
    // the relations side is computed even when empty: over a quotient
    // ring both sides carry the ring-relation rows, which must cancel
    std::vector<long> bottom = submodule_dims(M.relations, M.ring, M.ambientRank, grading, maxDeg);
    for (std::size_t d = 0; d < top.size(); ++d)
        top[d] -= bottom[d];
    return top;
}

GradedDims hilbert_dims(const IdealHandle& I, long maxDeg)
{
    if (maxDeg < 0)
        throw InvalidArgumentError("hilbert_dims: negative degree bound");
    std::vector<FreeModuleElem> gens;
    for (const auto& f : I.generators())
        gens.push_back(FreeModuleElem::from_polynomial(f));
    Grading g = Grading::standard(I.ring());
    return GradedDims::from_vector(quotient_dims(gens, I.ring(), 1, g, maxDeg));
}

GradedDims hilbert_dims(const ModulePresentation& M, long maxDeg)
{
    if (maxDeg < 0)
        throw InvalidArgumentError("hilbert_dims: negative degree bound");
    Grading g = Grading::standard(M.ring, M.ambientRank);
    return GradedDims::from_vector(presentation_dims(M, g, maxDeg));
}

}  // namespace transversal
