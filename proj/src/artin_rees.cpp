#include "transversal/artin_rees.hpp"

#include "transversal/fingerprint.hpp"

namespace transversal {

std::string fnv1a64_hex(const std::string& data)
{
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(data)));
    return std::string(buf);
}

namespace {

std::string basis_fingerprint(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                              std::size_t rank)
{
    GroebnerBasis gb = span_groebner(gens, ring, rank);
    std::string text;
    for (const auto& e : gb.elements)
        text += e.to_string() + ";";
    return fnv1a64_hex(text);
}

}  // namespace

ArResult strong_uniform_number(const IdealHandle& m, const ModulePresentation& M,
                               const ModulePresentation& N, int nmax)
{
    require_same_ring(m.ring(), M.ring, "strong_uniform_number");
    require_same_ring(m.ring(), N.ring, "strong_uniform_number");
    if (M.ambientRank != N.ambientRank)
        throw DimensionError("strong_uniform_number: ambient ranks differ");
    if (!M.is_submodule() || !N.is_submodule())
        throw RepresentationError("strong_uniform_number expects submodule presentations");
    if (nmax < 1)
        throw InvalidArgumentError("strong_uniform_number: nmax must be >= 1");
    if (!submodule_contains(M.generators, N.generators, M.ring, M.ambientRank))
        throw ContainmentError("strong_uniform_number: N is not contained in M");

    ArResult result;
    result.nmax = nmax;

    // left-hand sides m^n M cap N for n = 1..nmax
    std::vector<ModulePresentation> meet(static_cast<std::size_t>(nmax) + 1);
    for (int n = 1; n <= nmax; ++n)
        meet[static_cast<std::size_t>(n)] =
            module_intersection(scale_module(ideal_power(m, n), M), N);

    for (int s = 1; s <= nmax; ++s) {
        bool valid = true;
        std::vector<std::tuple<int, std::string, std::string>> table;
        for (int n = s; n <= nmax && valid; ++n) {
            const ModulePresentation& lhs = meet[static_cast<std::size_t>(n)];
            ModulePresentation rhs =
                scale_module(ideal_power(m, n - s), meet[static_cast<std::size_t>(s)]);
            valid = submodule_equal(lhs.generators, rhs.generators, M.ring, M.ambientRank);
            table.emplace_back(n, basis_fingerprint(lhs.generators, M.ring, M.ambientRank),
                               basis_fingerprint(rhs.generators, M.ring, M.ambientRank));
        }
        if (valid) {
            result.found = true;
            result.s = s;
            result.table = std::move(table);
            return result;
        }
    }
    return result;
}

SampleMaxResult sample_maximal_rt(const RingPtr& A, const ModulePresentation& M,
                                  const std::vector<std::vector<Rational>>& points,
                                  int moduleBound)
{
    require_same_ring(A, M.ring, "sample_maximal_rt");
    SampleMaxResult result;

    const bool freeRank1 = M.relations.empty() && M.ambientRank == M.generators.size() &&
                           [&] {
                               for (std::size_t i = 0; i < M.generators.size(); ++i)
                                   if (!(M.generators[i] ==
                                         FreeModuleElem::basis(M.ring, M.ambientRank, i)))
                                       return false;
                               return true;
                           }();

    for (const auto& pt : points) {
        if (pt.size() != A->nvars())
            throw DimensionError("sample point arity mismatch");
        for (const auto& q : A->quotient_relations())
            if (sgn(q.evaluate(pt)) != 0)
                throw InvalidArgumentError(
                    "sample point does not satisfy the ring relations (malformed maximal ideal)");

        std::vector<Polynomial> gens;
        for (std::size_t i = 0; i < A->nvars(); ++i)
            gens.push_back(Polynomial::variable(A, i) -
                           Polynomial::constant(A, pt[i]));
        IdealHandle maximal(A, gens);

        PointSample sample;
        sample.point = pt;
        sample.rt = freeRank1 ? relation_type(maximal).rt
                              : relation_type(maximal, M, moduleBound).rt;
        result.maxRt = std::max(result.maxRt, sample.rt);
        result.samples.push_back(std::move(sample));
    }
    return result;
}

}  // namespace transversal
