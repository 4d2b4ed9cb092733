#pragma once

#include "transversal/rees.hpp"

namespace transversal {

/// Outcome of the uniform Artin-Rees probe. `s` is certified on
/// [s, nmax] only; the report never claims the unbounded statement.
struct ArResult {
    bool found = false;
    int s = 0;
    int nmax = 0;
    /// per n in [s, nmax]: fingerprints of the reduced module bases of
    /// m^n M cap N and m^(n-s) (m^s M cap N)
    std::vector<std::tuple<int, std::string, std::string>> table;
};

/// Smallest s >= 1 with m^n M cap N = m^(n-s) (m^s M cap N) for all
/// s <= n <= nmax. M, N submodules of a common free ambient, N inside M.
ArResult strong_uniform_number(const IdealHandle& m, const ModulePresentation& M,
                               const ModulePresentation& N, int nmax);

struct PointSample {
    std::vector<Rational> point;
    int rt = 1;
};

struct SampleMaxResult {
    std::vector<PointSample> samples;
    int maxRt = 1;
};

/// Relation type of translated coordinate maximal ideals
/// (x1-a1, ..., xk-ak) at each sampled rational point of Spec A.
SampleMaxResult sample_maximal_rt(const RingPtr& A, const ModulePresentation& M,
                                  const std::vector<std::vector<Rational>>& points,
                                  int moduleBound = 6);

}  // namespace transversal
