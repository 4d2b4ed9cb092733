#pragma once

#include <atomic>
#include <optional>
#include <vector>

#include "transversal/module_elem.hpp"
#include "transversal/polynomial.hpp"
#include "transversal/term_order.hpp"

namespace transversal {

struct CancelledError : Error {
    using Error::Error;
};

/// Order on module terms (monomial, component). POT compares the
/// component first (lower index wins); TOP compares the monomial first,
/// which gives variable-elimination the needed property across
/// components.
struct ModuleOrder {
    enum class Style { PositionOverTerm, TermOverPosition };
    TermOrder base = TermOrder::degrevlex();
    Style style = Style::PositionOverTerm;

    bool operator==(const ModuleOrder&) const = default;
};

struct ModTerm {
    Monomial mono;
    int comp = 0;
};

Ordering compare_mod_terms(const ModTerm& a, const ModTerm& b, const ModuleOrder& ord);

struct GBOptions {
    const std::atomic<bool>* cancel = nullptr;  // checked between S-pair reductions
};

/// Reduced Groebner basis of an ideal or of a submodule of a free
/// module.  Over a quotient ring the computation runs in the free
/// ambient ring with the quotient relations appended, and `elements`
/// live there; `ring` records the ring the basis answers questions
/// about.
struct GroebnerBasis {
    RingPtr ring;
    ModuleOrder order;
    std::size_t rank = 1;
    std::vector<FreeModuleElem> elements;  // monic, interreduced, sorted by decreasing lead
    bool reduced = true;

    bool is_trivial() const { return elements.empty(); }
    /// rank-1 view
    std::vector<Polynomial> polynomials() const;
    bool operator==(const GroebnerBasis& o) const
    {
        return rank == o.rank && order == o.order && elements == o.elements;
    }
};

ModTerm leading_term(const FreeModuleElem& e, const ModuleOrder& ord);
Rational leading_coefficient(const FreeModuleElem& e, const ModuleOrder& ord);

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring,
                         const TermOrder& ord, const GBOptions& opts = {});
GroebnerBasis buchberger_module(const std::vector<FreeModuleElem>& gens, const RingPtr& ring,
                                std::size_t rank, const ModuleOrder& ord,
                                const GBOptions& opts = {});

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);
FreeModuleElem normal_form(const FreeModuleElem& f, const GroebnerBasis& G);

/// Normal form modulo the ring's quotient relations (identity on free
/// rings). Idempotent and QQ-linear.
Polynomial reduce_mod_ring(const Polynomial& f);
FreeModuleElem reduce_mod_ring(const FreeModuleElem& e);

/// Generators of the syzygy module of `inputs` inside A^{inputs.size()}
/// where A is the free ring `ring` (callers handle quotient lifting).
/// Schreyer-style: lifts of all S-pair reductions over the reduced
/// basis, composed back through the change-of-basis matrices.
std::vector<FreeModuleElem> syzygy_generators(const std::vector<FreeModuleElem>& inputs,
                                              const RingPtr& ring, std::size_t rank,
                                              const ModuleOrder& ord,
                                              const GBOptions& opts = {});

/// Lift of a polynomial over a quotient ring to the free ambient ring
/// (identity when the ring is already free).
Polynomial lift_to_ambient(const Polynomial& p);
FreeModuleElem lift_to_ambient(const FreeModuleElem& e);
Polynomial project_to_ring(const Polynomial& p, const RingPtr& ring);

}  // namespace transversal
