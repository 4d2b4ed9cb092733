#pragma once

#include <string>

#include "transversal/monomial.hpp"

namespace transversal {

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

/// Global (well) monomial orders. All variants are multiplicative and
/// have 1 as the unique minimum.
struct TermOrder {
    enum class Kind {
        Lex,
        DegRevLex,
        // Two blocks: the first `block` variables dominate; degrevlex
        // inside each block. Eliminates the leading block.
        BlockElimination,
        // Compares total degree in [tBegin, tEnd) first, then degrevlex
        // on the whole exponent vector. GB elements under this order are
        // homogeneous slice-by-slice in T-degree when the input is.
        WeightedTDegreeFirst,
    };

    Kind kind = Kind::DegRevLex;
    int block = 0;   // BlockElimination: size of the leading block
    int tBegin = 0;  // WeightedTDegreeFirst: T-variable range
    int tEnd = 0;

    static TermOrder lex() { return {Kind::Lex, 0, 0, 0}; }
    static TermOrder degrevlex() { return {Kind::DegRevLex, 0, 0, 0}; }
    static TermOrder block_elimination(int k) { return {Kind::BlockElimination, k, 0, 0}; }
    static TermOrder tdegree_first(int tBegin, int tEnd)
    {
        return {Kind::WeightedTDegreeFirst, 0, tBegin, tEnd};
    }

    bool operator==(const TermOrder&) const = default;

    std::string name() const;
};

Ordering compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& ord);

inline bool monomial_less(const Monomial& a, const Monomial& b, const TermOrder& ord)
{
    return compare_monomials(a, b, ord) == Ordering::Less;
}

}  // namespace transversal
