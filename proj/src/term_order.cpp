#include "transversal/term_order.hpp"

namespace transversal {

namespace {

Ordering from_int(long v)
{
    if (v < 0)
        return Ordering::Less;
    if (v > 0)
        return Ordering::Greater;
    return Ordering::Equal;
}

Ordering lex_cmp(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end)
{
    for (std::size_t i = begin; i < end; ++i)
        if (a[i] != b[i])
            return from_int(a[i] - b[i]);
    return Ordering::Equal;
}

// Graded reverse lexicographic on the index range [begin, end).
Ordering degrevlex_cmp(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end)
{
    long da = 0, db = 0;
    for (std::size_t i = begin; i < end; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db)
        return from_int(da - db);
    for (std::size_t i = end; i > begin; --i) {
        int diff = a[i - 1] - b[i - 1];
        if (diff != 0)
            return from_int(-diff);  // last nonzero of a-b negative => a greater
    }
    return Ordering::Equal;
}

}  // namespace

Ordering compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& ord)
{
    if (a.size() != b.size())
        throw DimensionError("compare_monomials: length mismatch");
    const std::size_t n = a.size();
    switch (ord.kind) {
        case TermOrder::Kind::Lex:
            return lex_cmp(a, b, 0, n);
        case TermOrder::Kind::DegRevLex:
            return degrevlex_cmp(a, b, 0, n);
        case TermOrder::Kind::BlockElimination: {
            const std::size_t k = static_cast<std::size_t>(ord.block);
            if (k > n)
                throw DimensionError("block size exceeds variable count");
            Ordering head = degrevlex_cmp(a, b, 0, k);
            if (head != Ordering::Equal)
                return head;
            return degrevlex_cmp(a, b, k, n);
        }
        case TermOrder::Kind::WeightedTDegreeFirst: {
            if (static_cast<std::size_t>(ord.tEnd) > n || ord.tBegin > ord.tEnd)
                throw DimensionError("T-block range out of bounds");
            long ta = 0, tb = 0;
            for (int i = ord.tBegin; i < ord.tEnd; ++i) {
                ta += a[static_cast<std::size_t>(i)];
                tb += b[static_cast<std::size_t>(i)];
            }
            if (ta != tb)
                return from_int(ta - tb);
            return degrevlex_cmp(a, b, 0, n);
        }
    }
    return Ordering::Equal;
}

std::string TermOrder::name() const
{
    switch (kind) {
        case Kind::Lex:
            return "lex";
        case Kind::DegRevLex:
            return "degrevlex";
        case Kind::BlockElimination:
            return "block(" + std::to_string(block) + ")";
        case Kind::WeightedTDegreeFirst:
            return "tdegfirst(" + std::to_string(tBegin) + ".." + std::to_string(tEnd) + ")";
    }
    return "?";
}

}  // namespace transversal
