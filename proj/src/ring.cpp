#include "transversal/ring.hpp"

#include <set>

#include "transversal/errors.hpp"
#include "transversal/polynomial.hpp"

namespace transversal {

RingPtr RingDescriptor::make(std::vector<std::string> variables, TermOrder defaultOrder)
{
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty())
            throw InvalidArgumentError("empty variable name");
        if (!seen.insert(v).second)
            throw InvalidArgumentError("duplicate variable name: " + v);
    }
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->vars_ = std::move(variables);
    r->order_ = defaultOrder;
    return r;
}

RingPtr RingDescriptor::make_quotient(const RingPtr& freeRing, std::vector<Polynomial> relations)
{
    if (freeRing->is_quotient())
        throw InvalidArgumentError("quotient of a quotient ring is not supported");
    std::vector<Polynomial> kept;
    for (auto& p : relations) {
        if (!same_ring(p.ring(), freeRing))
            throw RingMismatchError("quotient relation not over the ambient ring");
        if (!p.is_zero())
            kept.push_back(std::move(p));
    }
    if (kept.empty())
        return freeRing;
    auto r = std::shared_ptr<RingDescriptor>(new RingDescriptor());
    r->vars_ = freeRing->variables();
    r->order_ = freeRing->default_order();
    r->quotient_ = std::move(kept);
    r->ambient_ = freeRing;
    return r;
}

int RingDescriptor::variable_index(const std::string& name) const
{
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name)
            return static_cast<int>(i);
    return -1;
}

RingPtr RingDescriptor::ambient() const
{
    if (ambient_)
        return ambient_;
    return shared_from_this();
}

std::string RingDescriptor::description() const
{
    std::string s = "QQ[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (i)
            s += ",";
        s += vars_[i];
    }
    s += "]";
    if (is_quotient())
        s += " mod " + std::to_string(quotient_.size()) + " relation(s)";
    return s;
}

bool same_ring(const RingPtr& a, const RingPtr& b)
{
    if (a.get() == b.get())
        return true;
    if (!a || !b)
        return false;
    if (a->variables() != b->variables())
        return false;
    const auto& qa = a->quotient_relations();
    const auto& qb = b->quotient_relations();
    if (qa.size() != qb.size())
        return false;
    for (std::size_t i = 0; i < qa.size(); ++i)
        if (qa[i].terms() != qb[i].terms())
            return false;
    return true;
}

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where)
{
    if (!same_ring(a, b))
        throw RingMismatchError(std::string(where) + ": operands live in different rings");
}

}  // namespace transversal
