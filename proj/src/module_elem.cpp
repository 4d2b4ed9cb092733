#include "transversal/module_elem.hpp"

#include "transversal/errors.hpp"

namespace transversal {

FreeModuleElem::FreeModuleElem(RingPtr ring, std::size_t rank) : ring_(std::move(ring))
{
    comps_.assign(rank, Polynomial(ring_));
}

FreeModuleElem::FreeModuleElem(std::vector<Polynomial> components) : comps_(std::move(components))
{
    if (comps_.empty())
        throw DimensionError("module element needs positive rank");
    ring_ = comps_.front().ring();
    for (const auto& c : comps_)
        require_same_ring(ring_, c.ring(), "module element");
}

FreeModuleElem FreeModuleElem::basis(const RingPtr& ring, std::size_t rank, std::size_t index)
{
    FreeModuleElem e(ring, rank);
    e.comps_[index] = Polynomial::constant(ring, Rational(1));
    return e;
}

FreeModuleElem FreeModuleElem::from_polynomial(const Polynomial& p)
{
    FreeModuleElem e(p.ring(), 1);
    e.comps_[0] = p;
    return e;
}

bool FreeModuleElem::is_zero() const
{
    for (const auto& c : comps_)
        if (!c.is_zero())
            return false;
    return true;
}

long FreeModuleElem::degree() const
{
    long d = -1;
    for (const auto& c : comps_)
        d = std::max(d, c.degree());
    return d;
}

FreeModuleElem FreeModuleElem::operator+(const FreeModuleElem& o) const
{
    if (rank() != o.rank())
        throw DimensionError("module element rank mismatch");
    FreeModuleElem r = *this;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        r.comps_[i] += o.comps_[i];
    return r;
}

FreeModuleElem FreeModuleElem::operator-(const FreeModuleElem& o) const
{
    if (rank() != o.rank())
        throw DimensionError("module element rank mismatch");
    FreeModuleElem r = *this;
    for (std::size_t i = 0; i < comps_.size(); ++i)
        r.comps_[i] -= o.comps_[i];
    return r;
}

FreeModuleElem FreeModuleElem::operator-() const
{
    FreeModuleElem r = *this;
    for (auto& c : r.comps_)
        c = -c;
    return r;
}

FreeModuleElem FreeModuleElem::scaled(const Polynomial& f) const
{
    FreeModuleElem r = *this;
    for (auto& c : r.comps_)
        c = c * f;
    return r;
}

FreeModuleElem FreeModuleElem::times_term(const Monomial& m, const Rational& c) const
{
    FreeModuleElem r = *this;
    for (auto& comp : r.comps_)
        comp = comp.times_term(m, c);
    return r;
}

bool FreeModuleElem::operator==(const FreeModuleElem& o) const
{
    return rank() == o.rank() && comps_ == o.comps_;
}

std::string FreeModuleElem::to_string() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i)
            s += ", ";
        s += print_polynomial(comps_[i]);
    }
    return s + "]";
}

}  // namespace transversal
