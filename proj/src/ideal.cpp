#include "transversal/ideal.hpp"

#include <algorithm>

#include "transversal/module_ops.hpp"

namespace transversal {

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> generators)
{
    auto data = std::make_shared<Data>();
    data->ring = std::move(ring);
    for (auto& g : generators) {
        require_same_ring(g.ring(), data->ring, "ideal");
        Polynomial r = reduce_mod_ring(g);
        if (r.is_zero())
            continue;
        if (std::find(data->gens.begin(), data->gens.end(), r) == data->gens.end())
            data->gens.push_back(std::move(r));
    }
    data_ = std::move(data);
}

IdealHandle IdealHandle::unit(const RingPtr& ring)
{
    return IdealHandle(ring, {Polynomial::constant(ring, Rational(1))});
}

const GroebnerBasis& IdealHandle::groebner(const TermOrder& ord) const
{
    std::lock_guard<std::mutex> lock(data_->mutex);
    for (const auto& [o, gb] : data_->cache)
        if (o == ord)
            return *gb;
    auto gb = std::make_shared<const GroebnerBasis>(buchberger(data_->gens, data_->ring, ord));
    data_->cache.emplace_back(ord, gb);
    return *data_->cache.back().second;
}

const GroebnerBasis& IdealHandle::groebner() const
{
    return groebner(data_->ring->default_order());
}

bool IdealHandle::is_zero_ideal() const
{
    // over a quotient ring the basis carries the ring relations
    for (const auto& e : groebner().elements)
        if (!reduce_mod_ring(project_to_ring(e[0], ring())).is_zero())
            return false;
    return true;
}

bool IdealHandle::is_unit_ideal() const
{
    const auto& els = groebner().elements;
    return els.size() == 1 && els[0][0] == Polynomial::constant(ring()->ambient(), Rational(1));
}

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_sum");
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_product");
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators())
            gens.push_back(f * g);
    return IdealHandle(I.ring(), std::move(gens));
}

IdealHandle ideal_power(const IdealHandle& I, int p)
{
    if (p < 0)
        throw InvalidArgumentError("ideal_power: negative exponent");
    if (p == 0)
        return IdealHandle::unit(I.ring());
    IdealHandle r = I;
    for (int k = 1; k < p; ++k)
        r = ideal_product(r, I);
    return r;
}

namespace {

// Extended ring with a fresh tag variable in front.
struct TagRing {
    RingPtr ext;             // free ring QQ[@w, x...]
    std::vector<int> inMap;  // source var i -> i+1
    Polynomial w, oneMinusW;
};

TagRing make_tag_ring(const RingPtr& ring)
{
    RingPtr amb = ring->ambient();
    std::vector<std::string> vars;
    vars.reserve(amb->nvars() + 1);
    vars.push_back("@w");
    for (const auto& v : amb->variables())
        vars.push_back(v);
    TagRing t;
    t.ext = RingDescriptor::make(std::move(vars), TermOrder::block_elimination(1));
    t.inMap.resize(amb->nvars());
    for (std::size_t i = 0; i < amb->nvars(); ++i)
        t.inMap[i] = static_cast<int>(i) + 1;
    t.w = Polynomial::variable(t.ext, 0);
    t.oneMinusW = Polynomial::constant(t.ext, Rational(1)) - t.w;
    return t;
}

}  // namespace

IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_intersection");
    const RingPtr& ring = I.ring();
    TagRing tag = make_tag_ring(ring);

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        gens.push_back(tag.w * lift_to_ambient(f).map_variables(tag.ext, tag.inMap));
    for (const auto& g : J.generators())
        gens.push_back(tag.oneMinusW * lift_to_ambient(g).map_variables(tag.ext, tag.inMap));
    for (const auto& q : ring->quotient_relations())
        gens.push_back(q.map_variables(tag.ext, tag.inMap));

    GroebnerBasis gb = buchberger(gens, tag.ext, TermOrder::block_elimination(1));

    // variables of the extended ring back into the ambient ring; @w drops
    std::vector<int> outMap(tag.ext->nvars());
    outMap[0] = -1;
    for (std::size_t i = 1; i < tag.ext->nvars(); ++i)
        outMap[i] = static_cast<int>(i) - 1;

    std::vector<Polynomial> result;
    for (const auto& e : gb.elements) {
        auto restricted = e[0].try_restrict(ring->ambient(), outMap);
        if (restricted)
            result.push_back(project_to_ring(*restricted, ring));
    }
    return IdealHandle(ring, std::move(result));
}

IdealHandle ideal_colon(const IdealHandle& I, const Polynomial& f)
{
    require_same_ring(I.ring(), f.ring(), "ideal_colon");
    Polynomial fr = reduce_mod_ring(f);
    if (fr.is_zero())
        throw InvalidArgumentError("ideal_colon: divisor is zero");

    std::vector<FreeModuleElem> list;
    list.push_back(FreeModuleElem::from_polynomial(fr));
    for (const auto& g : I.generators())
        list.push_back(FreeModuleElem::from_polynomial(g));

    std::vector<Polynomial> gens;
    for (const auto& row : kernel_of_list(list, I.ring(), 1))
        gens.push_back(row[0]);
    return IdealHandle(I.ring(), std::move(gens));
}

bool membership(const Polynomial& f, const IdealHandle& I)
{
    require_same_ring(f.ring(), I.ring(), "membership");
    return normal_form(f, I.groebner()).is_zero();
}

bool ideal_equal(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "ideal_equal");
    return I.groebner().elements == J.groebner().elements;
}

bool is_subideal(const IdealHandle& I, const IdealHandle& J)
{
    require_same_ring(I.ring(), J.ring(), "is_subideal");
    const GroebnerBasis& gb = J.groebner();
    for (const auto& g : I.generators())
        if (!normal_form(g, gb).is_zero())
            return false;
    return true;
}

}  // namespace transversal
