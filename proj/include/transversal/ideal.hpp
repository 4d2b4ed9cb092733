#pragma once

#include <memory>
#include <mutex>

#include "transversal/groebner.hpp"

namespace transversal {

/// Immutable ideal handle: normalized generators plus a compute-once
/// cache of reduced Groebner bases keyed by term order.
class IdealHandle {
public:
    IdealHandle() = default;
    IdealHandle(RingPtr ring, std::vector<Polynomial> generators);
    static IdealHandle zero(const RingPtr& ring) { return IdealHandle(ring, {}); }
    static IdealHandle unit(const RingPtr& ring);

    const RingPtr& ring() const { return data_->ring; }
    const std::vector<Polynomial>& generators() const { return data_->gens; }
    bool has_generators() const { return !data_->gens.empty(); }

    /// Reduced basis under `ord`, computed once per order and shared.
    const GroebnerBasis& groebner(const TermOrder& ord) const;
    const GroebnerBasis& groebner() const;

    bool is_zero_ideal() const;
    bool is_unit_ideal() const;

private:
    struct Data {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::mutex mutex;
        mutable std::vector<std::pair<TermOrder, std::shared_ptr<const GroebnerBasis>>> cache;
    };
    std::shared_ptr<const Data> data_;
};

IdealHandle ideal_sum(const IdealHandle& I, const IdealHandle& J);
IdealHandle ideal_product(const IdealHandle& I, const IdealHandle& J);
/// p = 0 returns the unit ideal by convention.
IdealHandle ideal_power(const IdealHandle& I, int p);
/// Via the auxiliary-variable construction: eliminate w from w*I + (1-w)*J.
IdealHandle ideal_intersection(const IdealHandle& I, const IdealHandle& J);
/// (I : f) = { g : g*f in I }.
IdealHandle ideal_colon(const IdealHandle& I, const Polynomial& f);

bool membership(const Polynomial& f, const IdealHandle& I);
bool ideal_equal(const IdealHandle& I, const IdealHandle& J);
bool is_subideal(const IdealHandle& I, const IdealHandle& J);  // I contained in J

}  // namespace transversal
