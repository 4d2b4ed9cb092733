#pragma once

#include <vector>

#include "transversal/poly_io.hpp"
#include "transversal/polynomial.hpp"

namespace transversal {

/// Element of a free module A^r, stored as one polynomial per component.
class FreeModuleElem {
public:
    FreeModuleElem() = default;
    FreeModuleElem(RingPtr ring, std::size_t rank);
    explicit FreeModuleElem(std::vector<Polynomial> components);
    static FreeModuleElem basis(const RingPtr& ring, std::size_t rank, std::size_t index);
    static FreeModuleElem from_polynomial(const Polynomial& p);  // rank 1

    const RingPtr& ring() const { return ring_; }
    std::size_t rank() const { return comps_.size(); }
    const Polynomial& operator[](std::size_t i) const { return comps_[i]; }
    Polynomial& operator[](std::size_t i) { return comps_[i]; }
    const std::vector<Polynomial>& components() const { return comps_; }

    bool is_zero() const;
    long degree() const;  // max over components; -1 if zero

    FreeModuleElem operator+(const FreeModuleElem& o) const;
    FreeModuleElem operator-(const FreeModuleElem& o) const;
    FreeModuleElem operator-() const;
    FreeModuleElem scaled(const Polynomial& f) const;
    FreeModuleElem times_term(const Monomial& m, const Rational& c) const;

    bool operator==(const FreeModuleElem& o) const;

    /// `[f, g, ...]` with the polynomial text syntax per slot.
    std::string to_string() const;

private:
    RingPtr ring_;
    std::vector<Polynomial> comps_;
};

}  // namespace transversal
