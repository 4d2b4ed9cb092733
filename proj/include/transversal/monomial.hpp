#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "transversal/errors.hpp"

namespace transversal {

/// Exponent vector of fixed length (= number of ring variables).
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }

    std::size_t size() const { return exps_.size(); }
    int operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<int>& exponents() const { return exps_; }

    long degree() const;
    long weighted_degree(std::span<const long> weights) const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient o.divides(*this) must hold.
    Monomial operator/(const Monomial& o) const;

    friend Monomial lcm(const Monomial& a, const Monomial& b);
    friend Monomial gcd(const Monomial& a, const Monomial& b);
    friend bool coprime(const Monomial& a, const Monomial& b);

    // Container order only (used for canonical term maps); term orders
    // live in term_order.hpp.
    auto operator<=>(const Monomial& o) const = default;

private:
    void check_same_size(const Monomial& o) const
    {
        if (exps_.size() != o.exps_.size())
            throw DimensionError("monomial length mismatch");
    }

    std::vector<int> exps_;
};

}  // namespace transversal
