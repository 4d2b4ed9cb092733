#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "transversal/monomial.hpp"
#include "transversal/rational.hpp"
#include "transversal/ring.hpp"

namespace transversal {

/// Sparse exact polynomial. Terms are kept in a canonical container
/// order with no zero coefficients, so operator== is semantic equality.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr ring, TermMap terms);

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, std::size_t index, int power = 1);
    static Polynomial term(const RingPtr& ring, Monomial m, Rational c);

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    long degree() const;
    long weighted_degree(std::span<const long> weights) const;
    bool is_homogeneous(std::span<const long> weights) const;
    bool is_homogeneous() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    /// Substitutes rational values for all variables.
    Rational evaluate(std::span<const Rational> point) const;

    /// Image under a variable-index map into a (usually larger) ring.
    /// varMap[i] = index of variable i in `target`.
    Polynomial map_variables(const RingPtr& target, std::span<const int> varMap) const;

    /// Inverse of map_variables when every used variable is mapped;
    /// returns nullopt if a term uses a variable not in the map image.
    std::optional<Polynomial> try_restrict(const RingPtr& target,
                                           std::span<const int> varMap) const;

private:
    void insert_term(const Monomial& m, const Rational& c);

    RingPtr ring_;
    TermMap terms_;

    friend class PolynomialBuilder;
};

/// Accumulates terms without per-insert canonical-form churn.
class PolynomialBuilder {
public:
    explicit PolynomialBuilder(RingPtr ring) : poly_(std::move(ring)) {}
    void add(const Monomial& m, const Rational& c);
    Polynomial take();

private:
    Polynomial poly_;
};

}  // namespace transversal
