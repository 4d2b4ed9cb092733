#include "transversal/polynomial.hpp"

#include "transversal/errors.hpp"

namespace transversal {

Polynomial::Polynomial(RingPtr ring, TermMap terms) : ring_(std::move(ring))
{
    for (auto& [m, c] : terms) {
        if (m.size() != ring_->nvars())
            throw DimensionError("monomial does not fit the ring");
        if (sgn(c) != 0)
            terms_.emplace(m, c);
    }
}

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c)
{
    Polynomial p(ring);
    if (sgn(c) != 0)
        p.terms_.emplace(Monomial::one(ring->nvars()), c);
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t index, int power)
{
    if (index >= ring->nvars())
        throw DimensionError("variable index out of range");
    std::vector<int> e(ring->nvars(), 0);
    e[index] = power;
    return term(ring, Monomial(std::move(e)), Rational(1));
}

Polynomial Polynomial::term(const RingPtr& ring, Monomial m, Rational c)
{
    if (m.size() != ring->nvars())
        throw DimensionError("monomial does not fit the ring");
    Polynomial p(ring);
    if (sgn(c) != 0)
        p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

long Polynomial::degree() const
{
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree());
    return d;
}

long Polynomial::weighted_degree(std::span<const long> weights) const
{
    long d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.weighted_degree(weights));
    return d;
}

bool Polynomial::is_homogeneous(std::span<const long> weights) const
{
    if (terms_.empty())
        return true;
    long d = terms_.begin()->first.weighted_degree(weights);
    for (const auto& [m, c] : terms_)
        if (m.weighted_degree(weights) != d)
            return false;
    return true;
}

bool Polynomial::is_homogeneous() const
{
    std::vector<long> w(ring_->nvars(), 1);
    return is_homogeneous(w);
}

void Polynomial::insert_term(const Monomial& m, const Rational& c)
{
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (sgn(c) != 0)
            terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    require_same_ring(ring_, o.ring_, "poly add");
    for (const auto& [m, c] : o.terms_)
        insert_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    require_same_ring(ring_, o.ring_, "poly sub");
    for (const auto& [m, c] : o.terms_)
        insert_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const
{
    Polynomial r = *this;
    r += o;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const
{
    Polynomial r = *this;
    r -= o;
    return r;
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(ring_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const
{
    require_same_ring(ring_, o.ring_, "poly mul");
    Polynomial r(ring_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.insert_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const
{
    Polynomial r(ring_);
    if (sgn(c) == 0)
        return r;
    for (const auto& [m, cc] : terms_)
        r.terms_.emplace(m, cc * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const
{
    Polynomial r(ring_);
    if (sgn(c) == 0)
        return r;
    for (const auto& [mm, cc] : terms_)
        r.terms_.emplace(mm * m, cc * c);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const
{
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const
{
    if (point.size() != ring_->nvars())
        throw DimensionError("evaluation point length mismatch");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < point.size(); ++i)
            for (int e = 0; e < m[i]; ++e)
                v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::map_variables(const RingPtr& target, std::span<const int> varMap) const
{
    if (varMap.size() != ring_->nvars())
        throw DimensionError("variable map length mismatch");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t i = 0; i < varMap.size(); ++i) {
            if (m[i] != 0) {
                if (varMap[i] < 0 || static_cast<std::size_t>(varMap[i]) >= target->nvars())
                    throw DimensionError("variable map target out of range");
                e[static_cast<std::size_t>(varMap[i])] += m[i];
            }
        }
        r.insert_term(Monomial(std::move(e)), c);
    }
    return r;
}

std::optional<Polynomial> Polynomial::try_restrict(const RingPtr& target,
                                                   std::span<const int> varMap) const
{
    // varMap[i] = target index of source variable i, or -1 when dropped.
    if (varMap.size() != ring_->nvars())
        throw DimensionError("variable map length mismatch");
    Polynomial r(target);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e(target->nvars(), 0);
        for (std::size_t i = 0; i < varMap.size(); ++i) {
            if (m[i] != 0) {
                if (varMap[i] < 0)
                    return std::nullopt;
                e[static_cast<std::size_t>(varMap[i])] += m[i];
            }
        }
        r.insert_term(Monomial(std::move(e)), c);
    }
    return r;
}

void PolynomialBuilder::add(const Monomial& m, const Rational& c)
{
    poly_.insert_term(m, c);
}

Polynomial PolynomialBuilder::take()
{
    return std::move(poly_);
}

}  // namespace transversal
