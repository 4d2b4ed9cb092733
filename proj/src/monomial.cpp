#include "transversal/monomial.hpp"

#include <numeric>

namespace transversal {

long Monomial::degree() const
{
    return std::accumulate(exps_.begin(), exps_.end(), 0L);
}

long Monomial::weighted_degree(std::span<const long> weights) const
{
    if (weights.size() != exps_.size())
        throw DimensionError("weight vector length mismatch");
    long d = 0;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        d += weights[i] * exps_[i];
    return d;
}

bool Monomial::is_one() const
{
    for (int e : exps_)
        if (e != 0)
            return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const
{
    check_same_size(o);
    std::vector<int> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i)
        r[i] = exps_[i] + o.exps_[i];
    return Monomial(std::move(r));
}

bool Monomial::divides(const Monomial& o) const
{
    check_same_size(o);
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i])
            return false;
    return true;
}

Monomial Monomial::operator/(const Monomial& o) const
{
    check_same_size(o);
    std::vector<int> r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        r[i] = exps_[i] - o.exps_[i];
        if (r[i] < 0)
            throw InvalidArgumentError("monomial quotient is not exact");
    }
    return Monomial(std::move(r));
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    a.check_same_size(b);
    std::vector<int> r(a.exps_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::max(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(r));
}

Monomial gcd(const Monomial& a, const Monomial& b)
{
    a.check_same_size(b);
    std::vector<int> r(a.exps_.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = std::min(a.exps_[i], b.exps_[i]);
    return Monomial(std::move(r));
}

bool coprime(const Monomial& a, const Monomial& b)
{
    a.check_same_size(b);
    for (std::size_t i = 0; i < a.exps_.size(); ++i)
        if (a.exps_[i] > 0 && b.exps_[i] > 0)
            return false;
    return true;
}

}  // namespace transversal
