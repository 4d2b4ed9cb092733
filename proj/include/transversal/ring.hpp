#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "transversal/term_order.hpp"

namespace transversal {

class Polynomial;
class RingDescriptor;
using RingPtr = std::shared_ptr<const RingDescriptor>;

/// A polynomial ring QQ[x1..xn] or a quotient of one.  Quotients carry
/// their relations and a pointer to the free ambient ring; computations
/// lift to the ambient ring and append the relations.
class RingDescriptor : public std::enable_shared_from_this<RingDescriptor> {
public:
    static RingPtr make(std::vector<std::string> variables,
                        TermOrder defaultOrder = TermOrder::degrevlex());
    static RingPtr make_quotient(const RingPtr& freeRing, std::vector<Polynomial> relations);

    const std::vector<std::string>& variables() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::string& variable_name(std::size_t i) const { return vars_[i]; }
    /// -1 when absent.
    int variable_index(const std::string& name) const;

    bool is_quotient() const { return !quotient_.empty(); }
    const std::vector<Polynomial>& quotient_relations() const { return quotient_; }
    /// The free polynomial ring on the same variables (this, if free).
    RingPtr ambient() const;

    const TermOrder& default_order() const { return order_; }

    std::string description() const;

    // Compute-once slot for the reduced GB of the quotient relations
    // (type-erased; owned by the groebner layer).
    mutable std::mutex cache_mutex;
    mutable std::shared_ptr<const void> quotient_gb_cache;

private:
    RingDescriptor() = default;

    std::vector<std::string> vars_;
    std::vector<Polynomial> quotient_;  // over the ambient free ring
    RingPtr ambient_;                   // null when this ring is free
    TermOrder order_ = TermOrder::degrevlex();
};

/// Structural equality: same variables and same quotient relations.
bool same_ring(const RingPtr& a, const RingPtr& b);

void require_same_ring(const RingPtr& a, const RingPtr& b, const char* where);

}  // namespace transversal
