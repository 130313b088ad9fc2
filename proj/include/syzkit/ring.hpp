#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "syzkit/errors.hpp"
#include "syzkit/monomial.hpp"

namespace syzkit {

class RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// Q[x_1,...,x_n] together with the monomial order every polynomial in the
// context is normalized against. Immutable; identity is pointer identity.
class RingContext {
public:
    static RingPtr create(std::vector<std::string> variables, MonomialOrder order = {});

    const std::vector<std::string>& variables() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const MonomialOrder& order() const { return order_; }

    // -1 when the name is not a variable of this ring.
    int var_index(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b); }

private:
    RingContext(std::vector<std::string> vars, MonomialOrder order);
    std::vector<std::string> vars_;
    MonomialOrder order_;
    std::unordered_map<std::string, int> index_;
};

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() != b.get()) throw ContextError("values belong to different ring contexts");
}

bool valid_variable_name(const std::string& name);

}  // namespace syzkit
