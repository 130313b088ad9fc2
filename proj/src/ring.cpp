#include "syzkit/ring.hpp"

#include <cctype>
#include <set>

namespace syzkit {

bool valid_variable_name(const std::string& name) {
    if (name.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

RingContext::RingContext(std::vector<std::string> vars, MonomialOrder order)
    : vars_(std::move(vars)), order_(order) {
    for (int i = 0; i < static_cast<int>(vars_.size()); ++i) index_[vars_[i]] = i;
}

RingPtr RingContext::create(std::vector<std::string> variables, MonomialOrder order) {
    if (variables.empty()) throw std::invalid_argument("a ring needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (!valid_variable_name(v)) throw std::invalid_argument("invalid variable name: '" + v + "'");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: '" + v + "'");
    }
    return RingPtr(new RingContext(std::move(variables), order));
}

}  // namespace syzkit
