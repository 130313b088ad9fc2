#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syzkit/module.hpp"
#include "syzkit/rational.hpp"

namespace syzkit {

// The document every command consumes; schema "syzkit/1".
struct InputDocument {
    std::vector<std::string> variables;
    std::vector<std::vector<std::string>> matrix;
    std::vector<std::vector<std::string>> points;
    std::optional<std::uint64_t> seed;
    std::optional<int> sample_count;
};

InputDocument parse_input_document(const std::string& json_text);
std::string render_input_document(const InputDocument& doc);

struct LoadedInput {
    RingPtr ring;
    PolyMatrix matrix;
    std::vector<std::vector<GaussianRational>> points;
};

LoadedInput realize_input(const InputDocument& doc, OrderKind order = OrderKind::grevlex);

std::string fnv1a64_digest(const std::string& bytes);

}  // namespace syzkit
