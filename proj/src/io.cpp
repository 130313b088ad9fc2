#include "syzkit/io.hpp"

#include <json.hpp>

#include <sstream>

namespace syzkit {

using ordered_json = nlohmann::ordered_json;

InputDocument parse_input_document(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object()) throw ParseError("input document must be a JSON object", 0);
    if (!j.contains("schema") || j["schema"] != "syzkit/1")
        throw ParseError("input document must declare \"schema\": \"syzkit/1\"", 0);
    InputDocument doc;
    if (!j.contains("variables") || !j["variables"].is_array() || j["variables"].empty())
        throw ParseError("missing or empty \"variables\" list", 0);
    for (const auto& v : j["variables"]) {
        if (!v.is_string()) throw ParseError("variable names must be strings", 0);
        doc.variables.push_back(v.get<std::string>());
    }
    if (!j.contains("matrix") || !j["matrix"].is_array() || j["matrix"].empty())
        throw ParseError("missing or empty \"matrix\"", 0);
    std::size_t width = 0;
    for (const auto& row : j["matrix"]) {
        if (!row.is_array() || row.empty()) throw ParseError("matrix rows must be nonempty arrays", 0);
        if (width == 0) width = row.size();
        if (row.size() != width) throw ParseError("matrix rows must all have the same length", 0);
        std::vector<std::string> r;
        for (const auto& e : row) {
            if (!e.is_string()) throw ParseError("matrix entries must be polynomial strings", 0);
            r.push_back(e.get<std::string>());
        }
        doc.matrix.push_back(std::move(r));
    }
    if (j.contains("points")) {
        if (!j["points"].is_array()) throw ParseError("\"points\" must be an array", 0);
        for (const auto& pt : j["points"]) {
            if (!pt.is_array() || pt.size() != doc.variables.size())
                throw ParseError("each point needs one coordinate per variable", 0);
            std::vector<std::string> coords;
            for (const auto& c : pt) {
                if (!c.is_string()) throw ParseError("coordinates must be strings", 0);
                coords.push_back(c.get<std::string>());
            }
            doc.points.push_back(std::move(coords));
        }
    }
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) doc.sample_count = j["samples"].get<int>();
    return doc;
}

std::string render_input_document(const InputDocument& doc) {
    ordered_json j;
    j["schema"] = "syzkit/1";
    j["variables"] = doc.variables;
    j["matrix"] = doc.matrix;
    if (!doc.points.empty()) j["points"] = doc.points;
    if (doc.seed) j["seed"] = *doc.seed;
    if (doc.sample_count) j["samples"] = *doc.sample_count;
    return j.dump(2) + "\n";
}

LoadedInput realize_input(const InputDocument& doc, OrderKind order) {
    RingPtr ring = RingContext::create(doc.variables, MonomialOrder{order, 0});
    int rows = static_cast<int>(doc.matrix.size());
    int cols = static_cast<int>(doc.matrix.front().size());
    PolyMatrix A(ring, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            try {
                A.at(i, j) = parse_poly(doc.matrix[i][j], ring);
            } catch (const ParseError& e) {
                throw ParseError("matrix row " + std::to_string(i + 1) + ", column " +
                                     std::to_string(j + 1) + ": " + e.what(),
                                 e.position);
            }
        }
    LoadedInput loaded{std::move(ring), std::move(A), {}};
    for (std::size_t p = 0; p < doc.points.size(); ++p) {
        std::vector<GaussianRational> coords;
        for (const auto& c : doc.points[p]) {
            try {
                coords.push_back(parse_gaussian(c));
            } catch (const ParseError& e) {
                throw ParseError("point " + std::to_string(p + 1) + ": " + e.what(), e.position);
            }
        }
        loaded.points.push_back(std::move(coords));
    }
    return loaded;
}

std::string fnv1a64_digest(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    std::ostringstream os;
    os << "fnv1a64:" << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace syzkit
