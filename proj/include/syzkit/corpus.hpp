#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzkit/classify.hpp"
#include "syzkit/io.hpp"

namespace syzkit {

// A point a fixture pins down, with what is known about the evaluation there.
struct DesignatedPoint {
    std::vector<std::string> coords;
    std::optional<int> rank;
    std::optional<ExactnessRelation> relation;
};

// Machine-readable fixture: the operator in the CLI input format plus the
// verdicts and evaluation points the suite holds it to.
struct Fixture {
    std::string name;
    std::string description;
    std::string document;  // syzkit/1 input text

    RingPtr ring;
    PolyMatrix matrix;

    std::optional<int> generic_rank;
    std::optional<Controllability> controllability;
    std::optional<bool> c_elliptic;
    std::optional<bool> c_constant_rank;
    std::optional<RealVerdict> r_ellipticity;
    std::optional<RealVerdict> r_constant_rank;

    // golden modules, compared up to module equality
    std::vector<std::vector<std::string>> syzygy_columns;
    std::vector<std::vector<std::string>> controllable_rows;
    std::vector<std::string> conductor_generators;
    std::optional<int> conductor_exponent;

    std::vector<DesignatedPoint> points;

    Fixture(std::string n, std::string d, std::string doc)
        : name(std::move(n)),
          description(std::move(d)),
          document(std::move(doc)),
          matrix(realize(document)) {
        ring = matrix.ring;
    }

private:
    static PolyMatrix realize(const std::string& doc) {
        return realize_input(parse_input_document(doc)).matrix;
    }
};

const std::vector<std::string>& fixture_names();
Fixture load_fixture(const std::string& name);

}  // namespace syzkit
