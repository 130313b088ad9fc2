#include "syzkit/corpus.hpp"

#include <map>

namespace syzkit {

namespace {

std::string doc(const std::string& vars, const std::string& rows,
                const std::string& extra = "") {
    std::string out = "{\n  \"schema\": \"syzkit/1\",\n  \"variables\": [" + vars + "],\n";
    out += "  \"matrix\": [\n" + rows + "\n  ]";
    if (!extra.empty()) out += ",\n" + extra;
    out += "\n}\n";
    return out;
}

Fixture make_a1() {
    Fixture f("a1", "diagonal first-order operator diag(x1, x2)",
              doc("\"x1\", \"x2\"",
                  "    [\"x1\", \"0\"],\n    [\"0\", \"x2\"]",
                  "  \"points\": [[\"1\", \"0\"], [\"1\", \"1\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.points = {{{"1", "0"}, 1, ExactnessRelation::strict_superset},
                {{"1", "1"}, 2, ExactnessRelation::equal}};
    return f;
}

Fixture make_a2() {
    Fixture f("a2", "planar wave operator x1^2 - x2^2",
              doc("\"x1\", \"x2\"", "    [\"x1^2-x2^2\"]",
                  "  \"points\": [[\"1\", \"1\"], [\"1\", \"0\"]]"));
    f.generic_rank = 1;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.points = {{{"1", "1"}, 0, ExactnessRelation::strict_superset},
                {{"1", "0"}, 1, ExactnessRelation::equal}};
    return f;
}

Fixture make_a3() {
    Fixture f("a3", "planar Laplace operator x1^2 + x2^2",
              doc("\"x1\", \"x2\"", "    [\"x1^2+x2^2\"]",
                  "  \"points\": [[\"1\", \"i\"], [\"1\", \"0\"]]"));
    f.generic_rank = 1;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::inconclusive;
    f.r_constant_rank = RealVerdict::inconclusive;
    f.conductor_generators = {"x1^2+x2^2"};
    f.conductor_exponent = 1;
    f.points = {{{"1", "i"}, 0, ExactnessRelation::strict_superset},
                {{"1", "0"}, 1, ExactnessRelation::equal}};
    return f;
}

Fixture make_a4() {
    Fixture f("a4", "three-dimensional second-order operator with vanishing row sums",
              doc("\"x1\", \"x2\", \"x3\"",
                  "    [\"x1^2+x2^2\", \"0\", \"-x1^2-x3^2\"],\n"
                  "    [\"0\", \"-x2^2-x3^2\", \"x1^2+x3^2\"],\n"
                  "    [\"-x1^2-x2^2\", \"x2^2+x3^2\", \"0\"]",
                  "  \"points\": [[\"1\", \"0\", \"0\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::controllable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::inconclusive;
    return f;
}

Fixture make_a5() {
    Fixture f("a5", "curl operator in three variables",
              doc("\"x1\", \"x2\", \"x3\"",
                  "    [\"0\", \"x3\", \"-x2\"],\n"
                  "    [\"-x3\", \"0\", \"x1\"],\n"
                  "    [\"x2\", \"-x1\", \"0\"]",
                  "  \"points\": [[\"1\", \"0\", \"0\"], [\"1\", \"2\", \"3\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::controllable;
    f.c_elliptic = false;
    f.c_constant_rank = true;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::certified_via_complex;
    f.syzygy_columns = {{"x1", "x2", "x3"}};
    f.points = {{{"1", "0", "0"}, 2, ExactnessRelation::equal},
                {{"1", "2", "3"}, 2, ExactnessRelation::equal}};
    return f;
}

Fixture make_a6() {
    Fixture f("a6", "gradient operator in two variables",
              doc("\"x1\", \"x2\"", "    [\"x1\"],\n    [\"x2\"]",
                  "  \"points\": [[\"1\", \"0\"], [\"2\", \"3\"]]"));
    f.generic_rank = 1;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = true;
    f.c_constant_rank = true;
    f.r_ellipticity = RealVerdict::certified_via_complex;
    f.r_constant_rank = RealVerdict::certified_via_complex;
    f.points = {{{"1", "0"}, 1, ExactnessRelation::equal},
                {{"2", "3"}, 1, ExactnessRelation::equal}};
    return f;
}

Fixture make_a7() {
    Fixture f("a7", "stacked wave and Laplace symbols",
              doc("\"x1\", \"x2\"", "    [\"x1^2-x2^2\"],\n    [\"x1^2+x2^2\"]",
                  "  \"points\": [[\"1\", \"1\"], [\"1\", \"i\"]]"));
    f.generic_rank = 1;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = true;
    f.c_constant_rank = true;
    f.r_ellipticity = RealVerdict::certified_via_complex;
    f.r_constant_rank = RealVerdict::certified_via_complex;
    f.points = {{{"1", "1"}, 1, ExactnessRelation::equal},
                {{"1", "i"}, 1, ExactnessRelation::equal}};
    return f;
}

Fixture make_a8() {
    Fixture f("a8", "three-row first-order elliptic operator on two fields",
              doc("\"x1\", \"x2\"",
                  "    [\"x1\", \"0\"],\n    [\"0\", \"x2\"],\n    [\"x2\", \"x1\"]",
                  "  \"points\": [[\"1\", \"0\"], [\"1\", \"1\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = true;
    f.c_constant_rank = true;
    f.r_ellipticity = RealVerdict::certified_via_complex;
    f.r_constant_rank = RealVerdict::certified_via_complex;
    f.points = {{{"1", "0"}, 2, ExactnessRelation::equal},
                {{"1", "1"}, 2, ExactnessRelation::equal}};
    return f;
}

Fixture make_euler() {
    Fixture f("euler", "linearized compressible Euler system in two space dimensions",
              doc("\"x1\", \"x2\", \"x3\"",
                  "    [\"x1\", \"0\", \"x2\", \"x3\", \"x2\"],\n"
                  "    [\"0\", \"x1\", \"-x3\", \"x2\", \"x3\"],\n"
                  "    [\"x2\", \"x3\", \"0\", \"0\", \"0\"]",
                  "  \"points\": [[\"0\", \"1\", \"0\"], [\"1\", \"0\", \"0\"]]"));
    f.generic_rank = 3;
    f.controllability = Controllability::controllable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.syzygy_columns = {
        {"x2*x3", "-x2^2", "-x1*x3", "x1*x2", "-x1*x3"},
        {"0", "0", "-x2^2+x3^2", "-2*x2*x3", "x2^2+x3^2"},
        {"x3^2", "-x2*x3", "-x1*x2", "-x1*x3", "x1*x2"},
    };
    f.conductor_generators = {"1"};
    f.conductor_exponent = 0;
    f.points = {{{"0", "1", "0"}, 3, ExactnessRelation::equal},
                {{"1", "0", "0"}, 2, ExactnessRelation::strict_superset}};
    return f;
}

Fixture make_euler_scaled_b() {
    // each row of the euler operator scaled by x1, x2 and x3 in turn
    Fixture f("euler-scaled-b",
              "euler operator with every row multiplied by each variable",
              doc("\"x1\", \"x2\", \"x3\"",
                  "    [\"x1^2\", \"0\", \"x1*x2\", \"x1*x3\", \"x1*x2\"],\n"
                  "    [\"0\", \"x1^2\", \"-x1*x3\", \"x1*x2\", \"x1*x3\"],\n"
                  "    [\"x1*x2\", \"x1*x3\", \"0\", \"0\", \"0\"],\n"
                  "    [\"x1*x2\", \"0\", \"x2^2\", \"x2*x3\", \"x2^2\"],\n"
                  "    [\"0\", \"x1*x2\", \"-x2*x3\", \"x2^2\", \"x2*x3\"],\n"
                  "    [\"x2^2\", \"x2*x3\", \"0\", \"0\", \"0\"],\n"
                  "    [\"x1*x3\", \"0\", \"x2*x3\", \"x3^2\", \"x2*x3\"],\n"
                  "    [\"0\", \"x1*x3\", \"-x3^2\", \"x2*x3\", \"x3^2\"],\n"
                  "    [\"x2*x3\", \"x3^2\", \"0\", \"0\", \"0\"]",
                  "  \"points\": [[\"0\", \"1\", \"0\"], [\"1\", \"0\", \"0\"]]"));
    f.generic_rank = 3;
    f.controllability = Controllability::mixed;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.conductor_generators = {"x1", "x2", "x3"};
    f.conductor_exponent = 2;
    f.points = {{{"0", "1", "0"}, 3, ExactnessRelation::equal},
                {{"1", "0", "0"}, 2, ExactnessRelation::strict_superset}};
    return f;
}

Fixture make_primary_decomp() {
    Fixture f("primary-decomp", "three-field operator whose quotient splits off an x-torsion part",
              doc("\"x\", \"y\", \"z\"",
                  "    [\"0\", \"-x*z^2\", \"x*y^2\"],\n"
                  "    [\"-x^2*y^2\", \"x^4\", \"0\"],\n"
                  "    [\"-x*y*z^2\", \"z^2\", \"x^3*y-y^2\"],\n"
                  "    [\"-x^2*z^2\", \"0\", \"x^4\"]",
                  "  \"points\": [[\"1\", \"1\", \"1\"], [\"0\", \"1\", \"1\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::mixed;
    f.syzygy_columns = {{"x^2", "y^2", "z^2"}};
    f.conductor_generators = {"x^2"};
    f.conductor_exponent = 1;
    f.points = {{{"1", "1", "1"}, 2, ExactnessRelation::equal},
                {{"0", "1", "1"}, 1, ExactnessRelation::strict_superset}};
    return f;
}

Fixture make_laplace_times_grad() {
    Fixture f("laplace-times-grad", "gradient row scaled by the planar Laplace symbol",
              doc("\"x\", \"y\"",
                  "    [\"x^3+x*y^2\", \"x^2*y+y^3\"]",
                  "  \"points\": [[\"1\", \"0\"], [\"0\", \"1\"], [\"1\", \"1\"], [\"3\", \"7\"], "
                  "[\"1\", \"i\"]],\n  \"samples\": 100"));
    f.generic_rank = 1;
    f.controllability = Controllability::mixed;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;  // one row, two unknowns: kernels everywhere
    f.r_constant_rank = RealVerdict::inconclusive;
    f.syzygy_columns = {{"y", "-x"}};
    f.controllable_rows = {{"x", "y"}};
    f.conductor_generators = {"x^2+y^2"};
    f.conductor_exponent = 1;
    f.points = {{{"1", "0"}, 1, ExactnessRelation::equal},
                {{"0", "1"}, 1, ExactnessRelation::equal},
                {{"1", "1"}, 1, ExactnessRelation::equal},
                {{"3", "7"}, 1, ExactnessRelation::equal},
                {{"1", "i"}, 0, ExactnessRelation::strict_superset}};
    return f;
}

Fixture make_wave_times_grad() {
    Fixture f("wave-times-grad", "gradient row scaled by the planar wave symbol",
              doc("\"x\", \"y\"",
                  "    [\"x^3-x*y^2\", \"x^2*y-y^3\"]",
                  "  \"points\": [[\"1\", \"1\"], [\"1\", \"0\"], [\"2\", \"1\"]]"));
    f.generic_rank = 1;
    f.controllability = Controllability::mixed;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.syzygy_columns = {{"y", "-x"}};
    f.controllable_rows = {{"x", "y"}};
    f.conductor_generators = {"x^2-y^2"};
    f.conductor_exponent = 1;
    f.points = {{{"1", "1"}, 0, ExactnessRelation::strict_superset},
                {{"1", "0"}, 1, ExactnessRelation::equal},
                {{"2", "1"}, 1, ExactnessRelation::equal}};
    return f;
}

Fixture make_ctrl_not_rcr() {
    Fixture f("ctrl-not-rcr",
              "rank-dropping operator whose quotients are torsion-free on both sides",
              doc("\"x1\", \"x2\", \"x3\", \"x4\"",
                  "    [\"x3\", \"x3\", \"0\", \"x3^2-x3*x4\", \"x4^2-x2*x4-x3*x4+x2*x3\"],\n"
                  "    [\"x1\", \"0\", \"x2*x4+x3*x4-x4^2-x2*x3\", \"0\", \"0\"],\n"
                  "    [\"0\", \"x2\", \"0\", \"x3*x4-x4^2\", \"0\"],\n"
                  "    [\"0\", \"0\", \"x2*x3\", \"x1*x3\", \"x1*x2\"]",
                  "  \"points\": [[\"2\", \"3\", \"5\", \"7\"], [\"1\", \"0\", \"0\", \"0\"]]"));
    f.generic_rank = 3;
    f.controllability = Controllability::controllable;
    f.points = {{{"2", "3", "5", "7"}, 3, ExactnessRelation::equal},
                {{"1", "0", "0", "0"}, 1, ExactnessRelation::strict_superset}};
    return f;
}

Fixture make_separate_convexity() {
    Fixture f("separate-convexity", "decoupled single-derivative constraints diag(x2, x1)",
              doc("\"x1\", \"x2\"",
                  "    [\"x2\", \"0\"],\n    [\"0\", \"x1\"]",
                  "  \"points\": [[\"1\", \"0\"], [\"1\", \"1\"]]"));
    f.generic_rank = 2;
    f.controllability = Controllability::uncontrollable;
    f.c_elliptic = false;
    f.c_constant_rank = false;
    f.r_ellipticity = RealVerdict::refuted;
    f.r_constant_rank = RealVerdict::refuted;
    f.points = {{{"1", "0"}, 1, ExactnessRelation::strict_superset},
                {{"1", "1"}, 2, ExactnessRelation::equal}};
    return f;
}

const std::map<std::string, Fixture (*)()>& registry() {
    static const std::map<std::string, Fixture (*)()> reg = {
        {"a1", make_a1},
        {"a2", make_a2},
        {"a3", make_a3},
        {"a4", make_a4},
        {"a5", make_a5},
        {"a6", make_a6},
        {"a7", make_a7},
        {"a8", make_a8},
        {"euler", make_euler},
        {"euler-scaled-b", make_euler_scaled_b},
        {"primary-decomp", make_primary_decomp},
        {"laplace-times-grad", make_laplace_times_grad},
        {"wave-times-grad", make_wave_times_grad},
        {"ctrl-not-rcr", make_ctrl_not_rcr},
        {"separate-convexity", make_separate_convexity},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Fixture load_fixture(const std::string& name) {
    auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown fixture: '" + name + "'");
    return it->second();
}

}  // namespace syzkit
