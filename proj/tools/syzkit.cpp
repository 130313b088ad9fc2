#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "syzkit/report.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct CommonFlags {
    std::string input_path;
    std::string fixture_name;
    std::vector<std::string> points;
    std::string output_path;
    std::string order = "grevlex";
    std::uint64_t seed = 0;
    int samples = 0;
    CLI::Option* seed_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    bool timings = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool needs_input = true) {
    auto* input = cmd->add_option("--input", f.input_path, "path to a syzkit/1 input document");
    auto* fixture = cmd->add_option("--fixture", f.fixture_name, "name of a bundled fixture");
    if (needs_input) {
        input->excludes(fixture);
        fixture->excludes(input);
    }
    cmd->add_option("--point", f.points, "evaluation point \"c1,...,cn\" (repeatable)");
    f.seed_opt = cmd->add_option("--seed", f.seed, "seed for deterministic sampling");
    f.samples_opt = cmd->add_option("--samples", f.samples, "number of sampled points");
    cmd->add_option("--order", f.order, "ring monomial order")
        ->check(CLI::IsMember({"grevlex", "lex"}));
    cmd->add_option("--output", f.output_path, "write the report here instead of stdout");
    cmd->add_flag("--timings", f.timings, "include wall-clock timing in the report");
}

std::string resolve_input(const CommonFlags& f) {
    if (!f.fixture_name.empty()) return syzkit::load_fixture(f.fixture_name).document;
    if (!f.input_path.empty()) return slurp(f.input_path);
    throw std::runtime_error("either --input or --fixture is required");
}

syzkit::RunOptions to_options(const CommonFlags& f) {
    syzkit::RunOptions opts;
    opts.order = f.order == "lex" ? syzkit::OrderKind::lex : syzkit::OrderKind::grevlex;
    if (f.seed_opt && f.seed_opt->count() > 0) opts.seed = f.seed;
    if (f.samples_opt && f.samples_opt->count() > 0) opts.sample_count = f.samples;
    opts.timings = f.timings;
    for (const auto& p : f.points) {
        std::vector<std::string> coords;
        std::string cur;
        for (char c : p) {
            if (c == ',') {
                coords.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        coords.push_back(cur);
        opts.extra_points.push_back(std::move(coords));
    }
    return opts;
}

int emit(const syzkit::RunOutcome& outcome, const CommonFlags& f) {
    std::string text = outcome.report.dump(2) + "\n";
    if (!f.output_path.empty()) {
        std::ofstream out(f.output_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file: " + f.output_path);
        out << text;
    } else {
        std::cout << text;
    }
    return outcome.exit_code;
}

int run_fixture_command(const CommonFlags& f) {
    using syzkit::ordered_json;
    if (!f.fixture_name.empty()) {
        syzkit::Fixture fx = syzkit::load_fixture(f.fixture_name);
        if (!f.output_path.empty()) {
            std::ofstream out(f.output_path, std::ios::binary);
            out << fx.document;
        } else {
            std::cout << fx.document;
        }
        return 0;
    }
    ordered_json j = ordered_json::array();
    for (const auto& name : syzkit::fixture_names()) {
        syzkit::Fixture fx = syzkit::load_fixture(name);
        ordered_json e;
        e["name"] = fx.name;
        e["description"] = fx.description;
        e["rows"] = fx.matrix.rows;
        e["cols"] = fx.matrix.cols;
        j.push_back(e);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"syzkit: exact analysis of constant-coefficient PDE operators"};
    app.require_subcommand(1);

    CommonFlags syzygy_flags, classify_flags, decompose_flags, verify_flags, fixture_flags;
    auto* syzygy = app.add_subcommand("syzygy", "compute the syzygy matrix");
    add_common(syzygy, syzygy_flags);
    auto* classify = app.add_subcommand("classify", "rank, ellipticity and controllability report");
    add_common(classify, classify_flags);
    auto* decompose =
        app.add_subcommand("decompose", "controllable-uncontrollable decomposition with checks");
    add_common(decompose, decompose_flags);
    auto* verify = app.add_subcommand("verify", "pointwise exactness at chosen and sampled points");
    add_common(verify, verify_flags);
    auto* fixture = app.add_subcommand("fixture", "list bundled fixtures or dump one");
    add_common(fixture, fixture_flags, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (syzygy->parsed())
            return emit(syzkit::run_syzygy(resolve_input(syzygy_flags), to_options(syzygy_flags)),
                        syzygy_flags);
        if (classify->parsed())
            return emit(
                syzkit::run_classify(resolve_input(classify_flags), to_options(classify_flags)),
                classify_flags);
        if (decompose->parsed())
            return emit(
                syzkit::run_decompose(resolve_input(decompose_flags), to_options(decompose_flags)),
                decompose_flags);
        if (verify->parsed())
            return emit(syzkit::run_verify(resolve_input(verify_flags), to_options(verify_flags)),
                        verify_flags);
        if (fixture->parsed()) return run_fixture_command(fixture_flags);
    } catch (const syzkit::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
