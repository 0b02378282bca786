#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "malg/commands.hpp"
#include "malg/error.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw malg::ParseError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int emit(const malg::Report& r) {
    std::cout << r.text;
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on finite Boolean and measure algebras"};
    app.require_subcommand(1);

    std::vector<std::string> classify_inputs;
    std::size_t exhaustive_bound = 8;
    auto* classify = app.add_subcommand(
        "classify", "Maharam signature of one or two descriptions, with isomorphism verdict");
    classify->add_option("--input", classify_inputs, "description file (repeat for a pair)")
        ->required()
        ->expected(1, 2);
    classify->add_option("--exhaustive-bound", exhaustive_bound,
                         "atom limit for the brute-force witness search");

    std::string rn_input;
    auto* rn = app.add_subcommand("rn", "density-existence conditions for a measure pair");
    rn->add_option("--input", rn_input, "measure_pair file")->required();

    std::string stone_input;
    auto* stone = app.add_subcommand("stone", "Stone points and round-trip verdict");
    stone->add_option("--input", stone_input, "algebra file")->required();

    std::string cantor_input;
    std::optional<std::uint32_t> cantor_depth;
    auto* cantor =
        app.add_subcommand("cantor", "canonical form, measure, and interval image of a cylinder");
    cantor->add_option("--input", cantor_input, "cylinder file")->required();
    cantor->add_option("--depth", cantor_depth, "also present the set refined to this depth");

    std::string haar_input;
    std::string haar_candidate;
    auto* haar = app.add_subcommand("haar", "invariant-measure uniqueness for a finite group");
    haar->add_option("--input", haar_input, "group file (Cayley table)")->required();
    auto* cand_opt = haar->add_option("--candidate", haar_candidate, "candidate measure file");

    std::string pathology_input;
    std::uint64_t pathology_iters = 3;
    auto* pathology = app.add_subcommand(
        "pathology", "iterate the no-supremum step in the finite/cofinite algebra");
    auto* path_opt =
        pathology->add_option("--input", pathology_input, "fincof file (default: the unit)");
    pathology->add_option("--iters", pathology_iters, "number of refutation steps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*classify) {
            std::optional<std::string> second;
            if (classify_inputs.size() == 2) second = read_file(classify_inputs[1]);
            return emit(malg::cmd_classify(read_file(classify_inputs[0]), second,
                                           exhaustive_bound));
        }
        if (*rn) return emit(malg::cmd_rn(read_file(rn_input)));
        if (*stone) return emit(malg::cmd_stone(read_file(stone_input)));
        if (*cantor) return emit(malg::cmd_cantor(read_file(cantor_input), cantor_depth));
        if (*haar) {
            std::optional<std::string> cand;
            if (*cand_opt) cand = read_file(haar_candidate);
            return emit(malg::cmd_haar(read_file(haar_input), cand));
        }
        if (*pathology) {
            std::optional<std::string> start;
            if (*path_opt) start = read_file(pathology_input);
            return emit(malg::cmd_pathology(start, pathology_iters));
        }
    } catch (const malg::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const malg::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
