#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace malg {

// One pipeline run: the rendered report and the process exit code.
// Exit codes: 0 = computed; 1 = a domain condition failed (the report carries
// the witness); parse/usage errors are thrown as ParseError and mapped to 2
// by the front end.
struct Report {
    std::string text;
    int exit_code = 0;
};

// Each command takes raw file contents (already read from disk), never paths,
// so reports stay byte-identical wherever the files live.

// Maharam signature of one description; with a second input, the isomorphism
// verdict, plus a brute-force witness when both are purely atomic and within
// the exhaustive bound.
Report cmd_classify(const std::string& input1, const std::optional<std::string>& input2,
                    std::size_t exhaustive_bound);

// Density-existence conditions for a measure pair, the derivative when it
// exists, the witness atom when it does not.
Report cmd_rn(const std::string& input);

// Stone points of a finite algebra and the round-trip verdict.
Report cmd_stone(const std::string& input);

// Canonical form, exact measure, and interval image of a cylinder
// expression; optional refinement depth.
Report cmd_cantor(const std::string& input, std::optional<std::uint32_t> depth);

// Validates the Cayley table, solves the left-invariance system exactly,
// asserts the solution space is the constant line; optionally checks a
// candidate measure.
Report cmd_haar(const std::string& input, const std::optional<std::string>& candidate);

// Iterates the no-supremum step from the unit (or a given start), printing
// the strictly decreasing chain of upper bounds.
Report cmd_pathology(const std::optional<std::string>& input, std::uint64_t iters);

} // namespace malg
