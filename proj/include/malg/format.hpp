#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "malg/boolean.hpp"
#include "malg/cantor.hpp"
#include "malg/group.hpp"
#include "malg/maharam.hpp"
#include "malg/radon.hpp"

namespace malg {

// The input files all share one shape: a header line "malg v1 <kind>", then
// whitespace-separated key/value lines; '#' starts a comment, blank lines are
// skipped. One schema per kind. parse_* functions throw ParseError with line
// numbers; serialize_* functions emit text that parses back to the same
// value.

struct ParsedFile {
    std::string kind;
    struct Line {
        std::size_t number; // 1-based, for error messages
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
};

ParsedFile parse_file(const std::string& content);

// kind "algebra": atom labels.
struct AlgebraInput {
    std::vector<std::string> atom_labels;
};
AlgebraInput parse_algebra(const std::string& content);
std::string serialize_algebra(const AlgebraInput& a);

// kind "measure_pair": two measures on a labelled atom list.
struct MeasurePairInput {
    std::vector<std::string> atom_labels;
    std::vector<ExtRational> mu;
    std::vector<ExtRational> nu;
};
MeasurePairInput parse_measure_pair(const std::string& content);
std::string serialize_measure_pair(const MeasurePairInput& m);

// kind "description".
VNMADescription parse_description(const std::string& content);
std::string serialize_description(const VNMADescription& d);

// kind "group".
CayleyTable parse_group(const std::string& content);
std::string serialize_group(const CayleyTable& g);

// kind "candidate": a mass vector.
std::vector<Rational> parse_candidate(const std::string& content);
std::string serialize_candidate(const std::vector<Rational>& v);

// kind "cylinder": either an explicit word set, an expression over the
// generators, or a measure-projection request.
struct CylinderInput {
    std::optional<CylinderSet> explicit_set;
    std::optional<std::string> expr;      // raw expression text
    std::optional<Rational> project;      // find a set of this measure
};
CylinderInput parse_cylinder_input(const std::string& content);
std::string serialize_cylinder(const CylinderSet& c);

// kind "fincof".
FinCofElement parse_fincof(const std::string& content);
std::string serialize_fincof(const FinCofElement& e);

// Expression grammar over cylinder sets:
//   or   := xor ('|' xor)*
//   xor  := and ('^' and)*
//   and  := unary ('&' unary)*
//   unary:= '~' unary | atom
//   atom := 'gen' '(' nat ')' | 'full' | 'empty' | '(' or ')'
CylinderSet eval_cylinder_expr(const std::string& expr);

} // namespace malg
