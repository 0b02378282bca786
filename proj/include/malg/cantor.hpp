#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "malg/boolean.hpp"
#include "malg/measure.hpp"
#include "malg/rational.hpp"

namespace malg {

// Finite union of cylinders over the binary sequence space, truncated at a
// finite depth: a set of depth-bit words, each word standing for the cylinder
// of sequences extending it. Coordinate 0 is the most significant bit of the
// word value, so numeric word order agrees with the order of the dyadic
// intervals the words map to.
//
// Canonical form: the least depth that represents the set. Equivalently, at
// depth > 0 some word appears without its sibling (no complete sibling pair
// merging is possible, i.e. the last coordinate is genuinely used). The empty
// set and the full space are canonical at depth 0.
struct CylinderSet {
    std::uint32_t depth = 0;
    std::set<std::uint64_t> words; // values < 2^depth

    bool operator==(const CylinderSet& o) const = default;
    std::string str() const; // e.g. "{00,01,10}@2", "{}", "{e}" for the full space
};

// Canonicalizes; validates word range.
CylinderSet make_cylinder(std::uint32_t depth, std::set<std::uint64_t> words);

CylinderSet canonicalize(const CylinderSet& c);

// The same set presented at depth m >= canonical depth.
CylinderSet refine(const CylinderSet& c, std::uint32_t m);

// Fraction of the space covered: |words| / 2^depth. Invariant under refine.
Rational cylinder_measure(const CylinderSet& c);

CylinderSet cylinder_meet(const CylinderSet& a, const CylinderSet& b);
CylinderSet cylinder_join(const CylinderSet& a, const CylinderSet& b);
CylinderSet cylinder_complement(const CylinderSet& a);
CylinderSet cylinder_symdiff(const CylinderSet& a, const CylinderSet& b);

CylinderSet cylinder_full();
CylinderSet cylinder_empty();

// The basic generator: sequences whose coordinate j equals 1. Depth j+1,
// measure 1/2.
CylinderSet generator(std::uint32_t j);

// Sequences whose coordinate j equals the given bit.
CylinderSet fix_coordinate(std::uint32_t j, bool value);

// Checks multiplicativity of the coin-flip state on a finite set of fixed
// coordinates: the cylinder fixing every (coordinate, value) pair must have
// measure (1/2)^(number of constraints). Coordinates must be distinct.
bool product_state_check(const std::vector<std::pair<std::uint32_t, bool>>& constraints);

// Image of a cylinder set in [0,1] under the binary-expansion map: each
// depth-n word w covers the dyadic interval [w/2^n, (w+1)/2^n). Adjacent
// intervals merge; an interval reaching 1 is closed there (the constant-ones
// tail maps to 1). Total length equals the cylinder measure exactly.
struct DyadicInterval {
    Rational lo;
    Rational hi;
    bool closed_right = false;
    bool operator==(const DyadicInterval& o) const = default;
};

struct DyadicIntervalUnion {
    std::vector<DyadicInterval> parts; // disjoint, increasing
    Rational total_length() const;
    std::string str() const; // "[0, 1/4) u [3/4, 1]"
};

DyadicIntervalUnion cantor_to_interval(const CylinderSet& c);

// A cylinder set of measure exactly t, for dyadic t in [0,1]: the preimage of
// [0, t), built greedily from the binary expansion of t — one word per set
// bit, at increasing depths, pairwise disjoint. Deterministic. Throws
// UnsupportedPrecisionError when t is not dyadic or outside [0,1].
CylinderSet find_projection_of_measure(const Rational& t);

// The measure algebra of all depth-n words: 2^n atoms of mass 2^(-n).
MeasureAlgebra truncated_algebra(std::uint32_t depth);

// The element of truncated_algebra(depth) corresponding to c (refined to that
// depth). Requires depth >= canonical depth of c.
Element cylinder_as_element(const CylinderSet& c, const MeasureAlgebra& truncated);

// Product measure algebra: atoms are ordered pairs (left atom, right atom) in
// lexicographic order, masses multiply. Requires both factors of finite total
// mass.
MeasureAlgebra tensor(const MeasureAlgebra& a, const MeasureAlgebra& b);

// Canonical isomorphism witnesses for the tensor structure.
// tensor(a, unit) -> a where unit is the single-atom mass-1 algebra:
BooleanHom tensor_unit_witness(const MeasureAlgebra& a, const MeasureAlgebra& unit,
                               const MeasureAlgebra& product);
// tensor(tensor(a,b),c) -> tensor(a,tensor(b,c)):
BooleanHom tensor_assoc_witness(const MeasureAlgebra& a, const MeasureAlgebra& b,
                                const MeasureAlgebra& c,
                                const MeasureAlgebra& left_product,
                                const MeasureAlgebra& right_product);

} // namespace malg
