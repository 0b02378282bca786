#pragma once

#include <string>
#include <vector>

#include "malg/boolean.hpp"
#include "malg/rational.hpp"

namespace malg {

// Finite measure algebra: a finite Boolean algebra together with a faithful
// [0,inf]-valued measure, stored by its atom masses (each strictly positive;
// faithfulness is exactly that). The degenerate case is the one-element
// algebra carrying the zero measure.
struct MeasureAlgebra {
    AlgebraPtr algebra;
    std::vector<ExtRational> atom_mass;

    MeasureAlgebra(AlgebraPtr alg, std::vector<ExtRational> masses);

    bool degenerate() const { return algebra->degenerate(); }
    ExtRational mass(const Element& a) const;
    ExtRational total_mass() const { return mass(algebra->unit()); }
};

// A measure space small enough to write down: labelled points, a sigma
// algebra (everything, or generated by listed subsets), and a point mass
// function. Input side of the null-quotient construction.
struct MeasureSpaceDescription {
    std::vector<std::string> points;
    // Empty means the full power set; otherwise each generator is a list of
    // point indices and the sigma algebra is the one they generate.
    bool full_sigma = true;
    std::vector<std::vector<std::size_t>> generators;
    std::vector<ExtRational> point_mass; // aligned with points
};

// The measure algebra of a measure space: measurable sets modulo null sets.
// sigma_algebra's atoms are the cells of the measurable partition;
// null-quotient keeps the cells of positive mass. The quotient map sends each
// measurable set (element of sigma_algebra) to the join of its non-null
// cells.
struct QuotientResult {
    MeasureAlgebra algebra;
    AlgebraPtr sigma_algebra;       // atoms = measurable cells
    BooleanHom sigma_into_points;   // cell atom -> set of points, injective
    BooleanHom quotient;            // sigma_algebra -> algebra.algebra, unital
    bool degenerate;                // everything was null
};

QuotientResult from_measure_space(const MeasureSpaceDescription& desc);

// Semifiniteness: every element of infinite mass dominates a nonzero element
// of finite mass. For a finite atomic algebra that is the absence of
// infinite-mass atoms.
bool is_semifinite(const MeasureAlgebra& ma);

// The semifinite/anti-semifinite decomposition: (join of finite-mass atoms,
// join of infinite-mass atoms). The measure is semifinite below the first
// component and purely infinite below the second.
std::pair<Element, Element> semifinite_part(const MeasureAlgebra& ma);

// Replaces every positive mass with inf. Degenerate algebras are unchanged.
MeasureAlgebra trivialization(const MeasureAlgebra& ma);

// Disjoint sum: atoms are the parts' atoms side by side, masses carried over.
// Each injection embeds a part onto the principal ideal under its block and
// is measure preserving; it is unital only when it is the sole part.
struct DisjointSum {
    MeasureAlgebra algebra;
    std::vector<BooleanHom> injections; // part i -> sum
};

DisjointSum disjoint_sum(const std::vector<MeasureAlgebra>& parts);

// Orthogonal family of finite-mass elements with join 1, built greedily atom
// by atom (one part per atom). Throws NotSemifiniteError if some atom has
// infinite mass.
std::vector<Element> finite_decomposition(const MeasureAlgebra& ma);

// Whether h preserves mass on every atom of src: mass_src(p) =
// mass_dst(h(p)) for all atoms p. h must run between the parts' underlying
// algebras.
bool is_measure_preserving(const BooleanHom& h, const MeasureAlgebra& src, const MeasureAlgebra& dst);

// Counting measure on the finite/cofinite algebra: cardinality, or inf on
// the cofinite side.
ExtRational fincof_counting_measure(const FinCofElement& a);

// One step of the no-supremum walk for the family of finite sets of evens
// inside the finite/cofinite algebra: any cofinite upper bound u whose
// complement avoids the evens can be strictly shrunk by removing the least
// odd number it still contains, and the result still bounds the family.
// Throws NotUpperBoundError if u is finite or its complement meets an even.
FinCofElement fc_refute_supremum(const FinCofElement& u);

} // namespace malg
