#pragma once

#include <vector>

#include "malg/boolean.hpp"

namespace malg {

// Two-valued homomorphism out of a finite algebra. Each one is evaluation
// against a unique defining atom: z(a) = 1 iff the atom lies below a.
class StonePoint {
public:
    StonePoint(AlgebraPtr algebra, std::size_t defining_atom)
        : algebra_(std::move(algebra)), atom_(defining_atom) {}

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t defining_atom() const { return atom_; }

    bool evaluate(const Element& a) const {
        if (a.parent().get() != algebra_.get())
            throw ParentMismatchError("element not from the point's algebra");
        return a.contains_atom(atom_);
    }

    bool operator==(const StonePoint& o) const {
        return algebra_.get() == o.algebra_.get() && atom_ == o.atom_;
    }

private:
    AlgebraPtr algebra_;
    std::size_t atom_;
};

// All two-valued homomorphisms of a finite algebra, in atom order. Empty for
// the degenerate algebra (0 = 1 kills every candidate).
struct StoneSpace {
    AlgebraPtr algebra;
    std::vector<StonePoint> points;
};

StoneSpace stone_space(const AlgebraPtr& alg);

// Indices of the points sending a to 1 (the basic clopen set of a).
std::vector<std::size_t> hat(const Element& a, const StoneSpace& space);

// Result of rebuilding the algebra from its Stone space: the power-set
// algebra over the points, and the hat map packaged as a homomorphism onto
// it. round_trip_check verifies the hom laws and bijectivity on the whole
// element space and throws if anything fails, so holding a witness is proof
// the round trip closed.
struct StoneWitness {
    StoneSpace space;
    AlgebraPtr clopen_algebra;       // power set of the points
    BooleanHom iso;                  // original -> clopen, bijective
};

StoneWitness round_trip_check(const AlgebraPtr& alg);

} // namespace malg
