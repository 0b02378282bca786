#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malg/rational.hpp"

namespace malg {

// Finite group by its multiplication table: table[g][x] = g*x (indices into
// the element list). validate checks the table is a group for real — Latin
// square, identity, inverses, associativity, all exhaustively — and throws
// InvalidGroupError naming the first violated axiom.
struct CayleyTable {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;
    std::string name; // optional, echoed in reports

    void validate() const;
    std::size_t identity() const; // requires a valid table
};

// Standard small groups, mostly for fixtures and tests.
CayleyTable cyclic_group(std::size_t n);
CayleyTable klein_four_group();
CayleyTable dihedral_group(std::size_t n); // order 2n, n >= 3
CayleyTable symmetric_group_s3();
CayleyTable quaternion_group();

// Solution space of the left-invariance constraints m(g*x) = m(x), solved
// exactly over the rationals. For a group the space is one-dimensional,
// spanned by the constant vector — uniqueness of the invariant measure up to
// scale.
struct KernelResult {
    std::size_t nullity = 0;
    std::vector<std::vector<Rational>> basis; // each normalized: first nonzero entry 1
    bool spanned_by_constant() const;
};

KernelResult left_invariance_kernel(const CayleyTable& g);

// Whether a candidate mass vector is left-invariant, with either the scale
// factor relative to counting measure or a witness pair (g, x) with
// candidate[g*x] != candidate[x].
struct InvarianceCheck {
    bool invariant = false;
    std::optional<Rational> scalar;
    std::optional<std::pair<std::size_t, std::size_t>> witness; // (g, x)
};

InvarianceCheck check_left_invariant(const CayleyTable& g, const std::vector<Rational>& candidate);

} // namespace malg
