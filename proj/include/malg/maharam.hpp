#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "malg/cantor.hpp"
#include "malg/measure.hpp"
#include "malg/radon.hpp"
#include "malg/rational.hpp"

namespace malg {

// A cardinal we can write down: a natural number or aleph_k for small k.
// Finite values sort below every aleph; sums and products of infinite values
// take the maximum (in particular kappa * aleph_0 = kappa for infinite
// kappa).
class CardinalSymbol {
public:
    static CardinalSymbol finite(std::uint64_t n) { return CardinalSymbol(false, n); }
    static CardinalSymbol aleph(std::uint64_t k) { return CardinalSymbol(true, k); }

    bool is_infinite() const { return infinite_; }
    std::uint64_t finite_value() const {
        if (infinite_) throw Error("not a finite cardinal");
        return v_;
    }
    std::uint64_t aleph_index() const {
        if (!infinite_) throw Error("not an infinite cardinal");
        return v_;
    }

    friend CardinalSymbol operator+(const CardinalSymbol& a, const CardinalSymbol& b) {
        if (!a.infinite_ && !b.infinite_) return finite(a.v_ + b.v_);
        return std::max(a, b);
    }
    friend CardinalSymbol operator*(const CardinalSymbol& a, const CardinalSymbol& b) {
        if (!a.infinite_ && !b.infinite_) return finite(a.v_ * b.v_);
        if ((!a.infinite_ && a.v_ == 0) || (!b.infinite_ && b.v_ == 0)) return finite(0);
        return std::max(a, b);
    }

    bool operator==(const CardinalSymbol& o) const = default;
    std::strong_ordering operator<=>(const CardinalSymbol& o) const {
        if (infinite_ != o.infinite_)
            return infinite_ ? std::strong_ordering::greater : std::strong_ordering::less;
        return v_ <=> o.v_;
    }

    std::string str() const {
        return infinite_ ? "aleph" + std::to_string(v_) : std::to_string(v_);
    }

private:
    CardinalSymbol(bool inf, std::uint64_t v) : infinite_(inf), v_(v) {}
    bool infinite_;
    std::uint64_t v_;
};

// Size of a component: its trace when that is finite, otherwise its
// decomposability cardinal.
struct Magnitude {
    std::variant<Rational, CardinalSymbol> value;

    static Magnitude trace(Rational r) { return Magnitude{std::move(r)}; }
    static Magnitude cardinal(CardinalSymbol c) { return Magnitude{std::move(c)}; }

    bool is_trace() const { return std::holds_alternative<Rational>(value); }
    const Rational& trace_value() const { return std::get<Rational>(value); }
    const CardinalSymbol& cardinal_value() const { return std::get<CardinalSymbol>(value); }

    bool operator==(const Magnitude& o) const = default;
    std::string str() const;
};

// Symbolic direct-sum description of a semifinite measure algebra: a list of
// atoms (with their traces) and homogeneous non-atomic summands (with their
// generation cardinal and trace weight).
struct AtomSummand {
    Rational gamma; // > 0
    bool operator==(const AtomSummand& o) const = default;
};

struct HomogeneousSummand {
    CardinalSymbol kappa; // infinite
    Rational gamma;       // > 0
    bool operator==(const HomogeneousSummand& o) const = default;
};

using Summand = std::variant<AtomSummand, HomogeneousSummand>;

struct VNMADescription {
    std::vector<Summand> summands;
    // Marks an infinite-trace description: the summand list stands for that
    // many copies (each of trace weight as listed). Only aleph_0 is
    // supported; see magnitude_of/signature for the rejection rules.
    std::optional<CardinalSymbol> infinite_replication;

    bool operator==(const VNMADescription& o) const = default;
};

// Validates gammas positive, homogeneous kappas infinite, replication (if
// any) infinite.
VNMADescription make_description(std::vector<Summand> summands,
                                 std::optional<CardinalSymbol> infinite_replication = std::nullopt);

// The complete isomorphism invariant: per-trace atom tallies and
// per-generation-cardinal component magnitudes. Two descriptions are
// isomorphic exactly when their signatures coincide.
struct MaharamSignature {
    std::map<Rational, std::uint64_t> atom_counts;       // trace value -> count
    std::map<CardinalSymbol, Magnitude> components;      // kappa -> magnitude of the kappa-part

    bool operator==(const MaharamSignature& o) const = default;
    std::string str() const;
};

MaharamSignature signature(const VNMADescription& d);

bool isomorphic(const VNMADescription& a, const VNMADescription& b);

// Merge all homogeneous summands of equal kappa into one (gammas added);
// atoms are left as listed but sorted. Signature-preserving.
VNMADescription canonicalize_description(const VNMADescription& d);

// Atomic/nonatomic split. Finite measure algebras are purely atomic, so the
// element-level split is (1, 0); on descriptions the split separates Atom
// from Homogeneous summands.
std::pair<Element, Element> atomic_split(const MeasureAlgebra& ma);
std::pair<VNMADescription, VNMADescription> atomic_split(const VNMADescription& d);

// The description of a finite atomic measure algebra: one Atom summand per
// atom. Requires finite masses.
VNMADescription description_of(const MeasureAlgebra& ma);

// Exhaustive search for a measure-preserving atom bijection. Returns the
// lexicographically least witness (as a permutation source atom -> target
// atom), or nothing. Throws BoundExceededError past atom_bound atoms. This is
// the independent oracle the signature route is tested against; it must stay
// a raw permutation search.
std::optional<BooleanHom> brute_force_iso(const MeasureAlgebra& a, const MeasureAlgebra& b,
                                          std::size_t atom_bound = 8);

// Linear extension of a Boolean homomorphism to simple functions: coefficient
// at a target atom is the coefficient at its assigned source atom (0 off the
// image). Linear, multiplicative, unital for unital homs, sup-norm
// nonincreasing; an isometric isomorphism exactly when h is an isomorphism.
// Rejects infinite coefficients (no sup norm).
StepFunction extend_hom(const BooleanHom& h, const StepFunction& s);

// Magnitude of the selected summands: total trace when finite; for an
// infinite-replication description the total trace is infinite and the
// magnitude is the decomposability cardinal instead (aleph_0 for countable
// replication of sigma-finite pieces). Larger replication cardinals are
// rejected with UnsupportedCardinalityError.
Magnitude magnitude_of(const VNMADescription& d, const std::vector<std::size_t>& selected);

// A projection of the depth-truncated coin-flip algebra with trace exactly t.
// Dyadic t only; delegates to find_projection_of_measure.
CylinderSet find_trace_projection(const Rational& t);

} // namespace malg
