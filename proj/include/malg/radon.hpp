#pragma once

#include <optional>
#include <string>
#include <vector>

#include "malg/boolean.hpp"
#include "malg/rational.hpp"

namespace malg {

// A measure on a finite algebra, not required faithful: atoms may carry mass
// zero. (Faithful measures live in MeasureAlgebra; here zero atoms are the
// whole point, since the algebra plays the role of the unquotiented sets.)
struct MeasureOnAlgebra {
    AlgebraPtr algebra;
    std::vector<ExtRational> atom_mass;

    MeasureOnAlgebra(AlgebraPtr alg, std::vector<ExtRational> masses);
    ExtRational operator()(const Element& a) const;

    friend MeasureOnAlgebra operator+(const MeasureOnAlgebra& a, const MeasureOnAlgebra& b);
};

// Simple function on a finite algebra: one [0,inf] coefficient per atom.
struct StepFunction {
    AlgebraPtr algebra;
    std::vector<ExtRational> coeff;

    StepFunction(AlgebraPtr alg, std::vector<ExtRational> coeffs);
    static StepFunction constant(AlgebraPtr alg, const ExtRational& c);
    static StepFunction indicator(const Element& e);

    ExtRational at(std::size_t atom) const { return coeff[atom]; }
    // The function cut down to E: coefficients zeroed outside E.
    StepFunction restricted(const Element& e) const;
    bool all_finite() const;
    // Largest coefficient; throws InfiniteCoefficientError on an inf entry.
    Rational sup_norm() const;

    friend StepFunction operator+(const StepFunction& a, const StepFunction& b);
    friend StepFunction operator*(const StepFunction& a, const StepFunction& b); // pointwise
    bool operator==(const StepFunction& o) const;
};

// Integral of a simple function: sum of coeff * mass over atoms, under the
// 0*inf = 0 convention. This is the finite-scale form of the weight attached
// to a measure; conversely a weight determines its measure through indicator
// functions, so the two constructions invert each other atomwise.
ExtRational integrate(const StepFunction& f, const MeasureOnAlgebra& mu);

// nu vanishes wherever mu does.
bool absolutely_continuous(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// The support of nu relative to mu: the join of the atoms where nu is
// positive, which concentrates nu and meets every non-mu-null element below
// it in positive nu-mass. Returned only when nu is absolutely continuous
// with respect to mu; in the nu-not-<<-mu configurations the canonical
// candidate stops being canonical (mu-null perturbations change nothing) and
// the operation reports absence instead.
std::optional<Element> mu_support(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// Every element of positive nu-mass dominates one of finite mu-mass and
// positive nu-mass. Atomwise: each atom with nu > 0 has mu < inf.
bool is_mu_semifinite(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// As above with the witness of finite positive nu-mass: additionally
// nu < inf on those atoms.
bool is_strongly_mu_semifinite(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// The density of nu with respect to mu: the [0,inf]-valued simple function h
// with nu(E) = integral of h over E for every E. Requires nu << mu (else
// NotAbsolutelyContinuousError) and nu mu-semifinite (else
// NotMuSemifiniteError; an atom with nu positive finite and mu infinite
// admits no solution since h*inf is 0 or inf). h is 0 on atoms outside the
// support of nu, nu/mu elsewhere.
StepFunction rn_derivative(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// The measure E -> integral of h over E. Inverse direction of
// rn_derivative.
MeasureOnAlgebra apply_density(const MeasureOnAlgebra& mu, const StepFunction& h);

// d(sigma)/d(nu) * d(nu)/d(mu) = d(sigma)/d(mu) atomwise on non-mu-null
// atoms. Derivative preconditions along the chain propagate as the errors
// above.
struct ChainRuleWitness {
    StepFunction d_sigma_nu;
    StepFunction d_nu_mu;
    StepFunction d_sigma_mu;
    bool holds;
    std::optional<std::size_t> failing_atom;
};

ChainRuleWitness chain_rule_check(const MeasureOnAlgebra& sigma, const MeasureOnAlgebra& nu,
                                  const MeasureOnAlgebra& mu);

// For mutually absolutely continuous nu, mu with both derivatives defined:
// d(nu)/d(mu) = 1 / (d(mu)/d(nu)) on non-null atoms.
bool inverse_derivative_check(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

// Side-by-side evaluation of the density-existence conditions.
//
// When mu is semifinite (no infinite atoms; zero atoms are tolerated nulls)
// the report works in localizable mode and fills in two condition triples,
// each evaluated independently of the others:
//   finite_*: existence of a finite-valued density, atomwise solvability
//     (i); nu << mu + nu semifinite + mu-support existence (ii); nu << mu +
//     strong mu-semifiniteness (iii).
//   ext_*: existence of a [0,inf]-valued density (i); nu << mu + mu-support
//     existence (ii); nu << mu + mu-semifiniteness (iii).
// The triples agree within themselves on every instance satisfying the
// hypothesis; conditions_agree() is the assertion surface for that.
//
// When mu has infinite atoms the report switches to extended mode: the
// algebra splits at the semifinite part S of mu, a density exists exactly
// when nu << mu and either nu is mu-semifinite (h = 0 off S, case 1) or nu
// is infinite on every atom off S (h = inf off S, case 2); dedekind_case
// records which.
//
// The fourth classical condition (normality of the induced weight) is
// recorded as a note: at finite scale every weight is normal, so it adds
// nothing to decide.
struct RnReport {
    bool mu_faithful = false;
    bool mu_semifinite = false;
    bool extended_mode = false;

    std::optional<bool> finite_i, finite_ii, finite_iii;
    std::optional<bool> ext_i, ext_ii, ext_iii;
    std::string normality_note;

    int dedekind_case = 0; // extended mode: 1, 2, or 0 when no density exists

    std::optional<StepFunction> density; // the [0,inf]-valued h when one exists
    std::optional<std::size_t> witness_atom; // first atom breaking existence

    bool conditions_agree() const;
};

RnReport rn_equivalence_report(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu);

} // namespace malg
