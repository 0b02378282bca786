#include "malg/radon.hpp"

#include <algorithm>

namespace malg {

namespace {
void require_same_algebra(const MeasureOnAlgebra& a, const MeasureOnAlgebra& b) {
    if (a.algebra.get() != b.algebra.get())
        throw ParentMismatchError("measures live on different algebras");
}
} // namespace

MeasureOnAlgebra::MeasureOnAlgebra(AlgebraPtr alg, std::vector<ExtRational> masses)
    : algebra(std::move(alg)), atom_mass(std::move(masses)) {
    if (atom_mass.size() != algebra->atom_count())
        throw Error("mass vector sized for a different algebra");
}

ExtRational MeasureOnAlgebra::operator()(const Element& a) const {
    if (a.parent().get() != algebra.get())
        throw ParentMismatchError("element not from the measure's algebra");
    ExtRational total;
    for (auto i : a.atoms().indices()) total += atom_mass[i];
    return total;
}

MeasureOnAlgebra operator+(const MeasureOnAlgebra& a, const MeasureOnAlgebra& b) {
    require_same_algebra(a, b);
    std::vector<ExtRational> masses(a.atom_mass.size());
    for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = a.atom_mass[i] + b.atom_mass[i];
    return MeasureOnAlgebra(a.algebra, std::move(masses));
}

StepFunction::StepFunction(AlgebraPtr alg, std::vector<ExtRational> coeffs)
    : algebra(std::move(alg)), coeff(std::move(coeffs)) {
    if (coeff.size() != algebra->atom_count())
        throw Error("coefficient vector sized for a different algebra");
}

StepFunction StepFunction::constant(AlgebraPtr alg, const ExtRational& c) {
    std::size_t n = alg->atom_count();
    return StepFunction(std::move(alg), std::vector<ExtRational>(n, c));
}

StepFunction StepFunction::indicator(const Element& e) {
    std::vector<ExtRational> coeffs(e.parent()->atom_count());
    for (auto i : e.atoms().indices()) coeffs[i] = ExtRational(1);
    return StepFunction(e.parent(), std::move(coeffs));
}

StepFunction StepFunction::restricted(const Element& e) const {
    if (e.parent().get() != algebra.get())
        throw ParentMismatchError("element not from the function's algebra");
    std::vector<ExtRational> out(coeff.size());
    for (auto i : e.atoms().indices()) out[i] = coeff[i];
    return StepFunction(algebra, std::move(out));
}

bool StepFunction::all_finite() const {
    return std::all_of(coeff.begin(), coeff.end(),
                       [](const ExtRational& c) { return c.is_finite(); });
}

Rational StepFunction::sup_norm() const {
    Rational best = 0;
    for (const auto& c : coeff) {
        if (c.is_infinite())
            throw InfiniteCoefficientError("sup norm undefined: coefficient is infinite");
        best = std::max(best, c.value());
    }
    return best;
}

StepFunction operator+(const StepFunction& a, const StepFunction& b) {
    if (a.algebra.get() != b.algebra.get())
        throw ParentMismatchError("functions live on different algebras");
    std::vector<ExtRational> out(a.coeff.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff[i] + b.coeff[i];
    return StepFunction(a.algebra, std::move(out));
}

StepFunction operator*(const StepFunction& a, const StepFunction& b) {
    if (a.algebra.get() != b.algebra.get())
        throw ParentMismatchError("functions live on different algebras");
    std::vector<ExtRational> out(a.coeff.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff[i] * b.coeff[i];
    return StepFunction(a.algebra, std::move(out));
}

bool StepFunction::operator==(const StepFunction& o) const {
    return algebra.get() == o.algebra.get() && coeff == o.coeff;
}

ExtRational integrate(const StepFunction& f, const MeasureOnAlgebra& mu) {
    if (f.algebra.get() != mu.algebra.get())
        throw ParentMismatchError("function and measure live on different algebras");
    ExtRational total;
    for (std::size_t i = 0; i < f.coeff.size(); ++i) total += f.coeff[i] * mu.atom_mass[i];
    return total;
}

bool absolutely_continuous(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    for (std::size_t i = 0; i < nu.atom_mass.size(); ++i)
        if (mu.atom_mass[i].is_zero() && !nu.atom_mass[i].is_zero()) return false;
    return true;
}

std::optional<Element> mu_support(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    if (!absolutely_continuous(nu, mu)) return std::nullopt;
    AtomSet s(nu.algebra->atom_count());
    for (std::size_t i = 0; i < nu.atom_mass.size(); ++i)
        if (nu.atom_mass[i].is_positive()) s.set(i);
    return nu.algebra->element(s);
}

bool is_mu_semifinite(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    for (std::size_t i = 0; i < nu.atom_mass.size(); ++i)
        if (nu.atom_mass[i].is_positive() && mu.atom_mass[i].is_infinite()) return false;
    return true;
}

bool is_strongly_mu_semifinite(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    for (std::size_t i = 0; i < nu.atom_mass.size(); ++i)
        if (nu.atom_mass[i].is_positive() &&
            (mu.atom_mass[i].is_infinite() || nu.atom_mass[i].is_infinite()))
            return false;
    return true;
}

StepFunction rn_derivative(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    std::vector<ExtRational> h(nu.atom_mass.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const ExtRational& n = nu.atom_mass[i];
        const ExtRational& m = mu.atom_mass[i];
        if (m.is_zero()) {
            if (!n.is_zero())
                throw NotAbsolutelyContinuousError(
                    "atom " + nu.algebra->atom_label(i) + " is null for the base measure but not for nu");
            // h is only determined up to null sets; pick 0 on null atoms.
            h[i] = ExtRational(0);
        } else if (m.is_infinite()) {
            if (n.is_positive())
                throw NotMuSemifiniteError("atom " + nu.algebra->atom_label(i) +
                                           " has positive nu-mass but infinite base mass; h*inf "
                                           "can only be 0 or inf");
            h[i] = ExtRational(0);
        } else {
            h[i] = n.is_infinite() ? ExtRational::infinity() : ExtRational(n.value() / m.value());
        }
    }
    return StepFunction(nu.algebra, std::move(h));
}

MeasureOnAlgebra apply_density(const MeasureOnAlgebra& mu, const StepFunction& h) {
    if (h.algebra.get() != mu.algebra.get())
        throw ParentMismatchError("density and measure live on different algebras");
    std::vector<ExtRational> masses(mu.atom_mass.size());
    for (std::size_t i = 0; i < masses.size(); ++i) masses[i] = h.coeff[i] * mu.atom_mass[i];
    return MeasureOnAlgebra(mu.algebra, std::move(masses));
}

ChainRuleWitness chain_rule_check(const MeasureOnAlgebra& sigma, const MeasureOnAlgebra& nu,
                                  const MeasureOnAlgebra& mu) {
    StepFunction d_sigma_nu = rn_derivative(sigma, nu);
    StepFunction d_nu_mu = rn_derivative(nu, mu);
    StepFunction d_sigma_mu = rn_derivative(sigma, mu);
    ChainRuleWitness w{d_sigma_nu, d_nu_mu, d_sigma_mu, true, std::nullopt};
    for (std::size_t i = 0; i < mu.atom_mass.size(); ++i) {
        if (mu.atom_mass[i].is_zero()) continue; // identity only claimed mu-a.e.
        if (d_sigma_nu.coeff[i] * d_nu_mu.coeff[i] != d_sigma_mu.coeff[i]) {
            w.holds = false;
            w.failing_atom = i;
            break;
        }
    }
    return w;
}

bool inverse_derivative_check(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    StepFunction d_nu_mu = rn_derivative(nu, mu);
    StepFunction d_mu_nu = rn_derivative(mu, nu);
    for (std::size_t i = 0; i < mu.atom_mass.size(); ++i) {
        if (mu.atom_mass[i].is_zero()) continue;
        // On non-null atoms mutual absolute continuity plus the derivative
        // preconditions force both values finite and positive.
        if (d_nu_mu.coeff[i].value() * d_mu_nu.coeff[i].value() != 1) return false;
    }
    return true;
}

bool RnReport::conditions_agree() const {
    auto agree = [](const std::optional<bool>& a, const std::optional<bool>& b,
                    const std::optional<bool>& c) {
        return a.has_value() && b.has_value() && c.has_value() && *a == *b && *b == *c;
    };
    if (extended_mode) return true; // single-route verdict, nothing to cross-check
    return agree(finite_i, finite_ii, finite_iii) && agree(ext_i, ext_ii, ext_iii);
}

RnReport rn_equivalence_report(const MeasureOnAlgebra& nu, const MeasureOnAlgebra& mu) {
    require_same_algebra(nu, mu);
    RnReport r;
    r.normality_note = "normality of the induced weight holds for every weight at finite scale; "
                       "recorded, not decided on";
    r.mu_faithful = std::all_of(mu.atom_mass.begin(), mu.atom_mass.end(),
                                [](const ExtRational& m) { return m.is_positive(); });
    r.mu_semifinite = std::none_of(mu.atom_mass.begin(), mu.atom_mass.end(),
                                   [](const ExtRational& m) { return m.is_infinite(); });
    const std::size_t n = mu.atom_mass.size();

    bool ac = absolutely_continuous(nu, mu);
    bool nu_semifinite = std::none_of(nu.atom_mass.begin(), nu.atom_mass.end(),
                                      [](const ExtRational& m) { return m.is_infinite(); });

    if (r.mu_semifinite) {
        // Localizable mode. Atomwise solvability of nu = h.mu, once for
        // finite-valued h and once for [0,inf]-valued h.
        bool finite_solvable = true, ext_solvable = true;
        for (std::size_t i = 0; i < n; ++i) {
            const ExtRational& m = mu.atom_mass[i];
            const ExtRational& v = nu.atom_mass[i];
            bool fin_ok, ext_ok;
            if (m.is_zero()) {
                fin_ok = ext_ok = v.is_zero(); // h*0 = 0 whatever h is
            } else {
                ext_ok = true;                 // h = v/m, allowing inf
                fin_ok = v.is_finite();
            }
            if (!fin_ok && finite_solvable) {
                finite_solvable = false;
                if (!r.witness_atom) r.witness_atom = i;
            }
            if (!ext_ok && ext_solvable) {
                ext_solvable = false;
                if (!r.witness_atom) r.witness_atom = i;
            }
        }
        r.finite_i = finite_solvable;
        r.finite_ii = ac && nu_semifinite && mu_support(nu, mu).has_value();
        r.finite_iii = ac && is_strongly_mu_semifinite(nu, mu);
        r.ext_i = ext_solvable;
        r.ext_ii = ac && mu_support(nu, mu).has_value();
        r.ext_iii = ac && is_mu_semifinite(nu, mu);
        if (ext_solvable) r.density = rn_derivative(nu, mu);
        return r;
    }

    // Extended mode: split at the semifinite part of mu.
    r.extended_mode = true;
    if (!ac) {
        for (std::size_t i = 0; i < n; ++i)
            if (mu.atom_mass[i].is_zero() && !nu.atom_mass[i].is_zero()) {
                r.witness_atom = i;
                break;
            }
        return r;
    }
    bool case1 = is_mu_semifinite(nu, mu); // nu vanishes on every infinite-mu atom
    bool case2 = true;                     // nu infinite on every infinite-mu atom
    for (std::size_t i = 0; i < n; ++i)
        if (mu.atom_mass[i].is_infinite() && !nu.atom_mass[i].is_infinite()) {
            case2 = false;
            break;
        }
    if (case1) {
        r.dedekind_case = 1;
        r.density = rn_derivative(nu, mu); // h = 0 off the semifinite part
    } else if (case2) {
        r.dedekind_case = 2;
        std::vector<ExtRational> h(n);
        for (std::size_t i = 0; i < n; ++i) {
            const ExtRational& m = mu.atom_mass[i];
            const ExtRational& v = nu.atom_mass[i];
            if (m.is_infinite())
                h[i] = ExtRational::infinity();
            else if (m.is_zero())
                h[i] = ExtRational(0);
            else
                h[i] = v.is_infinite() ? ExtRational::infinity() : ExtRational(v.value() / m.value());
        }
        r.density = StepFunction(nu.algebra, std::move(h));
    } else {
        for (std::size_t i = 0; i < n; ++i)
            if (mu.atom_mass[i].is_infinite() && nu.atom_mass[i].is_positive() &&
                nu.atom_mass[i].is_finite()) {
                r.witness_atom = i;
                break;
            }
    }
    return r;
}

} // namespace malg
