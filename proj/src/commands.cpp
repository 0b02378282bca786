#include "malg/commands.hpp"

#include <sstream>

#include "malg/error.hpp"
#include "malg/format.hpp"
#include "malg/group.hpp"
#include "malg/maharam.hpp"
#include "malg/measure.hpp"
#include "malg/radon.hpp"
#include "malg/stone.hpp"

namespace malg {

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string tuple_str(const std::vector<Rational>& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << rat_str(v[i]);
    }
    os << ')';
    return os.str();
}

std::string coeff_list(const StepFunction& h) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < h.coeff.size(); ++i) {
        if (i) os << ", ";
        os << h.coeff[i].str();
    }
    os << ']';
    return os.str();
}

// Purely atomic descriptions realize as finite measure algebras; anything
// else has no finite carrier to search.
std::optional<MeasureAlgebra> realize_atomic(const VNMADescription& d) {
    if (d.infinite_replication) return std::nullopt;
    std::vector<ExtRational> masses;
    for (const auto& s : d.summands) {
        const auto* a = std::get_if<AtomSummand>(&s);
        if (!a) return std::nullopt;
        masses.push_back(ExtRational(a->gamma));
    }
    AlgebraPtr alg = FiniteBooleanAlgebra::make(masses.size());
    return MeasureAlgebra(std::move(alg), std::move(masses));
}

} // namespace

Report cmd_classify(const std::string& input1, const std::optional<std::string>& input2,
                    std::size_t exhaustive_bound) {
    std::ostringstream out;
    out << "command: classify\n";
    VNMADescription d1 = parse_description(input1);
    MaharamSignature s1 = signature(d1);
    out << "input 1: " << d1.summands.size() << " summand"
        << (d1.summands.size() == 1 ? "" : "s");
    if (d1.infinite_replication)
        out << ", replicated " << d1.infinite_replication->str() << " times";
    out << '\n';
    out << "signature 1: " << s1.str() << '\n';
    if (!input2) return {out.str(), 0};

    VNMADescription d2 = parse_description(*input2);
    MaharamSignature s2 = signature(d2);
    out << "input 2: " << d2.summands.size() << " summand"
        << (d2.summands.size() == 1 ? "" : "s");
    if (d2.infinite_replication)
        out << ", replicated " << d2.infinite_replication->str() << " times";
    out << '\n';
    out << "signature 2: " << s2.str() << '\n';

    bool iso = s1 == s2;
    out << "isomorphic: " << yn(iso) << '\n';

    auto m1 = realize_atomic(d1);
    auto m2 = realize_atomic(d2);
    if (!m1 || !m2) {
        out << "witness search: skipped (non-atomic summands present)\n";
        return {out.str(), 0};
    }
    std::optional<BooleanHom> found;
    try {
        found = brute_force_iso(*m1, *m2, exhaustive_bound);
    } catch (const BoundExceededError&) {
        out << "witness search: skipped (more than " << exhaustive_bound
            << " atoms; raise --exhaustive-bound)\n";
        return {out.str(), 0};
    }
    if (found) {
        out << "witness: measure-preserving atom bijection";
        const auto& map = found->atom_map();
        for (std::size_t t = 0; t < map.size(); ++t)
            out << ' ' << *map[t] + 1 << "->" << t + 1;
        out << '\n';
    } else {
        out << "witness search: no measure-preserving atom bijection exists\n";
    }
    if (found.has_value() != iso)
        throw Error("internal: signature verdict disagrees with brute-force search");
    return {out.str(), 0};
}

Report cmd_rn(const std::string& input) {
    MeasurePairInput in = parse_measure_pair(input);
    AlgebraPtr alg = FiniteBooleanAlgebra::make(in.atom_labels);
    MeasureOnAlgebra mu(alg, in.mu), nu(alg, in.nu);

    std::ostringstream out;
    out << "command: rn\n";
    out << "atoms:";
    for (const auto& l : in.atom_labels) out << ' ' << l;
    out << '\n';
    out << "mu:";
    for (const auto& v : in.mu) out << ' ' << v.str();
    out << '\n';
    out << "nu:";
    for (const auto& v : in.nu) out << ' ' << v.str();
    out << '\n';

    RnReport r = rn_equivalence_report(nu, mu);
    out << "mu semifinite: " << yn(r.mu_semifinite) << '\n';
    auto opt = [](const std::optional<bool>& b) { return b ? yn(*b) : std::string("-"); };
    if (!r.extended_mode) {
        out << "mode: localizable\n";
        out << "finite density conditions:\n";
        out << "  (i) finite-valued density solvable atomwise: " << opt(r.finite_i) << '\n';
        out << "  (ii) nu abs. continuous + nu semifinite + mu-support exists: "
            << opt(r.finite_ii) << '\n';
        out << "  (iii) nu abs. continuous + strongly mu-semifinite: " << opt(r.finite_iii)
            << '\n';
        out << "extended density conditions:\n";
        out << "  (i) [0,inf]-valued density solvable atomwise: " << opt(r.ext_i) << '\n';
        out << "  (ii) nu abs. continuous + mu-support exists: " << opt(r.ext_ii) << '\n';
        out << "  (iii) nu abs. continuous + mu-semifinite: " << opt(r.ext_iii) << '\n';
        out << "  (iv) normality: " << r.normality_note << '\n';
        out << "conditions agree: " << yn(r.conditions_agree()) << '\n';
    } else {
        out << "mode: extended (mu has an infinite atom; split at the semifinite support)\n";
        out << "nu abs. continuous: " << yn(absolutely_continuous(nu, mu)) << '\n';
        if (r.dedekind_case == 1)
            out << "composition case: (i) density vanishes off the semifinite support\n";
        else if (r.dedekind_case == 2)
            out << "composition case: (ii) density is inf off the semifinite support\n";
        else
            out << "composition case: none\n";
    }

    if (r.density) {
        out << "h = " << coeff_list(*r.density) << '\n';
        return {out.str(), 0};
    }
    std::size_t w = r.witness_atom.value_or(0);
    std::string label = in.atom_labels.empty() ? std::string("-") : in.atom_labels[w];
    if (!absolutely_continuous(nu, mu))
        out << "no density: nu is not absolutely continuous with respect to mu at atom "
            << w + 1 << " (" << label << ")\n";
    else
        out << "no density: not mu-semifinite at atom " << w + 1 << " (" << label
            << "): nu positive and finite where mu is infinite\n";
    return {out.str(), 1};
}

Report cmd_stone(const std::string& input) {
    AlgebraInput in = parse_algebra(input);
    // The round trip is exhaustive over element pairs: 4^n of them.
    constexpr std::size_t kMaxAtoms = 10;
    if (in.atom_labels.size() > kMaxAtoms)
        throw BoundExceededError("stone round trip is exhaustive; at most " +
                                 std::to_string(kMaxAtoms) + " atoms supported");
    AlgebraPtr alg = FiniteBooleanAlgebra::make(in.atom_labels);

    std::ostringstream out;
    out << "command: stone\n";
    out << "atoms: " << alg->atom_count() << '\n';
    StoneWitness w = round_trip_check(alg);
    out << "points: " << w.space.points.size() << '\n';
    for (std::size_t i = 0; i < w.space.points.size(); ++i)
        out << "point " << i + 1 << ": evaluation against atom "
            << alg->atom_label(w.space.points[i].defining_atom()) << '\n';
    out << "elements: " << alg->element_count() << '\n';
    out << "round trip: pass (isomorphic to the clopen algebra of the point space)\n";
    return {out.str(), 0};
}

Report cmd_cantor(const std::string& input, std::optional<std::uint32_t> depth) {
    CylinderInput in = parse_cylinder_input(input);
    std::ostringstream out;
    out << "command: cantor\n";
    CylinderSet c;
    if (in.expr) {
        out << "expression: " << *in.expr << '\n';
        c = eval_cylinder_expr(*in.expr);
    } else if (in.project) {
        out << "project: " << rat_str(*in.project) << '\n';
        c = find_projection_of_measure(*in.project);
    } else {
        out << "input: explicit word set\n";
        c = *in.explicit_set;
    }
    out << "canonical: " << c.str() << '\n';
    out << "depth: " << c.depth << '\n';
    out << "measure: " << rat_str(cylinder_measure(c)) << '\n';
    DyadicIntervalUnion u = cantor_to_interval(c);
    out << "interval: " << u.str() << '\n';
    out << "interval length: " << rat_str(u.total_length()) << '\n';
    if (depth) {
        CylinderSet r = refine(c, *depth);
        out << "refined: " << r.str() << '\n';
        out << "refined measure: " << rat_str(cylinder_measure(r)) << '\n';
    }
    return {out.str(), 0};
}

Report cmd_haar(const std::string& input, const std::optional<std::string>& candidate) {
    CayleyTable g = parse_group(input);
    std::ostringstream out;
    out << "command: haar\n";
    out << "group: " << g.name << '\n';
    out << "order: " << g.order << '\n';
    g.validate();
    out << "group axioms: pass\n";

    KernelResult k = left_invariance_kernel(g);
    out << "kernel dimension: " << k.nullity << '\n';
    for (const auto& v : k.basis) out << "kernel basis vector: " << tuple_str(v) << '\n';
    bool unique = k.nullity == 1 && k.spanned_by_constant();
    out << "uniqueness: " << (unique ? "pass" : "FAIL") << '\n';
    if (unique) {
        out << "invariant measures = c * " << tuple_str(k.basis[0]) << '\n';
    } else {
        out << "invariance system not spanned by the constant vector\n";
        return {out.str(), 1};
    }

    if (!candidate) return {out.str(), 0};
    std::vector<Rational> cand = parse_candidate(*candidate);
    if (cand.size() != g.order)
        throw ParseError("candidate lists " + std::to_string(cand.size()) +
                         " values but the group has order " + std::to_string(g.order));
    out << "candidate: " << tuple_str(cand) << '\n';
    InvarianceCheck chk = check_left_invariant(g, cand);
    out << "left-invariant: " << yn(chk.invariant) << '\n';
    if (chk.invariant) {
        out << "scalar: " << rat_str(*chk.scalar) << " (relative to counting measure)\n";
        return {out.str(), 0};
    }
    out << "witness: g=" << chk.witness->first << ", x=" << chk.witness->second
        << " (candidate[g*x] != candidate[x])\n";
    return {out.str(), 1};
}

Report cmd_pathology(const std::optional<std::string>& input, std::uint64_t iters) {
    FinCofElement cur = input ? parse_fincof(*input) : FinCofElement::unit();
    std::ostringstream out;
    out << "command: pathology\n";
    out << "family: all finite sets of even numbers\n";
    out << "start: " << cur.str() << '\n';
    out << "iterations: " << iters << '\n';
    for (std::uint64_t i = 1; i <= iters; ++i) {
        FinCofElement next = fc_refute_supremum(cur);
        if (!(fincof_leq(next, cur)) || next == cur)
            throw Error("internal: refutation step did not strictly decrease");
        out << "step " << i << ": " << next.str() << '\n';
        cur = next;
    }
    out << "verdict: every upper bound shrinks to a strictly smaller upper bound; "
           "the family has no least upper bound\n";
    return {out.str(), 0};
}

} // namespace malg
