#include "malg/maharam.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace malg {

std::string Magnitude::str() const {
    if (is_trace()) return "trace " + rat_str(trace_value());
    return "cardinal " + cardinal_value().str();
}

VNMADescription make_description(std::vector<Summand> summands,
                                 std::optional<CardinalSymbol> infinite_replication) {
    for (const auto& s : summands) {
        if (const auto* a = std::get_if<AtomSummand>(&s)) {
            if (a->gamma <= 0) throw Error("atom summand needs positive trace");
        } else {
            const auto& h = std::get<HomogeneousSummand>(s);
            if (h.gamma <= 0) throw Error("homogeneous summand needs positive trace weight");
            if (!h.kappa.is_infinite())
                throw Error("homogeneous summand needs an infinite generation cardinal");
        }
    }
    if (infinite_replication && !infinite_replication->is_infinite())
        throw Error("replication marker must be an infinite cardinal");
    return VNMADescription{std::move(summands), infinite_replication};
}

namespace {
// Total order on summands for canonical listing: atoms first by trace, then
// homogeneous by (kappa, gamma).
bool summand_less(const Summand& x, const Summand& y) {
    const auto* ax = std::get_if<AtomSummand>(&x);
    const auto* ay = std::get_if<AtomSummand>(&y);
    if (ax && ay) return ax->gamma < ay->gamma;
    if (ax) return true;
    if (ay) return false;
    const auto& hx = std::get<HomogeneousSummand>(x);
    const auto& hy = std::get<HomogeneousSummand>(y);
    if (hx.kappa != hy.kappa) return hx.kappa < hy.kappa;
    return hx.gamma < hy.gamma;
}

void require_replication_supported(const VNMADescription& d) {
    if (!d.infinite_replication) return;
    if (*d.infinite_replication != CardinalSymbol::aleph(0))
        throw UnsupportedCardinalityError(
            "replication by " + d.infinite_replication->str() +
            " needs a decomposability tally beyond the countable case; unsupported");
}
} // namespace

MaharamSignature signature(const VNMADescription& d) {
    require_replication_supported(d);
    MaharamSignature sig;
    if (d.infinite_replication) {
        // Countably many copies: atom tallies would be infinite, which the
        // signature's finite counts cannot carry.
        for (const auto& s : d.summands)
            if (std::holds_alternative<AtomSummand>(s))
                throw UnsupportedCardinalityError(
                    "replicated description contains atoms; their tally is not finite");
        // Each kappa-part is countably many finite-trace pieces: total trace
        // infinite, decomposability aleph_0.
        for (const auto& s : d.summands) {
            const auto& h = std::get<HomogeneousSummand>(s);
            sig.components.insert_or_assign(h.kappa,
                                            Magnitude::cardinal(CardinalSymbol::aleph(0)));
        }
        return sig;
    }
    std::map<CardinalSymbol, Rational> trace_totals;
    for (const auto& s : d.summands) {
        if (const auto* a = std::get_if<AtomSummand>(&s)) {
            ++sig.atom_counts[a->gamma];
        } else {
            const auto& h = std::get<HomogeneousSummand>(s);
            trace_totals[h.kappa] += h.gamma;
        }
    }
    for (const auto& [kappa, total] : trace_totals)
        sig.components.emplace(kappa, Magnitude::trace(total));
    return sig;
}

std::string MaharamSignature::str() const {
    std::ostringstream os;
    os << "atoms:";
    if (atom_counts.empty()) os << " none";
    for (const auto& [gamma, count] : atom_counts)
        os << " " << count << "x(trace " << rat_str(gamma) << ")";
    os << "; components:";
    if (components.empty()) os << " none";
    for (const auto& [kappa, mag] : components) os << " [" << kappa.str() << ": " << mag.str() << "]";
    return os.str();
}

bool isomorphic(const VNMADescription& a, const VNMADescription& b) {
    return signature(a) == signature(b);
}

VNMADescription canonicalize_description(const VNMADescription& d) {
    require_replication_supported(d);
    std::vector<Summand> atoms;
    std::map<CardinalSymbol, Rational> merged;
    for (const auto& s : d.summands) {
        if (std::holds_alternative<AtomSummand>(s))
            atoms.push_back(s);
        else {
            const auto& h = std::get<HomogeneousSummand>(s);
            merged[h.kappa] += h.gamma;
        }
    }
    std::sort(atoms.begin(), atoms.end(), summand_less);
    for (const auto& [kappa, gamma] : merged)
        atoms.push_back(HomogeneousSummand{kappa, gamma});
    return VNMADescription{std::move(atoms), d.infinite_replication};
}

std::pair<Element, Element> atomic_split(const MeasureAlgebra& ma) {
    // Finite measure algebras are purely atomic.
    return {ma.algebra->unit(), ma.algebra->zero()};
}

std::pair<VNMADescription, VNMADescription> atomic_split(const VNMADescription& d) {
    VNMADescription atomic{{}, std::nullopt};
    VNMADescription nonatomic{{}, d.infinite_replication};
    for (const auto& s : d.summands) {
        if (std::holds_alternative<AtomSummand>(s))
            atomic.summands.push_back(s);
        else
            nonatomic.summands.push_back(s);
    }
    if (d.infinite_replication && !atomic.summands.empty())
        throw UnsupportedCardinalityError(
            "replicated description contains atoms; their tally is not finite");
    return {std::move(atomic), std::move(nonatomic)};
}

VNMADescription description_of(const MeasureAlgebra& ma) {
    VNMADescription d;
    for (const auto& m : ma.atom_mass) {
        if (m.is_infinite())
            throw NotSemifiniteError("infinite-mass atom has no finite trace; not describable");
        d.summands.push_back(AtomSummand{m.value()});
    }
    return d;
}

std::optional<BooleanHom> brute_force_iso(const MeasureAlgebra& a, const MeasureAlgebra& b,
                                          std::size_t atom_bound) {
    const std::size_t n = a.algebra->atom_count();
    if (n > atom_bound || b.algebra->atom_count() > atom_bound)
        throw BoundExceededError("brute-force isomorphism search limited to " +
                                 std::to_string(atom_bound) + " atoms");
    if (b.algebra->atom_count() != n) return std::nullopt;

    // Walk permutations in lexicographic order; the first hit is the
    // lexicographically least witness.
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (!(a.atom_mass[i] == b.atom_mass[perm[i]])) ok = false;
        if (ok) {
            // perm sends source atom i to target atom perm[i]; the hom stores
            // the target-side assignment.
            std::vector<std::optional<std::size_t>> atom_map(n);
            for (std::size_t i = 0; i < n; ++i) atom_map[perm[i]] = i;
            return BooleanHom(a.algebra, b.algebra, std::move(atom_map));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

StepFunction extend_hom(const BooleanHom& h, const StepFunction& s) {
    if (s.algebra.get() != h.source().get())
        throw ParentMismatchError("function not on the hom's source algebra");
    if (!s.all_finite())
        throw InfiniteCoefficientError("extension requires finite coefficients (sup norm)");
    std::vector<ExtRational> out(h.target()->atom_count());
    const auto& atom_map = h.atom_map();
    for (std::size_t t = 0; t < out.size(); ++t)
        if (atom_map[t]) out[t] = s.coeff[*atom_map[t]];
    return StepFunction(h.target(), std::move(out));
}

Magnitude magnitude_of(const VNMADescription& d, const std::vector<std::size_t>& selected) {
    require_replication_supported(d);
    Rational total = 0;
    bool any = false;
    for (auto idx : selected) {
        if (idx >= d.summands.size()) throw Error("summand selector out of range");
        any = true;
        if (const auto* a = std::get_if<AtomSummand>(&d.summands[idx]))
            total += a->gamma;
        else
            total += std::get<HomogeneousSummand>(d.summands[idx]).gamma;
    }
    if (d.infinite_replication && any) {
        // Countably many copies of the selection: infinite total trace, so
        // the magnitude falls back to the decomposability cardinal. Each
        // selected piece has finite trace (sigma-finite), and countably many
        // of them decompose into countably many finite pieces.
        return Magnitude::cardinal(CardinalSymbol::aleph(0));
    }
    return Magnitude::trace(total);
}

CylinderSet find_trace_projection(const Rational& t) { return find_projection_of_measure(t); }

} // namespace malg
