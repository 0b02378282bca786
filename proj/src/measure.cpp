#include "malg/measure.hpp"

#include <algorithm>

namespace malg {

MeasureAlgebra::MeasureAlgebra(AlgebraPtr alg, std::vector<ExtRational> masses)
    : algebra(std::move(alg)), atom_mass(std::move(masses)) {
    if (atom_mass.size() != algebra->atom_count())
        throw Error("mass vector sized for a different algebra");
    for (const auto& m : atom_mass)
        if (!m.is_positive()) throw Error("measure must be faithful: every atom needs positive mass");
}

ExtRational MeasureAlgebra::mass(const Element& a) const {
    if (a.parent().get() != algebra.get())
        throw ParentMismatchError("element not from this measure algebra");
    ExtRational total;
    for (auto i : a.atoms().indices()) total += atom_mass[i];
    return total;
}

QuotientResult from_measure_space(const MeasureSpaceDescription& desc) {
    const std::size_t n = desc.points.size();
    if (desc.point_mass.size() != n) throw Error("point mass vector sized for a different point set");

    AlgebraPtr points_alg = FiniteBooleanAlgebra::make(desc.points);

    std::vector<Element> gens;
    if (!desc.full_sigma) {
        for (const auto& g : desc.generators) gens.push_back(points_alg->element(g));
    } else {
        for (std::size_t i = 0; i < n; ++i) gens.push_back(points_alg->atom(i));
    }
    GeneratedSubalgebra sigma = generated_subalgebra(points_alg, gens);

    // Mass of each cell; the non-null cells become the quotient's atoms.
    const std::size_t cell_count = sigma.subalgebra->atom_count();
    std::vector<ExtRational> cell_mass(cell_count);
    for (std::size_t c = 0; c < cell_count; ++c) {
        Element cell = sigma.embedding.apply(sigma.subalgebra->atom(c));
        for (auto i : cell.atoms().indices()) cell_mass[c] += desc.point_mass[i];
    }

    std::vector<std::string> labels;
    std::vector<ExtRational> masses;
    std::vector<std::optional<std::size_t>> cell_to_atom(cell_count);
    for (std::size_t c = 0; c < cell_count; ++c) {
        if (!cell_mass[c].is_positive()) continue; // null cell, quotiented away
        cell_to_atom[c] = labels.size();
        labels.push_back(sigma.subalgebra->atom_label(c));
        masses.push_back(cell_mass[c]);
    }

    AlgebraPtr quot_alg = FiniteBooleanAlgebra::make(std::move(labels));
    // quotient: measurable set -> join of its non-null cells
    std::vector<std::optional<std::size_t>> atom_map(quot_alg->atom_count());
    for (std::size_t c = 0; c < cell_count; ++c)
        if (cell_to_atom[c]) atom_map[*cell_to_atom[c]] = c;

    bool degenerate = quot_alg->degenerate();
    return QuotientResult{MeasureAlgebra(quot_alg, std::move(masses)), sigma.subalgebra,
                          std::move(sigma.embedding),
                          BooleanHom(sigma.subalgebra, quot_alg, std::move(atom_map)), degenerate};
}

bool is_semifinite(const MeasureAlgebra& ma) {
    return std::none_of(ma.atom_mass.begin(), ma.atom_mass.end(),
                        [](const ExtRational& m) { return m.is_infinite(); });
}

std::pair<Element, Element> semifinite_part(const MeasureAlgebra& ma) {
    AtomSet fin(ma.algebra->atom_count());
    for (std::size_t i = 0; i < ma.atom_mass.size(); ++i)
        if (ma.atom_mass[i].is_finite()) fin.set(i);
    Element s = ma.algebra->element(fin);
    return {s, complement(s)};
}

MeasureAlgebra trivialization(const MeasureAlgebra& ma) {
    std::vector<ExtRational> masses(ma.atom_mass.size(), ExtRational::infinity());
    return MeasureAlgebra(ma.algebra, std::move(masses));
}

DisjointSum disjoint_sum(const std::vector<MeasureAlgebra>& parts) {
    std::vector<std::string> labels;
    std::vector<ExtRational> masses;
    std::vector<std::size_t> offset(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        offset[p] = labels.size();
        const auto& part = parts[p];
        for (std::size_t i = 0; i < part.algebra->atom_count(); ++i) {
            labels.push_back("p" + std::to_string(p) + "." + part.algebra->atom_label(i));
            masses.push_back(part.atom_mass[i]);
        }
    }
    AlgebraPtr sum_alg = FiniteBooleanAlgebra::make(std::move(labels));
    MeasureAlgebra sum(sum_alg, std::move(masses));

    std::vector<BooleanHom> injections;
    injections.reserve(parts.size());
    for (std::size_t p = 0; p < parts.size(); ++p) {
        std::vector<std::optional<std::size_t>> atom_map(sum_alg->atom_count());
        for (std::size_t i = 0; i < parts[p].algebra->atom_count(); ++i)
            atom_map[offset[p] + i] = i;
        injections.emplace_back(parts[p].algebra, sum_alg, std::move(atom_map));
    }
    return DisjointSum{std::move(sum), std::move(injections)};
}

std::vector<Element> finite_decomposition(const MeasureAlgebra& ma) {
    std::vector<Element> parts;
    for (std::size_t i = 0; i < ma.algebra->atom_count(); ++i) {
        if (ma.atom_mass[i].is_infinite())
            throw NotSemifiniteError("atom " + ma.algebra->atom_label(i) +
                                     " has infinite mass; no finite decomposition exists");
        parts.push_back(ma.algebra->atom(i));
    }
    return parts;
}

bool is_measure_preserving(const BooleanHom& h, const MeasureAlgebra& src, const MeasureAlgebra& dst) {
    if (h.source().get() != src.algebra.get() || h.target().get() != dst.algebra.get())
        throw ParentMismatchError("hom does not run between the given measure algebras");
    for (std::size_t i = 0; i < src.algebra->atom_count(); ++i)
        if (src.atom_mass[i] != dst.mass(h.apply(src.algebra->atom(i)))) return false;
    return true;
}

ExtRational fincof_counting_measure(const FinCofElement& a) {
    if (a.is_cofinite()) return ExtRational::infinity();
    return ExtRational(Rational(a.support().size()));
}

FinCofElement fc_refute_supremum(const FinCofElement& u) {
    if (!u.is_cofinite())
        throw NotUpperBoundError("a finite set cannot bound arbitrarily large finite sets of evens");
    for (auto n : u.support())
        if (n % 2 == 0)
            throw NotUpperBoundError("complement contains the even number " + std::to_string(n) +
                                     ", so some finite set of evens escapes the bound");
    // Least odd number still inside u; removing it keeps every finite set of
    // evens below the result while shrinking it strictly.
    std::uint64_t odd = 1;
    while (u.support().count(odd)) odd += 2;
    auto sup = u.support();
    sup.insert(odd);
    return FinCofElement::cofinite(std::move(sup));
}

} // namespace malg
