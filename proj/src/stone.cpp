#include "malg/stone.hpp"

namespace malg {

StoneSpace stone_space(const AlgebraPtr& alg) {
    StoneSpace s{alg, {}};
    s.points.reserve(alg->atom_count());
    for (std::size_t i = 0; i < alg->atom_count(); ++i) s.points.emplace_back(alg, i);
    return s;
}

std::vector<std::size_t> hat(const Element& a, const StoneSpace& space) {
    if (a.parent().get() != space.algebra.get())
        throw ParentMismatchError("element not from the space's algebra");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < space.points.size(); ++i)
        if (space.points[i].evaluate(a)) out.push_back(i);
    return out;
}

StoneWitness round_trip_check(const AlgebraPtr& alg) {
    StoneSpace space = stone_space(alg);
    const std::size_t n = space.points.size();

    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = "z(" + alg->atom_label(space.points[i].defining_atom()) + ")";
    AlgebraPtr clopen = FiniteBooleanAlgebra::make(std::move(labels));

    // hat as a homomorphism: point i pulls back to its defining atom.
    std::vector<std::optional<std::size_t>> atom_map(n);
    for (std::size_t i = 0; i < n; ++i) atom_map[i] = space.points[i].defining_atom();
    BooleanHom iso(alg, clopen, std::move(atom_map));

    // Verify the claimed isomorphism the hard way: hom laws on every element
    // pair, injectivity on all elements, surjectivity by counting. Any
    // failure is an internal inconsistency, not a caller error.
    const std::size_t total = alg->element_count();
    auto element_of = [&](std::size_t code) {
        AtomSet s(alg->atom_count());
        for (std::size_t i = 0; i < alg->atom_count(); ++i)
            if ((code >> i) & 1) s.set(i);
        return alg->element(s);
    };
    std::set<AtomSet> images;
    for (std::size_t ca = 0; ca < total; ++ca) {
        Element a = element_of(ca);
        Element ha = iso.apply(a);
        if (iso.apply(complement(a)) != complement(ha))
            throw Error("round trip failed: complement not preserved at " + a.str());
        images.insert(ha.atoms());
        for (std::size_t cb = 0; cb < total; ++cb) {
            Element b = element_of(cb);
            if (iso.apply(meet(a, b)) != meet(ha, iso.apply(b)))
                throw Error("round trip failed: meet not preserved at " + a.str() + ", " + b.str());
            if (iso.apply(symdiff(a, b)) != symdiff(ha, iso.apply(b)))
                throw Error("round trip failed: ring sum not preserved at " + a.str() + ", " + b.str());
        }
    }
    if (images.size() != total)
        throw Error("round trip failed: hat map not injective");
    if (total != clopen->element_count())
        throw Error("round trip failed: clopen algebra has the wrong size");
    if (!iso.apply(alg->unit()).is_unit())
        throw Error("round trip failed: unit not preserved");

    return StoneWitness{std::move(space), clopen, std::move(iso)};
}

} // namespace malg
