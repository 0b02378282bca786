#include "malg/boolean.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <sstream>

namespace malg {

std::size_t AtomSet::count() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

std::vector<std::size_t> AtomSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
        if (test(i)) out.push_back(i);
    return out;
}

AlgebraPtr FiniteBooleanAlgebra::make(std::size_t atom_count) {
    std::vector<std::string> labels(atom_count);
    for (std::size_t i = 0; i < atom_count; ++i) labels[i] = "a" + std::to_string(i);
    return make(std::move(labels));
}

AlgebraPtr FiniteBooleanAlgebra::make(std::vector<std::string> labels) {
    return AlgebraPtr(new FiniteBooleanAlgebra(std::move(labels)));
}

Element FiniteBooleanAlgebra::zero() const {
    return Element(shared_from_this(), AtomSet(atom_count()));
}

Element FiniteBooleanAlgebra::unit() const {
    return Element(shared_from_this(), AtomSet::full(atom_count()));
}

Element FiniteBooleanAlgebra::atom(std::size_t i) const {
    if (i >= atom_count()) throw Error("atom index out of range");
    AtomSet s(atom_count());
    s.set(i);
    return Element(shared_from_this(), s);
}

Element FiniteBooleanAlgebra::element(const AtomSet& atoms) const {
    if (atoms.size() != atom_count()) throw Error("atom set sized for a different algebra");
    return Element(shared_from_this(), atoms);
}

Element FiniteBooleanAlgebra::element(const std::vector<std::size_t>& atom_indices) const {
    AtomSet s(atom_count());
    for (auto i : atom_indices) {
        if (i >= atom_count()) throw Error("atom index out of range");
        s.set(i);
    }
    return Element(shared_from_this(), s);
}

std::string Element::str() const {
    if (is_zero()) return "0";
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto i : atoms_.indices()) {
        if (!first) os << "|";
        os << parent_->atom_label(i);
        first = false;
    }
    return os.str();
}

namespace {
void require_same_parent(const Element& a, const Element& b) {
    if (a.parent().get() != b.parent().get()) throw ParentMismatchError();
}
} // namespace

Element meet(const Element& a, const Element& b) {
    require_same_parent(a, b);
    return Element(a.parent(), a.atoms() & b.atoms());
}

Element join(const Element& a, const Element& b) {
    require_same_parent(a, b);
    return Element(a.parent(), a.atoms() | b.atoms());
}

Element complement(const Element& a) {
    return Element(a.parent(), ~a.atoms());
}

Element symdiff(const Element& a, const Element& b) {
    require_same_parent(a, b);
    return Element(a.parent(), a.atoms() ^ b.atoms());
}

Element minus(const Element& a, const Element& b) {
    require_same_parent(a, b);
    return Element(a.parent(), a.atoms() & ~b.atoms());
}

bool leq(const Element& a, const Element& b) {
    require_same_parent(a, b);
    return a.atoms().is_subset_of(b.atoms());
}

BooleanHom::BooleanHom(AlgebraPtr source, AlgebraPtr target,
                       std::vector<std::optional<std::size_t>> atom_map)
    : source_(std::move(source)), target_(std::move(target)), atom_map_(std::move(atom_map)) {
    if (atom_map_.size() != target_->atom_count())
        throw Error("atom assignment sized for a different target algebra");
    for (const auto& s : atom_map_)
        if (s && *s >= source_->atom_count()) throw Error("atom assignment names a missing source atom");
}

Element BooleanHom::apply(const Element& a) const {
    if (a.parent().get() != source_.get()) throw ParentMismatchError("element not from the hom's source algebra");
    AtomSet img(target_->atom_count());
    for (std::size_t t = 0; t < atom_map_.size(); ++t)
        if (atom_map_[t] && a.contains_atom(*atom_map_[t])) img.set(t);
    return Element(target_, img);
}

Element BooleanHom::unit_image() const {
    AtomSet img(target_->atom_count());
    for (std::size_t t = 0; t < atom_map_.size(); ++t)
        if (atom_map_[t]) img.set(t);
    return Element(target_, img);
}

bool BooleanHom::is_unital() const {
    for (const auto& s : atom_map_)
        if (!s) return false;
    return true;
}

bool BooleanHom::is_injective() const {
    std::vector<bool> hit(source_->atom_count(), false);
    for (const auto& s : atom_map_)
        if (s) hit[*s] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool BooleanHom::is_isomorphism() const {
    if (source_->atom_count() != target_->atom_count()) return false;
    std::vector<bool> hit(source_->atom_count(), false);
    for (const auto& s : atom_map_) {
        if (!s || hit[*s]) return false;
        hit[*s] = true;
    }
    return true;
}

GeneratedSubalgebra generated_subalgebra(const AlgebraPtr& alg, const std::vector<Element>& generators) {
    const std::size_t n = alg->atom_count();
    for (const auto& g : generators)
        if (g.parent().get() != alg.get()) throw ParentMismatchError("generator not from the given algebra");

    // One-element extension, iterated: C := {(a AND c) OR (b MINUS c) : a,b in C}
    // starting from {0,1}. Closure under the ring operations follows from the
    // shape of the step, so no further saturation pass is needed.
    std::set<AtomSet> closed;
    closed.insert(AtomSet(n));
    closed.insert(AtomSet::full(n));
    for (const auto& g : generators) {
        const AtomSet& c = g.atoms();
        std::set<AtomSet> next;
        for (const auto& a : closed)
            for (const auto& b : closed) next.insert((a & c) | (b & ~c));
        closed = std::move(next);
    }

    // Cells of the partition: for each parent atom, the smallest member of the
    // closed family containing it (the family is closed under meets).
    std::map<AtomSet, std::size_t> cell_index; // cell -> subalgebra atom, in order of least atom
    std::vector<AtomSet> cells;
    std::vector<std::optional<std::size_t>> atom_to_cell(n);
    for (std::size_t i = 0; i < n; ++i) {
        AtomSet cell = AtomSet::full(n);
        for (const auto& m : closed)
            if (m.test(i)) cell = cell & m;
        auto it = cell_index.find(cell);
        if (it == cell_index.end()) {
            it = cell_index.emplace(cell, cells.size()).first;
            cells.push_back(cell);
        }
        atom_to_cell[i] = it->second;
    }

    std::vector<std::string> labels;
    labels.reserve(cells.size());
    for (const auto& cell : cells) {
        std::string lab;
        for (auto i : cell.indices()) {
            if (!lab.empty()) lab += "+";
            lab += alg->atom_label(i);
        }
        labels.push_back(lab);
    }
    AlgebraPtr sub = FiniteBooleanAlgebra::make(std::move(labels));

    std::vector<Element> elements;
    elements.reserve(closed.size());
    for (const auto& m : closed) elements.push_back(Element(alg, m));

    return GeneratedSubalgebra{sub, BooleanHom(sub, alg, atom_to_cell), std::move(elements)};
}

std::size_t minimal_generating_size(const AlgebraPtr& alg, std::size_t atom_bound) {
    const std::size_t n = alg->atom_count();
    if (n > atom_bound)
        throw BoundExceededError("minimal generating size search limited to " +
                                 std::to_string(atom_bound) + " atoms");
    if (n <= 1) return 0; // {} already generates {0,1}, the whole algebra

    // All elements, as candidate generators. A subset generates the whole
    // algebra exactly when it separates every pair of atoms (all membership
    // signatures distinct).
    const std::size_t total = std::size_t{1} << n;
    std::vector<AtomSet> elems;
    elems.reserve(total);
    for (std::size_t code = 0; code < total; ++code) {
        AtomSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((code >> i) & 1) s.set(i);
        elems.push_back(s);
    }

    for (std::size_t k = 1;; ++k) {
        std::vector<std::size_t> pick(k);
        // enumerate k-combinations of element indices in lexicographic order
        for (std::size_t i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::set<std::vector<bool>> signatures;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<bool> sig(k);
                for (std::size_t j = 0; j < k; ++j) sig[j] = elems[pick[j]].test(i);
                signatures.insert(std::move(sig));
            }
            if (signatures.size() == n) return k;
            // next combination
            std::size_t j = k;
            while (j > 0 && pick[j - 1] == total - k + (j - 1)) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t l = j; l < k; ++l) pick[l] = pick[l - 1] + 1;
        }
    }
}

// ---- axiom checking ----------------------------------------------------

namespace {

// The identity families verified on every (x,y,z) triple the driver feeds in.
// Generic over the element type so the finite algebras and the
// finite/cofinite algebra share one implementation.
template <class E, class Ops>
void check_triple(const E& x, const E& y, const E& z, const Ops& ops,
                  std::vector<AxiomViolation>& out) {
    auto fail = [&](const char* family, const std::string& detail) {
        out.push_back(AxiomViolation{family, detail});
    };
    auto A = ops.meet, V = ops.join;
    auto C = ops.complement;
    auto X = ops.symdiff;
    const E& zero = ops.zero;
    const E& one = ops.one;

    if (V(V(x, y), z) != V(x, V(y, z)) || A(A(x, y), z) != A(x, A(y, z)))
        fail("associativity-commutativity", "associativity: " + ops.render(x, y, z));
    if (V(x, y) != V(y, x) || A(x, y) != A(y, x))
        fail("associativity-commutativity", "commutativity: " + ops.render(x, y, z));
    if (A(x, x) != x || V(x, x) != x)
        fail("idempotence", ops.render(x, y, z));
    if (V(x, A(x, y)) != x || A(x, V(x, y)) != x)
        fail("absorption", ops.render(x, y, z));
    if (C(V(x, y)) != A(C(x), C(y)) || C(A(x, y)) != V(C(x), C(y)))
        fail("de-morgan", ops.render(x, y, z));
    if (A(x, V(y, z)) != V(A(x, y), A(x, z)) || V(x, A(y, z)) != A(V(x, y), V(x, z)))
        fail("distributivity", ops.render(x, y, z));
    if (V(x, zero) != x || A(x, one) != x)
        fail("neutral-elements", ops.render(x, y, z));
    // y = x' exactly when x OR y = 1 and x AND y = 0
    bool looks_complementary = (V(x, y) == one && A(x, y) == zero);
    if (looks_complementary != (y == C(x)))
        fail("complement-characterization", ops.render(x, y, z));
    if (X(x, x) != zero)
        fail("symdiff-nilpotence", ops.render(x, y, z));
}

const std::vector<std::string> kFamilies = {
    "associativity-commutativity", "idempotence",           "absorption",
    "de-morgan",                   "distributivity",        "neutral-elements",
    "complement-characterization", "symdiff-nilpotence"};

struct FiniteOps {
    Element (*meet)(const Element&, const Element&) = &malg::meet;
    Element (*join)(const Element&, const Element&) = &malg::join;
    Element (*complement)(const Element&) = &malg::complement;
    Element (*symdiff)(const Element&, const Element&) = &malg::symdiff;
    Element zero, one;
    std::string render(const Element& x, const Element& y, const Element& z) const {
        return "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
    }
};

} // namespace

AxiomReport check_axioms(const AlgebraPtr& alg, std::size_t triple_limit, std::uint64_t seed) {
    AxiomReport report;
    report.families = kFamilies;
    FiniteOps ops{.zero = alg->zero(), .one = alg->unit()};

    const std::size_t n = alg->atom_count();
    auto element_of = [&](std::uint64_t code) {
        AtomSet s(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((code >> i) & 1) s.set(i);
        return alg->element(s);
    };

    // Exhaustive when the whole triple space fits the budget; otherwise a
    // deterministic sample of the same size.
    bool exhaustive = n < 20 && (n * 3 < 64) &&
                      ((std::uint64_t{1} << (3 * n)) <= triple_limit);
    report.exhaustive = exhaustive;
    if (exhaustive) {
        const std::uint64_t m = std::uint64_t{1} << n;
        for (std::uint64_t cx = 0; cx < m; ++cx)
            for (std::uint64_t cy = 0; cy < m; ++cy)
                for (std::uint64_t cz = 0; cz < m; ++cz) {
                    check_triple(element_of(cx), element_of(cy), element_of(cz), ops,
                                 report.violations);
                    ++report.cases_checked;
                }
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t k = 0; k < triple_limit; ++k) {
            auto draw = [&] {
                AtomSet s(n);
                for (std::size_t i = 0; i < n; ++i)
                    if (rng() & 1) s.set(i);
                return alg->element(s);
            };
            check_triple(draw(), draw(), draw(), ops, report.violations);
            ++report.cases_checked;
        }
    }
    return report;
}

// ---- finite/cofinite ----------------------------------------------------

std::string FinCofElement::str() const {
    std::ostringstream os;
    os << (cofinite_ ? "cofinite{" : "finite{");
    bool first = true;
    for (auto n : support_) {
        if (!first) os << ",";
        os << n;
        first = false;
    }
    os << "}";
    return os.str();
}

namespace {
std::set<std::uint64_t> set_union(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> r = a;
    r.insert(b.begin(), b.end());
    return r;
}
std::set<std::uint64_t> set_inter(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> r;
    for (auto n : a)
        if (b.count(n)) r.insert(n);
    return r;
}
std::set<std::uint64_t> set_minus(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
    std::set<std::uint64_t> r;
    for (auto n : a)
        if (!b.count(n)) r.insert(n);
    return r;
}
} // namespace

FinCofElement fincof_meet(const FinCofElement& a, const FinCofElement& b) {
    if (!a.is_cofinite() && !b.is_cofinite())
        return FinCofElement::finite(set_inter(a.support(), b.support()));
    if (a.is_cofinite() && b.is_cofinite())
        return FinCofElement::cofinite(set_union(a.support(), b.support()));
    // finite AND cofinite: members of the finite set not excluded by the other
    const FinCofElement& fin = a.is_cofinite() ? b : a;
    const FinCofElement& cof = a.is_cofinite() ? a : b;
    return FinCofElement::finite(set_minus(fin.support(), cof.support()));
}

FinCofElement fincof_complement(const FinCofElement& a) {
    return a.is_cofinite() ? FinCofElement::finite(a.support()) : FinCofElement::cofinite(a.support());
}

FinCofElement fincof_join(const FinCofElement& a, const FinCofElement& b) {
    // De Morgan through the complement keeps the case analysis in one place.
    return fincof_complement(fincof_meet(fincof_complement(a), fincof_complement(b)));
}

FinCofElement fincof_symdiff(const FinCofElement& a, const FinCofElement& b) {
    return fincof_join(fincof_meet(a, fincof_complement(b)), fincof_meet(b, fincof_complement(a)));
}

bool fincof_leq(const FinCofElement& a, const FinCofElement& b) {
    return fincof_meet(a, b) == a;
}

std::set<std::uint64_t> fincof_restrict(const FinCofElement& a, std::uint64_t n) {
    std::set<std::uint64_t> r;
    for (std::uint64_t i = 0; i <= n; ++i)
        if (a.contains(i)) r.insert(i);
    return r;
}

AxiomReport check_axioms_fincof(std::uint64_t window, std::size_t samples, std::uint64_t seed) {
    AxiomReport report;
    report.families = kFamilies;
    report.exhaustive = false;

    struct Ops {
        FinCofElement (*meet)(const FinCofElement&, const FinCofElement&) = &fincof_meet;
        FinCofElement (*join)(const FinCofElement&, const FinCofElement&) = &fincof_join;
        FinCofElement (*complement)(const FinCofElement&) = &fincof_complement;
        FinCofElement (*symdiff)(const FinCofElement&, const FinCofElement&) = &fincof_symdiff;
        FinCofElement zero = FinCofElement::zero();
        FinCofElement one = FinCofElement::unit();
        std::string render(const FinCofElement& x, const FinCofElement& y, const FinCofElement& z) const {
            return "x=" + x.str() + " y=" + y.str() + " z=" + z.str();
        }
    } ops;

    std::mt19937_64 rng(seed);
    auto draw = [&] {
        std::set<std::uint64_t> sup;
        for (std::uint64_t i = 0; i <= window; ++i)
            if (rng() & 1) sup.insert(i);
        return (rng() & 1) ? FinCofElement::cofinite(std::move(sup))
                           : FinCofElement::finite(std::move(sup));
    };
    for (std::size_t k = 0; k < samples; ++k) {
        check_triple(draw(), draw(), draw(), ops, report.violations);
        ++report.cases_checked;
    }
    return report;
}

} // namespace malg
