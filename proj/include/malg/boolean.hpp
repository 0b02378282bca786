#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "malg/error.hpp"

namespace malg {

// Finite set of atom indices, sized to its parent algebra. Element identity,
// subset tests and the ring operations all reduce to word-parallel bit ops;
// nothing here caps the atom count.
class AtomSet {
public:
    AtomSet() = default;
    explicit AtomSet(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    static AtomSet full(std::size_t size) {
        AtomSet s(size);
        for (auto& w : s.words_) w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    std::size_t size() const { return size_; }

    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v = true) {
        std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    std::size_t count() const;

    AtomSet operator&(const AtomSet& o) const { return zip(o, [](auto a, auto b) { return a & b; }); }
    AtomSet operator|(const AtomSet& o) const { return zip(o, [](auto a, auto b) { return a | b; }); }
    AtomSet operator^(const AtomSet& o) const { return zip(o, [](auto a, auto b) { return a ^ b; }); }
    AtomSet operator~() const {
        AtomSet r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
        r.trim();
        return r;
    }

    bool is_subset_of(const AtomSet& o) const {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    bool operator==(const AtomSet& o) const = default;
    // Lexicographic on the word vector; only used as a container key.
    std::strong_ordering operator<=>(const AtomSet& o) const {
        if (auto c = size_ <=> o.size_; c != 0) return c;
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (auto c = words_[k] <=> o.words_[k]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::vector<std::size_t> indices() const;

private:
    template <class F>
    AtomSet zip(const AtomSet& o, F f) const {
        AtomSet r(size_);
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = f(words_[k], o.words_[k]);
        return r;
    }
    void trim() {
        if (size_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class Element;

// Finite Boolean algebra presented by its atoms. Instances are immutable and
// shared; element operations check parent identity (the pointer), so build
// each algebra once and pass the handle around.
class FiniteBooleanAlgebra : public std::enable_shared_from_this<FiniteBooleanAlgebra> {
public:
    static std::shared_ptr<const FiniteBooleanAlgebra> make(std::size_t atom_count);
    static std::shared_ptr<const FiniteBooleanAlgebra> make(std::vector<std::string> atom_labels);

    std::size_t atom_count() const { return labels_.size(); }
    const std::string& atom_label(std::size_t i) const { return labels_[i]; }
    const std::vector<std::string>& atom_labels() const { return labels_; }
    std::size_t element_count() const { return std::size_t{1} << labels_.size(); }
    // The one-element algebra where 0 = 1.
    bool degenerate() const { return labels_.empty(); }

    Element zero() const;
    Element unit() const;
    Element atom(std::size_t i) const;
    Element element(const AtomSet& atoms) const;
    Element element(const std::vector<std::size_t>& atom_indices) const;

private:
    explicit FiniteBooleanAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {}
    std::vector<std::string> labels_;
};

using AlgebraPtr = std::shared_ptr<const FiniteBooleanAlgebra>;

// Element of a FiniteBooleanAlgebra: a join of atoms, tagged with its parent.
class Element {
public:
    Element() = default;
    Element(AlgebraPtr parent, AtomSet atoms) : parent_(std::move(parent)), atoms_(std::move(atoms)) {}

    const AlgebraPtr& parent() const { return parent_; }
    const AtomSet& atoms() const { return atoms_; }

    bool is_zero() const { return atoms_.none(); }
    bool is_unit() const { return atoms_ == AtomSet::full(atoms_.size()); }
    bool contains_atom(std::size_t i) const { return atoms_.test(i); }
    std::size_t atom_count() const { return atoms_.count(); }

    bool operator==(const Element& o) const {
        return parent_.get() == o.parent_.get() && atoms_ == o.atoms_;
    }

    std::string str() const; // "0", "1", or "a|b|..." over atom labels

private:
    AlgebraPtr parent_;
    AtomSet atoms_;
};

// Ring/lattice operations. meet is the ring product, symdiff the ring sum.
Element meet(const Element& a, const Element& b);
Element join(const Element& a, const Element& b);
Element complement(const Element& a);
Element symdiff(const Element& a, const Element& b);
Element minus(const Element& a, const Element& b); // a and not b
bool leq(const Element& a, const Element& b);      // a <= b, i.e. meet(a,b) == a

inline Element operator&(const Element& a, const Element& b) { return meet(a, b); }
inline Element operator|(const Element& a, const Element& b) { return join(a, b); }
inline Element operator^(const Element& a, const Element& b) { return symdiff(a, b); }
inline Element operator~(const Element& a) { return complement(a); }

// Homomorphism between finite algebras, stored as the atom assignment of the
// target: atom_map[t] names the source atom whose image covers target atom t,
// or nullopt when t lies outside the image of the source unit. A total map
// gives a unital homomorphism; partial maps arise as embeddings onto
// principal ideals (disjoint-sum injections).
class BooleanHom {
public:
    BooleanHom(AlgebraPtr source, AlgebraPtr target,
               std::vector<std::optional<std::size_t>> atom_map);

    const AlgebraPtr& source() const { return source_; }
    const AlgebraPtr& target() const { return target_; }
    const std::vector<std::optional<std::size_t>>& atom_map() const { return atom_map_; }

    Element apply(const Element& a) const;
    Element unit_image() const; // apply(1); the unit of the image ideal

    bool is_unital() const;
    bool is_injective() const;  // atom_map hits every source atom
    bool is_isomorphism() const;

private:
    AlgebraPtr source_;
    AlgebraPtr target_;
    std::vector<std::optional<std::size_t>> atom_map_;
};

// Subalgebra generated by a family of elements, produced by iterating the
// one-element extension step {(a AND c) OR (b AND NOT c)}. The subalgebra is
// returned as an algebra in its own right (atoms = the nonempty cells of the
// partition the generators refine) together with the embedding that sends
// each cell atom to the corresponding element of the parent.
struct GeneratedSubalgebra {
    AlgebraPtr subalgebra;
    BooleanHom embedding; // subalgebra -> parent, injective and unital
    // All elements of the parent lying in the subalgebra, sorted.
    std::vector<Element> elements;
};

GeneratedSubalgebra generated_subalgebra(const AlgebraPtr& alg, const std::vector<Element>& generators);

// Size of the smallest generating set, by exhaustive search over element
// subsets ordered by size. For an algebra with n >= 1 atoms this is
// ceil(log2(n)); the one-atom (two-element) algebra needs no generators at
// all. Throws BoundExceededError past atom_bound.
std::size_t minimal_generating_size(const AlgebraPtr& alg, std::size_t atom_bound = 5);

// ---- axiom checking ----------------------------------------------------

struct AxiomViolation {
    std::string family;  // which identity family failed
    std::string detail;  // the offending instance, rendered
};

struct AxiomReport {
    bool exhaustive = false;        // whole triple space covered, or sampled
    std::size_t cases_checked = 0;  // number of (x,y,z) triples visited
    std::vector<std::string> families; // identity families that were checked
    std::vector<AxiomViolation> violations;
    bool passed() const { return violations.empty(); }
};

// Verifies the ring/lattice identity families (associativity+commutativity,
// idempotence, absorption, De Morgan, distributivity, neutral elements,
// complement characterization) plus nilpotence of the ring sum. Exhaustive
// when the triple count stays within triple_limit, sampled otherwise.
AxiomReport check_axioms(const AlgebraPtr& alg,
                         std::size_t triple_limit = (std::size_t{1} << 18),
                         std::uint64_t seed = 0x6d616c67);

// ---- finite/cofinite algebra over the naturals ---------------------------

// Element of the algebra of finite and cofinite subsets of {0,1,2,...}:
// either a finite set or the complement of one. The smallest infinite
// Boolean algebra realized with explicit supports.
class FinCofElement {
public:
    static FinCofElement finite(std::set<std::uint64_t> support) {
        return FinCofElement(false, std::move(support));
    }
    static FinCofElement cofinite(std::set<std::uint64_t> complement) {
        return FinCofElement(true, std::move(complement));
    }
    static FinCofElement zero() { return finite({}); }
    static FinCofElement unit() { return cofinite({}); }

    bool is_cofinite() const { return cofinite_; }
    // Finite kind: the set itself. Cofinite kind: the (finite) complement.
    const std::set<std::uint64_t>& support() const { return support_; }

    bool contains(std::uint64_t n) const {
        bool listed = support_.count(n) > 0;
        return cofinite_ ? !listed : listed;
    }

    bool operator==(const FinCofElement& o) const = default;

    std::string str() const;

private:
    FinCofElement(bool cof, std::set<std::uint64_t> sup) : cofinite_(cof), support_(std::move(sup)) {}
    bool cofinite_;
    std::set<std::uint64_t> support_;
};

FinCofElement fincof_meet(const FinCofElement& a, const FinCofElement& b);
FinCofElement fincof_join(const FinCofElement& a, const FinCofElement& b);
FinCofElement fincof_complement(const FinCofElement& a);
FinCofElement fincof_symdiff(const FinCofElement& a, const FinCofElement& b);
bool fincof_leq(const FinCofElement& a, const FinCofElement& b);

// Restriction to the window {0..n}; lets tests compare against plain finite
// set arithmetic.
std::set<std::uint64_t> fincof_restrict(const FinCofElement& a, std::uint64_t n);

// Same identity families as check_axioms, on randomly sampled finite/cofinite
// elements with supports inside {0..window}.
AxiomReport check_axioms_fincof(std::uint64_t window = 15,
                                std::size_t samples = 4096,
                                std::uint64_t seed = 0x6d616c67);

} // namespace malg
