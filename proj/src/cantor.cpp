#include "malg/cantor.hpp"

#include <sstream>

namespace malg {

namespace {
constexpr std::uint32_t kMaxDepth = 62;
// Word sets are materialized explicitly, so operations whose result size is
// exponential in the depth get a budget rather than a hang.
constexpr std::uint64_t kMaxWords = std::uint64_t{1} << 22;

void require_depth(std::uint32_t depth) {
    if (depth > kMaxDepth) throw BoundExceededError("cylinder depth limited to 62 coordinates");
}

std::string word_str(std::uint64_t w, std::uint32_t depth) {
    std::string s(depth, '0');
    for (std::uint32_t i = 0; i < depth; ++i)
        if ((w >> (depth - 1 - i)) & 1) s[i] = '1';
    return s;
}
} // namespace

std::string CylinderSet::str() const {
    if (words.empty()) return "{}";
    if (depth == 0) return "{e}";
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto w : words) {
        if (!first) os << ",";
        os << word_str(w, depth);
        first = false;
    }
    os << "}@" << depth;
    return os.str();
}

CylinderSet canonicalize(const CylinderSet& c) {
    CylinderSet r = c;
    if (r.words.empty()) {
        r.depth = 0;
        return r;
    }
    // Drop the last coordinate while every word has its sibling present.
    while (r.depth > 0) {
        bool mergeable = true;
        for (auto w : r.words)
            if (!r.words.count(w ^ 1)) {
                mergeable = false;
                break;
            }
        if (!mergeable) break;
        std::set<std::uint64_t> up;
        for (auto w : r.words) up.insert(w >> 1);
        r.words = std::move(up);
        --r.depth;
    }
    return r;
}

CylinderSet make_cylinder(std::uint32_t depth, std::set<std::uint64_t> words) {
    require_depth(depth);
    for (auto w : words)
        if (depth < 64 && w >= (std::uint64_t{1} << depth))
            throw Error("word does not fit the stated depth");
    return canonicalize(CylinderSet{depth, std::move(words)});
}

CylinderSet refine(const CylinderSet& c, std::uint32_t m) {
    require_depth(m);
    if (m < c.depth) throw Error("cannot refine below the set's depth");
    std::uint32_t shift = m - c.depth;
    if (shift >= 63 || c.words.size() * (std::uint64_t{1} << shift) > kMaxWords)
        throw BoundExceededError("refined word set would exceed the materialization budget");
    CylinderSet r{m, {}};
    for (auto w : c.words)
        for (std::uint64_t k = 0; k < (std::uint64_t{1} << shift); ++k)
            r.words.insert((w << shift) | k);
    return r;
}

Rational cylinder_measure(const CylinderSet& c) {
    return Rational(Integer(c.words.size()), Integer(1) << c.depth);
}

CylinderSet cylinder_meet(const CylinderSet& a, const CylinderSet& b) {
    std::uint32_t d = std::max(a.depth, b.depth);
    CylinderSet ra = refine(a, d), rb = refine(b, d);
    CylinderSet out{d, {}};
    for (auto w : ra.words)
        if (rb.words.count(w)) out.words.insert(w);
    return canonicalize(out);
}

CylinderSet cylinder_join(const CylinderSet& a, const CylinderSet& b) {
    std::uint32_t d = std::max(a.depth, b.depth);
    CylinderSet ra = refine(a, d), rb = refine(b, d);
    ra.words.insert(rb.words.begin(), rb.words.end());
    return canonicalize(ra);
}

CylinderSet cylinder_symdiff(const CylinderSet& a, const CylinderSet& b) {
    std::uint32_t d = std::max(a.depth, b.depth);
    CylinderSet ra = refine(a, d), rb = refine(b, d);
    CylinderSet out{d, {}};
    for (auto w : ra.words)
        if (!rb.words.count(w)) out.words.insert(w);
    for (auto w : rb.words)
        if (!ra.words.count(w)) out.words.insert(w);
    return canonicalize(out);
}

CylinderSet cylinder_complement(const CylinderSet& a) {
    if ((std::uint64_t{1} << a.depth) > kMaxWords)
        throw BoundExceededError("complement word set would exceed the materialization budget");
    CylinderSet out{a.depth, {}};
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << a.depth); ++w)
        if (!a.words.count(w)) out.words.insert(w);
    return canonicalize(out);
}

CylinderSet cylinder_full() { return CylinderSet{0, {0}}; }
CylinderSet cylinder_empty() { return CylinderSet{0, {}}; }

CylinderSet fix_coordinate(std::uint32_t j, bool value) {
    require_depth(j + 1);
    if ((std::uint64_t{1} << (j + 1)) > kMaxWords)
        throw BoundExceededError("coordinate too deep to materialize");
    CylinderSet out{j + 1, {}};
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << (j + 1)); ++w)
        if ((w & 1) == (value ? 1u : 0u)) out.words.insert(w); // coordinate j is the last bit
    return canonicalize(out);
}

CylinderSet generator(std::uint32_t j) { return fix_coordinate(j, true); }

bool product_state_check(const std::vector<std::pair<std::uint32_t, bool>>& constraints) {
    std::set<std::uint32_t> seen;
    for (const auto& [j, v] : constraints)
        if (!seen.insert(j).second) throw Error("coordinate constrained twice");
    CylinderSet c = cylinder_full();
    for (const auto& [j, v] : constraints) c = cylinder_meet(c, fix_coordinate(j, v));
    Rational expected(Integer(1), Integer(1) << constraints.size());
    return cylinder_measure(c) == expected;
}

Rational DyadicIntervalUnion::total_length() const {
    Rational sum = 0;
    for (const auto& p : parts) sum += p.hi - p.lo;
    return sum;
}

std::string DyadicIntervalUnion::str() const {
    if (parts.empty()) return "(empty)";
    std::ostringstream os;
    bool first = true;
    for (const auto& p : parts) {
        if (!first) os << " u ";
        os << "[" << rat_str(p.lo) << ", " << rat_str(p.hi) << (p.closed_right ? "]" : ")");
        first = false;
    }
    return os.str();
}

DyadicIntervalUnion cantor_to_interval(const CylinderSet& c) {
    DyadicIntervalUnion out;
    const Integer den = Integer(1) << c.depth;
    std::uint64_t run_start = 0, run_end = 0;
    bool in_run = false;
    auto flush = [&] {
        if (!in_run) return;
        DyadicInterval iv{Rational(Integer(run_start), den), Rational(Integer(run_end) + 1, den), false};
        if (iv.hi == 1) iv.closed_right = true; // the all-ones tail lands on 1
        out.parts.push_back(std::move(iv));
        in_run = false;
    };
    for (auto w : c.words) { // std::set iterates in increasing word order
        if (in_run && w == run_end + 1) {
            run_end = w;
        } else {
            flush();
            run_start = run_end = w;
            in_run = true;
        }
    }
    flush();
    return out;
}

CylinderSet find_projection_of_measure(const Rational& t) {
    if (t < 0 || t > 1) throw UnsupportedPrecisionError("projection target must lie in [0,1]");
    if (!is_dyadic(t))
        throw UnsupportedPrecisionError("projection target must be dyadic: got " + rat_str(t));
    if (t == 1) return cylinder_full();
    // t = a/2^n in lowest terms: the preimage of [0, t) is the first a words
    // at depth n. Canonicalizing merges them into one word per set bit of a.
    Integer den = boost::multiprecision::denominator(t);
    Integer num = boost::multiprecision::numerator(t);
    std::uint32_t n = 0;
    while (den > 1) {
        den /= 2;
        ++n;
    }
    require_depth(n);
    if ((std::uint64_t{1} << std::min(n, std::uint32_t{63})) > kMaxWords)
        throw BoundExceededError("projection word set would exceed the materialization budget");
    CylinderSet out{n, {}};
    for (std::uint64_t w = 0; w < static_cast<std::uint64_t>(num); ++w) out.words.insert(w);
    return canonicalize(out);
}

MeasureAlgebra truncated_algebra(std::uint32_t depth) {
    require_depth(depth);
    if (depth > 20) throw BoundExceededError("truncated algebra materialization limited to depth 20");
    const std::uint64_t n = std::uint64_t{1} << depth;
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::uint64_t w = 0; w < n; ++w)
        labels.push_back(depth == 0 ? std::string("e") : word_str(w, depth));
    ExtRational mass{Rational(Integer(1), Integer(1) << depth)};
    return MeasureAlgebra(FiniteBooleanAlgebra::make(std::move(labels)),
                          std::vector<ExtRational>(n, mass));
}

Element cylinder_as_element(const CylinderSet& c, const MeasureAlgebra& truncated) {
    std::uint32_t depth = 0;
    while ((std::uint64_t{1} << depth) < truncated.algebra->atom_count()) ++depth;
    if ((std::uint64_t{1} << depth) != truncated.algebra->atom_count())
        throw Error("not a truncated cylinder algebra");
    CylinderSet r = refine(c, depth);
    AtomSet s(truncated.algebra->atom_count());
    for (auto w : r.words) s.set(w);
    return truncated.algebra->element(s);
}

MeasureAlgebra tensor(const MeasureAlgebra& a, const MeasureAlgebra& b) {
    if (!a.total_mass().is_finite() || !b.total_mass().is_finite())
        throw NotSemifiniteError("tensor factors must have finite total mass");
    std::vector<std::string> labels;
    std::vector<ExtRational> masses;
    labels.reserve(a.algebra->atom_count() * b.algebra->atom_count());
    for (std::size_t i = 0; i < a.algebra->atom_count(); ++i)
        for (std::size_t j = 0; j < b.algebra->atom_count(); ++j) {
            labels.push_back(a.algebra->atom_label(i) + "*" + b.algebra->atom_label(j));
            masses.push_back(ExtRational(a.atom_mass[i].value() * b.atom_mass[j].value()));
        }
    return MeasureAlgebra(FiniteBooleanAlgebra::make(std::move(labels)), std::move(masses));
}

BooleanHom tensor_unit_witness(const MeasureAlgebra& a, const MeasureAlgebra& unit,
                               const MeasureAlgebra& product) {
    if (unit.algebra->atom_count() != 1 || !(unit.atom_mass[0] == ExtRational(1)))
        throw Error("unit factor must be the single-atom mass-1 algebra");
    if (product.algebra->atom_count() != a.algebra->atom_count())
        throw Error("product does not match the factors");
    // (i, 0) <-> i: the pairing with a single right atom is the identity on
    // indices, so the witness is the identity assignment.
    std::vector<std::optional<std::size_t>> atom_map(a.algebra->atom_count());
    for (std::size_t i = 0; i < atom_map.size(); ++i) atom_map[i] = i;
    return BooleanHom(product.algebra, a.algebra, std::move(atom_map));
}

BooleanHom tensor_assoc_witness(const MeasureAlgebra& a, const MeasureAlgebra& b,
                                const MeasureAlgebra& c, const MeasureAlgebra& left_product,
                                const MeasureAlgebra& right_product) {
    const std::size_t na = a.algebra->atom_count(), nb = b.algebra->atom_count(),
                      nc = c.algebra->atom_count();
    if (left_product.algebra->atom_count() != na * nb * nc ||
        right_product.algebra->atom_count() != na * nb * nc)
        throw Error("products do not match the factors");
    // left index ((i*nb + j)*nc + k) and right index (i*(nb*nc) + j*nc + k)
    // name the same triple; both flatten to i,j,k in the same order, so the
    // witness is again the identity assignment.
    std::vector<std::optional<std::size_t>> atom_map(na * nb * nc);
    for (std::size_t i = 0; i < atom_map.size(); ++i) atom_map[i] = i;
    return BooleanHom(left_product.algebra, right_product.algebra, std::move(atom_map));
}

} // namespace malg
