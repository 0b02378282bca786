#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>

#include "doctest.h"
#include "malg/cantor.hpp"
#include "malg/error.hpp"
#include "malg/maharam.hpp"

using namespace malg;

namespace {

CylinderSet cyl(std::uint32_t depth, std::set<std::uint64_t> words) {
    return make_cylinder(depth, std::move(words));
}

CylinderSet random_cylinder(std::mt19937_64& rng, std::uint32_t max_depth) {
    std::uint32_t d = rng() % (max_depth + 1);
    std::set<std::uint64_t> words;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << d); ++w)
        if (rng() & 1) words.insert(w);
    return make_cylinder(d, std::move(words));
}

// Word-set semantics at a fixed common depth: the independent oracle the
// cylinder operations are compared against.
std::set<std::uint64_t> words_at(const CylinderSet& c, std::uint32_t depth) {
    return refine(c, depth).words;
}

} // namespace

TEST_CASE("measures count words against the depth") {
    CHECK(cylinder_measure(generator(0)) == Rational(1, 2)); // one constrained coordinate
    CHECK(cylinder_measure(cylinder_full()) == Rational(1));
    CHECK(cylinder_measure(cyl(3, {0, 3, 5})) == Rational(3, 8));
    CHECK(cylinder_measure(cylinder_empty()) == Rational(0));
    for (std::uint32_t k = 0; k <= 12; ++k) {
        // fixing k coordinates gives mass 1/2^k
        CylinderSet c = cylinder_full();
        for (std::uint32_t j = 0; j < k; ++j) c = cylinder_meet(c, fix_coordinate(j, (j & 1) == 0));
        CHECK(cylinder_measure(c) == Rational(Integer(1), Integer(1) << k));
    }
}

TEST_CASE("refinement preserves the set and the measure") {
    CylinderSet full2 = refine(cylinder_full(), 2);
    CHECK(full2.depth == 2);
    CHECK(full2.words == std::set<std::uint64_t>{0, 1, 2, 3});

    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        CylinderSet c = random_cylinder(rng, 6);
        std::uint32_t m = c.depth + rng() % (12 - c.depth + 1);
        CylinderSet r = refine(c, m);
        CHECK(cylinder_measure(r) == cylinder_measure(c));
        CHECK(canonicalize(r) == canonicalize(c)); // canonicalize o refine = canonicalize
        CHECK(canonicalize(c) == c);               // random_cylinder already canonicalizes
    }
    CHECK_THROWS_AS((void)refine(cyl(3, {1}), 2), Error);
}

TEST_CASE("canonical form merges complete sibling pairs and nothing else") {
    CHECK(canonicalize(CylinderSet{2, {0, 1}}) == CylinderSet{1, {0}});
    CHECK(canonicalize(CylinderSet{2, {0, 1, 2, 3}}) == cylinder_full());
    CHECK(canonicalize(CylinderSet{3, {}}) == cylinder_empty());
    // {00,01,10}: word 10 lacks its sibling, so depth 2 is canonical
    CylinderSet c{2, {0, 1, 2}};
    CHECK(canonicalize(c) == c);
    CHECK(make_cylinder(2, {0, 1}) == CylinderSet{1, {0}});
    CHECK_THROWS_AS((void)make_cylinder(2, {4}), Error);
}

TEST_CASE("rendering: words at depth, the empty set, the full space") {
    CHECK(cyl(2, {0, 1, 2}).str() == "{00,01,10}@2");
    CHECK(cylinder_empty().str() == "{}");
    CHECK(cylinder_full().str() == "{e}");
    CHECK(generator(0).str() == "{1}@1");
}

TEST_CASE("generators fix one coordinate and are independent") {
    CylinderSet g0 = generator(0);
    CHECK(g0.depth == 1);
    CHECK(g0.words == std::set<std::uint64_t>{1});
    CHECK(cylinder_measure(g0) == Rational(1, 2));
    CHECK(cylinder_meet(generator(0), generator(1)) == cyl(2, {3})); // word 11
    CHECK(cylinder_measure(cylinder_meet(generator(0), generator(1))) == Rational(1, 4));
    for (std::uint32_t j = 0; j < 8; ++j) {
        CHECK(generator(j).depth == j + 1);
        CHECK(cylinder_measure(generator(j)) == Rational(1, 2));
        CHECK(cylinder_measure(cylinder_complement(generator(j))) == Rational(1, 2));
        CHECK(cylinder_complement(generator(j)) == fix_coordinate(j, false));
        CHECK(cylinder_join(generator(j), fix_coordinate(j, false)) == cylinder_full());
    }
}

TEST_CASE("set operations agree with word-set arithmetic at a common depth") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 300; ++t) {
        CylinderSet a = random_cylinder(rng, 6), b = random_cylinder(rng, 6);
        std::uint32_t d = std::max(a.depth, b.depth);
        std::set<std::uint64_t> wa = words_at(a, d), wb = words_at(b, d);

        std::set<std::uint64_t> expect_meet, expect_join = wa, expect_sym, expect_comp;
        for (auto w : wa)
            if (wb.count(w)) expect_meet.insert(w);
        expect_join.insert(wb.begin(), wb.end());
        for (auto w : wa)
            if (!wb.count(w)) expect_sym.insert(w);
        for (auto w : wb)
            if (!wa.count(w)) expect_sym.insert(w);
        for (std::uint64_t w = 0; w < (std::uint64_t{1} << d); ++w)
            if (!wa.count(w)) expect_comp.insert(w);

        CHECK(words_at(cylinder_meet(a, b), d) == expect_meet);
        CHECK(words_at(cylinder_join(a, b), d) == expect_join);
        CHECK(words_at(cylinder_symdiff(a, b), d) == expect_sym);
        CHECK(words_at(cylinder_complement(a), d) == expect_comp);
        // results come back canonical
        CHECK(canonicalize(cylinder_meet(a, b)) == cylinder_meet(a, b));
        // inclusion-exclusion on the measure
        CHECK(cylinder_measure(cylinder_join(a, b)) + cylinder_measure(cylinder_meet(a, b)) ==
              cylinder_measure(a) + cylinder_measure(b));
    }
}

TEST_CASE("every nonzero cylinder splits into two halves of half its measure") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        CylinderSet c = random_cylinder(rng, 6);
        if (c.words.empty()) continue;
        CylinderSet r = refine(c, c.depth + 1);
        std::set<std::uint64_t> left, right;
        for (auto w : r.words) (w & 1 ? right : left).insert(w);
        CylinderSet cl = make_cylinder(c.depth + 1, left), cr = make_cylinder(c.depth + 1, right);
        CHECK(!cl.words.empty());
        CHECK(!cr.words.empty());
        CHECK(cylinder_meet(cl, cr) == cylinder_empty());
        CHECK(cylinder_join(cl, cr) == c);
        CHECK(cylinder_measure(cl) == cylinder_measure(c) / 2);
        CHECK(cylinder_measure(cr) == cylinder_measure(c) / 2);
    }
}

TEST_CASE("the coin-flip state multiplies over disjoint coordinate constraints") {
    CHECK(product_state_check({}));
    CHECK(product_state_check({{0, true}, {1, false}}));
    CHECK(product_state_check({{2, true}, {5, false}, {9, true}}));
    CHECK_THROWS_AS((void)product_state_check({{1, true}, {1, false}}), Error);
}

TEST_CASE("interval images of the basic examples") {
    DyadicIntervalUnion g0 = cantor_to_interval(generator(0));
    REQUIRE(g0.parts.size() == 1);
    CHECK(g0.parts[0] == DyadicInterval{Rational(1, 2), Rational(1), true});
    CHECK(g0.total_length() == Rational(1, 2));
    CHECK(g0.str() == "[1/2, 1]");

    DyadicIntervalUnion full = cantor_to_interval(cylinder_full());
    REQUIRE(full.parts.size() == 1);
    CHECK(full.parts[0] == DyadicInterval{Rational(0), Rational(1), true});

    DyadicIntervalUnion corners = cantor_to_interval(cyl(2, {0, 3}));
    REQUIRE(corners.parts.size() == 2);
    CHECK(corners.parts[0] == DyadicInterval{Rational(0), Rational(1, 4), false});
    CHECK(corners.parts[1] == DyadicInterval{Rational(3, 4), Rational(1), true});
    CHECK(corners.total_length() == Rational(1, 2));
    CHECK(corners.str() == "[0, 1/4) u [3/4, 1]");

    // adjacent words merge into one interval
    DyadicIntervalUnion middle = cantor_to_interval(cyl(2, {1, 2}));
    REQUIRE(middle.parts.size() == 1);
    CHECK(middle.parts[0] == DyadicInterval{Rational(1, 4), Rational(3, 4), false});

    CHECK(cantor_to_interval(cylinder_empty()).parts.empty());
    CHECK(cantor_to_interval(cylinder_empty()).str() == "(empty)");
}

TEST_CASE("the interval map preserves measure exactly and keeps parts separated") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 400; ++t) {
        CylinderSet c = random_cylinder(rng, 8);
        DyadicIntervalUnion u = cantor_to_interval(c);
        CHECK(u.total_length() == cylinder_measure(c));
        for (std::size_t i = 0; i < u.parts.size(); ++i) {
            CHECK(u.parts[i].lo < u.parts[i].hi);
            CHECK(u.parts[i].closed_right == (u.parts[i].hi == 1));
            if (i + 1 < u.parts.size()) CHECK(u.parts[i].hi < u.parts[i + 1].lo); // merged runs
        }
    }
}

TEST_CASE("interval images respect meets up to endpoints") {
    auto contains = [](const DyadicIntervalUnion& u, const Rational& x) {
        for (const auto& p : u.parts)
            if (p.lo <= x && (x < p.hi || (p.closed_right && x == p.hi))) return true;
        return false;
    };
    std::mt19937_64 rng(19);
    for (int t = 0; t < 150; ++t) {
        CylinderSet a = random_cylinder(rng, 6), b = random_cylinder(rng, 6);
        DyadicIntervalUnion ua = cantor_to_interval(a), ub = cantor_to_interval(b);
        DyadicIntervalUnion um = cantor_to_interval(cylinder_meet(a, b));
        for (const auto& p : um.parts) {
            Rational mid = (p.lo + p.hi) / 2; // interior point, clear of endpoint mending
            CHECK(contains(ua, mid));
            CHECK(contains(ub, mid));
        }
        // additivity over a disjoint split
        CylinderSet rest = cylinder_symdiff(a, cylinder_meet(a, b));
        CHECK(cantor_to_interval(cylinder_meet(a, b)).total_length() +
                  cantor_to_interval(rest).total_length() ==
              cantor_to_interval(a).total_length());
    }
}

TEST_CASE("exact-measure projections follow the binary expansion") {
    CHECK(find_projection_of_measure(Rational(0)) == cylinder_empty());
    CHECK(find_projection_of_measure(Rational(1)) == cylinder_full());
    CHECK(find_projection_of_measure(Rational(1, 2)) == cyl(1, {0}));
    CylinderSet p38 = find_projection_of_measure(Rational(3, 8));
    CHECK(p38.depth == 3);
    CHECK(p38.words == std::set<std::uint64_t>{0, 1, 2});
    CHECK(cylinder_measure(p38) == Rational(3, 8));

    CHECK_THROWS_AS((void)find_projection_of_measure(Rational(1, 3)), UnsupportedPrecisionError);
    CHECK_THROWS_AS((void)find_projection_of_measure(Rational(2)), UnsupportedPrecisionError);
    CHECK_THROWS_AS((void)find_projection_of_measure(Rational(-1, 2)), UnsupportedPrecisionError);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 200; ++t) {
        std::uint32_t n = rng() % 13;
        Rational target(Integer(rng() % ((std::uint64_t{1} << n) + 1)), Integer(1) << n);
        CylinderSet c = find_projection_of_measure(target);
        CHECK(cylinder_measure(c) == target);
        CHECK(cylinder_measure(cylinder_complement(c)) == 1 - target);
        // the projection is the preimage of [0, t)
        DyadicIntervalUnion u = cantor_to_interval(c);
        if (target == 0) {
            CHECK(u.parts.empty());
        } else {
            REQUIRE(u.parts.size() == 1);
            CHECK(u.parts[0].lo == 0);
            CHECK(u.parts[0].hi == target);
        }
        CHECK(find_projection_of_measure(target) == c); // deterministic
    }
}

TEST_CASE("truncated algebras are uniform with dyadic atom masses") {
    for (std::uint32_t n = 0; n <= 6; ++n) {
        MeasureAlgebra ma = truncated_algebra(n);
        CHECK(ma.algebra->atom_count() == (std::size_t{1} << n));
        for (const auto& m : ma.atom_mass)
            CHECK(m == ExtRational(Rational(Integer(1), Integer(1) << n)));
        CHECK(ma.total_mass() == ExtRational(1));
    }
    CHECK(truncated_algebra(0).algebra->atom_label(0) == "e");
    CHECK(truncated_algebra(2).algebra->atom_labels() ==
          std::vector<std::string>{"00", "01", "10", "11"});
    CHECK_THROWS_AS((void)truncated_algebra(21), BoundExceededError);
}

TEST_CASE("cylinders embed into the truncated algebra with matching mass") {
    MeasureAlgebra t3 = truncated_algebra(3);
    std::mt19937_64 rng(29);
    for (int t = 0; t < 100; ++t) {
        CylinderSet a = random_cylinder(rng, 3), b = random_cylinder(rng, 3);
        Element ea = cylinder_as_element(a, t3), eb = cylinder_as_element(b, t3);
        CHECK(t3.mass(ea) == ExtRational(cylinder_measure(a)));
        CHECK(cylinder_as_element(cylinder_meet(a, b), t3) == (ea & eb));
        CHECK(cylinder_as_element(cylinder_join(a, b), t3) == (ea | eb));
        CHECK(cylinder_as_element(cylinder_complement(a), t3) == ~ea);
    }
    CHECK(cylinder_as_element(cylinder_full(), t3) == t3.algebra->unit());
    MeasureAlgebra not_truncated(FiniteBooleanAlgebra::make(3),
                                 std::vector<ExtRational>(3, ExtRational(1)));
    CHECK_THROWS_AS((void)cylinder_as_element(cylinder_full(), not_truncated), Error);
    CHECK_THROWS_AS((void)cylinder_as_element(cyl(2, {3}), truncated_algebra(1)), Error);
}

TEST_CASE("tensor products multiply masses pairwise") {
    auto make_ma = [](std::vector<ExtRational> masses) {
        auto alg = FiniteBooleanAlgebra::make(masses.size());
        return MeasureAlgebra(alg, std::move(masses));
    };
    MeasureAlgebra u2 = truncated_algebra(1);
    MeasureAlgebra four = tensor(u2, u2);
    CHECK(four.algebra->atom_count() == 4);
    for (const auto& m : four.atom_mass) CHECK(m == ExtRational(Rational(1, 4)));

    MeasureAlgebra ab = tensor(make_ma({ExtRational(1), ExtRational(2)}), make_ma({ExtRational(3)}));
    CHECK(ab.atom_mass == std::vector<ExtRational>{ExtRational(3), ExtRational(6)});

    CHECK_THROWS_AS((void)tensor(make_ma({ExtRational::infinity()}), u2), NotSemifiniteError);

    // unit and associativity witnesses are measure-preserving isomorphisms
    MeasureAlgebra unit = make_ma({ExtRational(1)});
    MeasureAlgebra a = make_ma({ExtRational(1), ExtRational(Rational(1, 2))});
    MeasureAlgebra prod = tensor(a, unit);
    BooleanHom uw = tensor_unit_witness(a, unit, prod);
    CHECK(uw.is_isomorphism());
    CHECK(is_measure_preserving(uw, prod, a));

    MeasureAlgebra b = make_ma({ExtRational(2), ExtRational(3), ExtRational(Rational(1, 3))});
    MeasureAlgebra c = make_ma({ExtRational(Rational(5, 7)), ExtRational(1)});
    MeasureAlgebra lp = tensor(tensor(a, b), c), rp = tensor(a, tensor(b, c));
    BooleanHom aw = tensor_assoc_witness(a, b, c, lp, rp);
    CHECK(aw.is_isomorphism());
    CHECK(is_measure_preserving(aw, lp, rp));
}

TEST_CASE("depth-n truncation is the n-fold uniform tensor") {
    MeasureAlgebra u2 = truncated_algebra(1);
    MeasureAlgebra power = truncated_algebra(0);
    for (std::uint32_t n = 1; n <= 3; ++n) {
        power = tensor(power, u2);
        MeasureAlgebra tn = truncated_algebra(n);
        auto w = brute_force_iso(tn, power);
        REQUIRE(w.has_value());
        CHECK(is_measure_preserving(*w, tn, power));
    }
    for (std::uint32_t n = 4; n <= 10; ++n) {
        power = tensor(power, u2);
        CHECK(isomorphic(description_of(truncated_algebra(n)), description_of(power)));
    }
}

TEST_CASE("depth guards reject what cannot be materialized") {
    CHECK_THROWS_AS((void)make_cylinder(63, {0}), BoundExceededError);
    CHECK_THROWS_AS((void)refine(cylinder_full(), 40), BoundExceededError);
    CHECK_THROWS_AS((void)cylinder_complement(CylinderSet{40, {0}}), BoundExceededError);
}
