#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "rml/fincat.hpp"

using namespace rml;
using namespace rmltest;

namespace {

bool has_law(const LawReport& r, const std::string& law) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.law == law; });
}

}  // namespace

TEST_CASE("category validation accepts the standard fixtures") {
    CHECK(validate_category(*terminal_cat()).pass());
    CHECK(validate_category(*arrow_cat()).pass());
    CHECK(validate_category(*span_cat().cat).pass());
    CHECK(validate_category(*fat_span().cat).pass());
    CHECK(validate_category(*z2_cat()).pass());
    CHECK(validate_category(*chain_cat(5)).pass());
}

TEST_CASE("redirecting a unit composite is caught with a witness") {
    auto s = span_cat();
    FinCat broken = *s.cat;
    // compose(id_tri, p) should be p; redirect it to id_tri.
    broken.set_then(s.p, s.id_tri, s.id_tri);
    auto r = validate_category(broken);
    CHECK_FALSE(r.pass());
    CHECK(has_law(r, "left-unit"));
    bool witnessed = false;
    for (const auto& v : r.violations)
        witnessed = witnessed || v.witness.find("p") != std::string::npos;
    CHECK(witnessed);
}

TEST_CASE("associativity violations are caught") {
    // The one-object group Z/3: e, s, t with s;s = t.
    CatBuilder b;
    int m = b.add_object("m");
    int e = b.add_morphism("e", m, m);
    int s = b.add_morphism("s", m, m);
    int t = b.add_morphism("t", m, m);
    b.set_identity(m, e);
    b.finish_morphisms();
    int table[3][3] = {{e, s, t}, {s, t, e}, {t, e, s}};
    for (int f = 0; f < 3; ++f)
        for (int g = 0; g < 3; ++g) b.set_compose(f, g, table[f][g]);
    auto z3 = b.build();
    CHECK(validate_category(*z3).pass());

    FinCat broken = *z3;
    broken.set_then(s, s, e);  // (s;s);t = t but s;(s;t) = s
    auto r = validate_category(broken);
    CHECK_FALSE(r.pass());
    CHECK(has_law(r, "associativity"));
}

TEST_CASE("missing and dangling table entries are malformed, not law failures") {
    auto s = span_cat();
    FinCat broken = *s.cat;
    broken.set_then(s.id_loz, s.p, -1);
    auto r = validate_category(broken);
    CHECK(has_law(r, "compose-undefined"));

    FinCat dangling = *s.cat;
    dangling.set_then(s.id_loz, s.p, 99);
    CHECK(has_law(validate_category(dangling), "malformed:compose-index"));
}

TEST_CASE("caps are enforced with CapacityError") {
    Caps tight;
    tight.max_morphisms = 3;
    CHECK_THROWS_AS(validate_category(*span_cat().cat, tight), CapacityError);
}

TEST_CASE("functor validation") {
    auto one = terminal_cat();
    auto s = span_cat();
    auto j = point_functor(one, s.cat, s.loz);
    CHECK(validate_functor(j).pass());
    CHECK(validate_functor(identity_functor(s.cat)).pass());

    Functor bad = j;
    bad.mor = {s.p};  // sends id_* to a non-identity
    auto r = validate_functor(bad);
    CHECK_FALSE(r.pass());
    CHECK(has_law(r, "identity-preservation"));

    Functor skew = identity_functor(s.cat);
    skew.mor[s.p] = s.q;  // p : loz -> tri mapped to q : loz -> flip
    CHECK(has_law(validate_functor(skew), "source-target-preservation"));
}

TEST_CASE("presheaf validation") {
    auto two = arrow_cat();
    Presheaf pre;
    pre.base = two;
    pre.value = {{"u", "v"}, {"w"}};
    pre.action.resize(3);
    pre.action[0] = {0, 1};  // id_0
    pre.action[1] = {0};     // id_1
    pre.action[2] = {1};     // a restricts w to v
    CHECK(validate_presheaf(pre).pass());

    Presheaf broken = pre;
    broken.action[0] = {1, 0};
    CHECK(has_law(validate_presheaf(broken), "presheaf-identity"));
}

TEST_CASE("functor enumeration is exhaustive and ordered") {
    auto one = terminal_cat();
    auto s = span_cat();
    auto fs = enumerate_functors(one, s.cat);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].ob == std::vector<int>{0});
    CHECK(fs[2].ob == std::vector<int>{2});
    for (const auto& f : fs) CHECK(validate_functor(f).pass());

    auto two = arrow_cat();
    // Monotone maps 2 -> 2: 0|->0,1|->0; 0|->0,1|->1; 0|->1,1|->1.
    CHECK(enumerate_functors(two, two).size() == 3);
    CHECK(enumerate_functors(two, s.cat).size() == 5);

    CHECK_THROWS_AS(enumerate_functors(two, chain_cat(4), 2), CapacityError);
}

TEST_CASE("natural transformation enumeration matches the brute-force oracle") {
    auto two = arrow_cat();
    auto s = span_cat();
    auto z = z2_cat();

    std::vector<std::pair<CatPtr, CatPtr>> shapes = {
        {two, two}, {two, s.cat}, {z, z}, {terminal_cat(), fat_span().cat}};
    for (auto& [src, dst] : shapes) {
        auto fs = enumerate_functors(src, dst);
        for (const auto& f : fs)
            for (const auto& g : fs) {
                auto got = enumerate_nat_transformations(f, g);
                auto want = nat_oracle(f, g);
                REQUIRE(got.size() == want.size());
                for (size_t i = 0; i < got.size(); ++i)
                    CHECK(got[i].components == want[i]);
            }
    }
}

TEST_CASE("constant parallel functors into the arrow have one transformation") {
    auto two = arrow_cat();
    Functor c0, c1;
    c0.src = c1.src = two;
    c0.dst = c1.dst = two;
    c0.ob = {0, 0};
    c0.mor = {0, 0, 0};
    c1.ob = {1, 1};
    c1.mor = {1, 1, 1};
    CHECK(enumerate_nat_transformations(c0, c1).size() == 1);
    CHECK(enumerate_nat_transformations(c1, c0).empty());
}

TEST_CASE("opposite is a strict involution") {
    for (const CatPtr& c : {terminal_cat(), arrow_cat(), span_cat().cat,
                            fat_span().cat, z2_cat(), chain_cat(4)}) {
        auto op = opposite_cat(c);
        CHECK(validate_category(*op).pass());
        CHECK(*opposite_cat(op) == *c);
    }
    auto s = span_cat();
    auto cospan = opposite_cat(s.cat);
    CHECK(cospan->hom(s.tri, s.loz).size() == 1);
    CHECK(cospan->hom(s.loz, s.tri).empty());
}

TEST_CASE("opposite functor flips variance coherently") {
    auto s = span_cat();
    auto one = terminal_cat();
    auto j = point_functor(one, s.cat, s.loz);
    auto one_op = opposite_cat(one);
    auto s_op = opposite_cat(s.cat);
    auto jop = opposite_functor(j, one_op, s_op);
    CHECK(validate_functor(jop).pass());
    auto back = opposite_functor(jop, one, s.cat);
    CHECK(back.same_maps(j));
}

TEST_CASE("pullback of identities recovers the category") {
    auto s = span_cat();
    auto idf = identity_functor(s.cat);
    auto pb = pullback_category(idf, idf);
    CHECK(validate_category(*pb.apex).pass());
    CHECK(pb.apex->n_ob() == s.cat->n_ob());
    auto med = pullback_mediate(pb, idf, idf);
    CHECK(validate_functor(med).pass());
    CHECK(is_strict_isomorphism(med));
    CHECK(functors_equal(compose_functors(med, pb.proj1), idf));
    CHECK(functors_equal(compose_functors(med, pb.proj2), idf));
}

TEST_CASE("pullback of disjoint points is empty") {
    auto one = terminal_cat();
    auto two = arrow_cat();
    auto f = point_functor(one, two, 0);
    auto g = point_functor(one, two, 1);
    auto pb = pullback_category(f, g);
    CHECK(pb.apex->n_ob() == 0);
    CHECK(pb.apex->n_mor() == 0);
    CHECK(validate_category(*pb.apex).pass());
}

TEST_CASE("pullback rejects mismatched codomains") {
    auto one = terminal_cat();
    auto f = point_functor(one, arrow_cat(), 0);
    auto g = point_functor(one, span_cat().cat, 0);
    CHECK_THROWS_AS(pullback_category(f, g), InputError);
}

TEST_CASE("fully faithful and isomorphism recognition") {
    auto s = span_cat();
    auto one = terminal_cat();
    CHECK(is_fully_faithful(identity_functor(s.cat)).ok);
    CHECK(is_fully_faithful(point_functor(one, s.cat, s.loz)).ok);

    Functor collapse;  // the unique functor span -> 1 is not full
    collapse.src = s.cat;
    collapse.dst = one;
    collapse.ob = {0, 0, 0};
    collapse.mor = {0, 0, 0, 0, 0};
    auto rep = is_fully_faithful(collapse);
    CHECK_FALSE(rep.ok);
    CHECK_FALSE(rep.witness.empty());

    CHECK(is_strict_isomorphism(identity_functor(s.cat)));
    CHECK_FALSE(is_strict_isomorphism(point_functor(one, s.cat, s.loz)));
}
