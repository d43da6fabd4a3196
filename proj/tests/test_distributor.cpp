#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "rml/distributor.hpp"

using namespace rml;
using namespace rmltest;

namespace {

bool has_law(const LawReport& r, const std::string& law) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const Violation& v) { return v.law == law; });
}

// A two-element right Z/2-set with a broken action: ract(a, s) = b and
// ract(b, s) = b, so ract(a, s;s) != ract(ract(a, s), s).
Distributor broken_z2_action() {
    Distributor d;
    d.left = terminal_cat();
    d.right = z2_cat();
    d.elems = {{"a", 0, 0}, {"b", 0, 0}};
    d.het = {{{0, 1}}};
    d.lact_table = {0, 1};              // identity left action
    d.ract_table = {0, 1, 1, 1};        // ract(a,e)=a, ract(a,s)=b, ract(b,*)=b
    return d;
}

}  // namespace

TEST_CASE("hom-distributors validate") {
    for (const CatPtr& c : {terminal_cat(), arrow_cat(), span_cat().cat,
                            fat_span().cat, z2_cat()}) {
        auto h = hom_distributor(c);
        CHECK(validate_distributor(h).pass());
        CHECK(h.n_elems() == c->n_mor());
    }
}

TEST_CASE("a non-associative right action is rejected with a witness") {
    auto d = broken_z2_action();
    auto r = validate_distributor(d);
    CHECK_FALSE(r.pass());
    CHECK(has_law(r, "right-action-associativity"));
    CHECK_FALSE(r.violations.front().witness.empty());
}

TEST_CASE("het caps raise CapacityError") {
    Caps tight;
    tight.max_het = 1;
    CHECK_THROWS_AS(validate_distributor(broken_z2_action(), tight),
                    CapacityError);
}

TEST_CASE("conjoints validate and record parents") {
    auto one = terminal_cat();
    auto s = span_cat();
    auto j = point_functor(one, s.cat, s.loz);
    auto cj = conjoint(j);
    CHECK(validate_distributor(cj).pass());
    CHECK(cj.n_elems() == 3);  // E(loz, -) = {id_loz, p, q}
    REQUIRE(cj.parent.size() == 3);
    // Elements are the underlying E-morphisms out of loz.
    std::vector<int> parents = cj.parent;
    std::sort(parents.begin(), parents.end());
    CHECK(parents == std::vector<int>{s.id_loz, s.p, s.q});
}

TEST_CASE("restriction is strictly functorial") {
    auto fs = fat_span();
    auto one = terminal_cat();
    auto h = hom_distributor(fs.cat);
    auto id_e = identity_functor(fs.cat);

    SUBCASE("restricting along identities is the identity, bit-exactly") {
        auto r = restrict_distributor(h, id_e, id_e);
        CHECK(r.same_tables(h));
        CHECK(r.parent == h.parent);
    }

    SUBCASE("iterated restriction equals restriction along the composite") {
        auto j = point_functor(one, fs.cat, fs.loz);
        auto once = restrict_distributor(restrict_distributor(h, id_e, id_e), j, j);
        auto direct = restrict_distributor(
            h, compose_functors(j, id_e), compose_functors(j, id_e));
        CHECK(once.same_tables(direct));
        CHECK(once.parent == direct.parent);

        auto cj = conjoint(j);  // = restrict(h, j, 1)
        auto again = restrict_distributor(cj, identity_functor(one), j);
        auto flat = restrict_distributor(h, j, j);
        CHECK(again.same_tables(flat));
        CHECK(again.parent == flat.parent);
    }
}

TEST_CASE("left-module morphisms and density") {
    auto one = terminal_cat();
    auto s = span_cat();

    SUBCASE("the identity root is dense (Yoneda)") {
        auto cj = conjoint(identity_functor(s.cat));
        CHECK(distributor_dense(cj).ok);
        CHECK(distributor_dense(conjoint(identity_functor(z2_cat()))).ok);
    }

    SUBCASE("the span point at loz is not dense") {
        auto j = point_functor(one, s.cat, s.loz);
        auto cj = conjoint(j);
        auto rep = distributor_dense(cj);
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.witness.empty());
        // Concretely: span(tri, flip) is empty but there is a module map
        // E(loz, tri) -> E(loz, flip).
        auto mods = left_module_morphisms(cj, s.tri, s.flip);
        CHECK(mods.size() == 1);
        CHECK(s.cat->hom(s.tri, s.flip).empty());
    }
}

TEST_CASE("chain tuples enumerate composable paths") {
    auto s = span_cat();
    auto h = hom_distributor(s.cat);
    auto tuples1 = chain_tuples({&h});
    CHECK(tuples1.size() == static_cast<size_t>(s.cat->n_mor()));
    auto tuples2 = chain_tuples({&h, &h});
    // Composable pairs of span morphisms = entries of the compose table.
    size_t defined = 0;
    for (int f = 0; f < s.cat->n_mor(); ++f)
        for (int g = 0; g < s.cat->n_mor(); ++g)
            if (s.cat->then(f, g) >= 0) ++defined;
    CHECK(tuples2.size() == defined);
}

TEST_CASE("unary 2-cells hom => restrict(hom, f, g) match natural transformations") {
    auto z = z2_cat();
    auto two = arrow_cat();
    for (const CatPtr& c : {z, two, span_cat().cat}) {
        auto h = hom_distributor(c);
        auto fs = enumerate_functors(c, c);
        for (const auto& f : fs)
            for (const auto& g : fs) {
                auto target = restrict_distributor(h, f, g);
                auto cells = enumerate_two_cells({&h}, target);
                for (const auto& cell : cells) CHECK(validate_two_cell(cell).pass());
                CHECK(cells.size() == enumerate_nat_transformations(f, g).size());
            }
    }
}

TEST_CASE("nullary 2-cells are central families") {
    auto z = z2_cat();
    auto hz = hom_distributor(z);
    // Z/2 is abelian: both elements are central.
    CHECK(enumerate_two_cells({}, hz).size() == 2);

    auto s = span_cat();
    auto hs = hom_distributor(s.cat);
    // Only the identity family commutes with p and q.
    auto cells = enumerate_two_cells({}, hs);
    REQUIRE(cells.size() == 1);
    CHECK(validate_two_cell(cells.front()).pass());
}

TEST_CASE("binary 2-cells satisfy the balance law over non-endo linkers") {
    auto s = span_cat();
    auto h = hom_distributor(s.cat);
    // Cells (m1, m2) |-> phi(m1;m2) for central phi; the span has one.
    auto cells = enumerate_two_cells({&h, &h}, h);
    REQUIRE(cells.size() == 1);
    const auto& cell = cells.front();
    CHECK(validate_two_cell(cell).pass());
    // Balance with the non-endomorphism linker p: the tuple (id_loz, id_tri)
    // linked by p must agree whether p is absorbed left or right.
    auto elem_of = [&](int mor) {
        for (int m = 0; m < h.n_elems(); ++m)
            if (h.parent[m] == mor) return m;
        return -1;
    };
    CHECK(cell.table.at({elem_of(s.id_loz), elem_of(s.p)}) ==
          cell.table.at({elem_of(s.p), elem_of(s.id_tri)}));

    auto z = z2_cat();
    auto hz = hom_distributor(z);
    CHECK(enumerate_two_cells({&hz, &hz}, hz).size() == 2);
}

TEST_CASE("tampered 2-cells fail validation") {
    auto z = z2_cat();
    auto hz = hom_distributor(z);
    auto cells = enumerate_two_cells({&hz}, hz);
    REQUIRE(cells.size() == 2);
    auto cell = cells.front();
    cell.table[{0}] = 1 - cell.table[{0}];
    CHECK_FALSE(validate_two_cell(cell).pass());
}

TEST_CASE("pullback of identities has the 2-dimensional universal property") {
    auto s = span_cat();
    auto idf = identity_functor(s.cat);
    auto pb = pullback_category(idf, idf);
    auto h = hom_distributor(s.cat);
    std::vector<std::pair<Functor, Functor>> cones = {{idf, idf}};
    std::vector<std::vector<const Distributor*>> chains = {{}, {&h}};
    auto rep = pullback_two_cell_property(pb, idf, idf, cones, chains);
    CHECK(rep.ok);
}
