#ifndef RML_TEST_HELPERS_HPP
#define RML_TEST_HELPERS_HPP

#include <vector>

#include "rml/fincat.hpp"
#include "rml/relmonad.hpp"

namespace rmltest {

using namespace rml;

// The terminal category: one object, one identity.
inline CatPtr terminal_cat() {
    CatBuilder b;
    int s = b.add_object("*");
    int i = b.add_morphism("id_*", s, s);
    b.set_identity(s, i);
    b.finish_morphisms();
    b.set_compose(i, i, i);
    return b.build();
}

// The walking arrow: 0 -> 1. Morphism ids: id_0 = 0, id_1 = 1, a = 2.
inline CatPtr arrow_cat() {
    CatBuilder b;
    int o0 = b.add_object("0");
    int o1 = b.add_object("1");
    int i0 = b.add_morphism("id_0", o0, o0);
    int i1 = b.add_morphism("id_1", o1, o1);
    int a = b.add_morphism("a", o0, o1);
    b.set_identity(o0, i0);
    b.set_identity(o1, i1);
    b.finish_morphisms();
    b.set_compose(i0, i0, i0);
    b.set_compose(i1, i1, i1);
    b.set_compose(i0, a, a);
    b.set_compose(a, i1, a);
    return b.build();
}

// The chain poset 0 <= 1 <= ... <= n-1 as a thin category.
inline CatPtr chain_cat(int n) {
    CatBuilder b;
    for (int k = 0; k < n; ++k) b.add_object(std::to_string(k));
    std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
    for (int a = 0; a < n; ++a)
        for (int c = a; c < n; ++c)
            m[a][c] = b.add_morphism(std::to_string(a) + "<=" + std::to_string(c), a, c);
    for (int a = 0; a < n; ++a) b.set_identity(a, m[a][a]);
    b.finish_morphisms();
    for (int a = 0; a < n; ++a)
        for (int c = a; c < n; ++c)
            for (int e = c; e < n; ++e) b.set_compose(m[a][c], m[c][e], m[a][e]);
    return b.build();
}

// The walking span: tri <- loz -> flip.
struct SpanCat {
    CatPtr cat;
    int loz = 0, tri = 1, flip = 2;
    int id_loz = 0, id_tri = 1, id_flip = 2, p = 3, q = 4;
};

inline SpanCat span_cat() {
    CatBuilder b;
    SpanCat s;
    s.loz = b.add_object("loz");
    s.tri = b.add_object("tri");
    s.flip = b.add_object("flip");
    s.id_loz = b.add_morphism("id_loz", s.loz, s.loz);
    s.id_tri = b.add_morphism("id_tri", s.tri, s.tri);
    s.id_flip = b.add_morphism("id_flip", s.flip, s.flip);
    s.p = b.add_morphism("p", s.loz, s.tri);
    s.q = b.add_morphism("q", s.loz, s.flip);
    b.set_identity(s.loz, s.id_loz);
    b.set_identity(s.tri, s.id_tri);
    b.set_identity(s.flip, s.id_flip);
    b.finish_morphisms();
    b.set_compose(s.id_loz, s.id_loz, s.id_loz);
    b.set_compose(s.id_tri, s.id_tri, s.id_tri);
    b.set_compose(s.id_flip, s.id_flip, s.id_flip);
    b.set_compose(s.id_loz, s.p, s.p);
    b.set_compose(s.p, s.id_tri, s.p);
    b.set_compose(s.id_loz, s.q, s.q);
    b.set_compose(s.q, s.id_flip, s.q);
    s.cat = b.build();
    return s;
}

// The span with the leg at flip fattened by an involution s, which swaps
// the two parallel legs q and q2.
struct FatSpan {
    CatPtr cat;
    int loz = 0, tri = 1, flip = 2;
    int id_loz = 0, id_tri = 1, id_flip = 2, p = 3, q = 4, q2 = 5, s = 6;
};

inline FatSpan fat_span() {
    CatBuilder b;
    FatSpan f;
    f.loz = b.add_object("loz");
    f.tri = b.add_object("tri");
    f.flip = b.add_object("flip");
    f.id_loz = b.add_morphism("id_loz", f.loz, f.loz);
    f.id_tri = b.add_morphism("id_tri", f.tri, f.tri);
    f.id_flip = b.add_morphism("id_flip", f.flip, f.flip);
    f.p = b.add_morphism("p", f.loz, f.tri);
    f.q = b.add_morphism("q", f.loz, f.flip);
    f.q2 = b.add_morphism("q2", f.loz, f.flip);
    f.s = b.add_morphism("s", f.flip, f.flip);
    b.set_identity(f.loz, f.id_loz);
    b.set_identity(f.tri, f.id_tri);
    b.set_identity(f.flip, f.id_flip);
    b.finish_morphisms();
    b.set_compose(f.id_loz, f.id_loz, f.id_loz);
    b.set_compose(f.id_tri, f.id_tri, f.id_tri);
    b.set_compose(f.id_flip, f.id_flip, f.id_flip);
    b.set_compose(f.id_loz, f.p, f.p);
    b.set_compose(f.p, f.id_tri, f.p);
    b.set_compose(f.id_loz, f.q, f.q);
    b.set_compose(f.q, f.id_flip, f.q);
    b.set_compose(f.id_loz, f.q2, f.q2);
    b.set_compose(f.q2, f.id_flip, f.q2);
    b.set_compose(f.id_flip, f.s, f.s);
    b.set_compose(f.s, f.id_flip, f.s);
    b.set_compose(f.s, f.s, f.id_flip);
    b.set_compose(f.q, f.s, f.q2);
    b.set_compose(f.q2, f.s, f.q);
    f.cat = b.build();
    return f;
}

// The one-object group Z/2: morphisms e = 0 (identity), s = 1 with s;s = e.
inline CatPtr z2_cat() {
    CatBuilder b;
    int m = b.add_object("m");
    int e = b.add_morphism("e", m, m);
    int s = b.add_morphism("s", m, m);
    b.set_identity(m, e);
    b.finish_morphisms();
    b.set_compose(e, e, e);
    b.set_compose(e, s, s);
    b.set_compose(s, e, s);
    b.set_compose(s, s, e);
    return b.build();
}

// A functor from the terminal category picking out one object.
inline Functor point_functor(const CatPtr& one, const CatPtr& dst, int obj) {
    Functor f;
    f.src = one;
    f.dst = dst;
    f.ob = {obj};
    f.mor = {dst->identity[obj]};
    return f;
}

// The constant j-relative monad on the span: j picks out loz,
// t(*) = flip, eta = q, q-dagger = id_flip.
inline RelativeMonad span_constant_monad(const SpanCat& s, const CatPtr& one) {
    RelativeMonad T;
    T.j = point_functor(one, s.cat, s.loz);
    T.t_ob = {s.flip};
    T.eta = {s.q};
    T.dagger[{0, 0, s.q}] = s.id_flip;
    return T;
}

// The analogous monad on the fattened span: q-dagger = id_flip is forced by
// the unit law, and q2-dagger = s.
inline RelativeMonad fat_span_monad(const FatSpan& f, const CatPtr& one) {
    RelativeMonad T;
    T.j = point_functor(one, f.cat, f.loz);
    T.t_ob = {f.flip};
    T.eta = {f.q};
    T.dagger[{0, 0, f.q}] = f.id_flip;
    T.dagger[{0, 0, f.q2}] = f.s;
    return T;
}

// A plain (identity-root) monad on the walking arrow: t = const 1,
// eta_0 = a, eta_1 = id_1, every extension id_1.
inline RelativeMonad arrow_const_monad(const CatPtr& two) {
    RelativeMonad T;
    T.j = identity_functor(two);
    T.t_ob = {1, 1};
    T.eta = {2, 1};  // a, id_1
    T.dagger[{0, 0, 2}] = 1;
    T.dagger[{0, 1, 2}] = 1;
    T.dagger[{1, 0, 1}] = 1;
    T.dagger[{1, 1, 1}] = 1;
    return T;
}

// Brute-force oracle for natural transformations f => g: try every family
// of components and keep the natural ones. Independent of the library's
// backtracking enumerator.
inline std::vector<std::vector<int>> nat_oracle(const Functor& f, const Functor& g) {
    const FinCat& a = *f.src;
    const FinCat& e = *f.dst;
    std::vector<std::vector<int>> cands(a.n_ob());
    for (int x = 0; x < a.n_ob(); ++x) cands[x] = e.hom(f.ob[x], g.ob[x]);
    std::vector<std::vector<int>> out;
    for (auto& c : cands)
        if (c.empty()) return out;
    std::vector<int> pick(a.n_ob(), 0);
    while (true) {
        std::vector<int> comp(a.n_ob());
        for (int x = 0; x < a.n_ob(); ++x) comp[x] = cands[x][pick[x]];
        bool natural = true;
        for (int u = 0; u < a.n_mor() && natural; ++u) {
            int x = a.morphisms[u].src, y = a.morphisms[u].tgt;
            natural = e.then(f.mor[u], comp[y]) == e.then(comp[x], g.mor[u]);
        }
        if (natural) out.push_back(comp);
        int k = a.n_ob() - 1;
        while (k >= 0 && pick[k] + 1 == static_cast<int>(cands[k].size())) pick[k--] = 0;
        if (k < 0) break;
        ++pick[k];
    }
    return out;
}

}  // namespace rmltest

#endif
