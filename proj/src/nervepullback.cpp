#include "rml/nervepullback.hpp"

#include <algorithm>
#include <functional>

namespace rml {

Presheaf nerve_presheaf(const Functor& j, int e) {
    const FinCat& a = *j.src;
    const FinCat& ec = *j.dst;
    Presheaf p;
    p.base = j.src;
    p.value.resize(a.n_ob());
    std::vector<std::vector<int>> mor_ids(a.n_ob());  // underlying E morphisms
    for (int x = 0; x < a.n_ob(); ++x)
        for (int f : ec.hom(j.ob[x], e)) {
            p.value[x].push_back(ec.morphisms[f].name);
            mor_ids[x].push_back(f);
        }
    p.action.resize(a.n_mor());
    for (int u = 0; u < a.n_mor(); ++u) {
        int x = a.morphisms[u].src, y = a.morphisms[u].tgt;
        for (int g : mor_ids[y]) {
            int img = ec.then(j.mor[u], g);
            int pos = -1;
            for (size_t i = 0; i < mor_ids[x].size(); ++i)
                if (mor_ids[x][i] == img) pos = static_cast<int>(i);
            p.action[u].push_back(pos);
        }
    }
    return p;
}

std::vector<std::vector<std::vector<int>>> presheaf_morphisms(const Presheaf& p,
                                                              const Presheaf& q) {
    const FinCat& a = *p.base;
    std::vector<std::vector<std::vector<int>>> out;
    // component[a][i] = image index in q.value[a] of element i of p.value[a]
    std::vector<std::vector<int>> comp(a.n_ob());
    for (int x = 0; x < a.n_ob(); ++x) comp[x].assign(p.size(x), -1);

    std::function<void(int, int)> go = [&](int x, int i) {
        if (x == a.n_ob()) {
            out.push_back(comp);
            return;
        }
        if (i == p.size(x)) {
            go(x + 1, 0);
            return;
        }
        for (int cand = 0; cand < q.size(x); ++cand) {
            comp[x][i] = cand;
            bool ok = true;
            // check every naturality square whose entries are all assigned
            for (int u = 0; u < a.n_mor() && ok; ++u) {
                int src = a.morphisms[u].src, tgt = a.morphisms[u].tgt;
                for (int k = 0; k < p.size(tgt) && ok; ++k) {
                    if (comp[tgt][k] < 0) continue;
                    int down = p.action[u][k];  // element of p.value[src]
                    if (comp[src][down] < 0) continue;
                    ok = comp[src][down] == q.action[u][comp[tgt][k]];
                }
            }
            if (ok) go(x, i + 1);
        }
        comp[x][i] = -1;
    };
    go(0, 0);
    return out;
}

DenseReport is_dense(const Functor& j) {
    const FinCat& ec = *j.dst;
    DenseReport rep;
    std::vector<Presheaf> nerves;
    for (int e = 0; e < ec.n_ob(); ++e) nerves.push_back(nerve_presheaf(j, e));
    for (int e = 0; e < ec.n_ob(); ++e)
        for (int e2 = 0; e2 < ec.n_ob(); ++e2) {
            auto nats = presheaf_morphisms(nerves[e], nerves[e2]);
            auto homs = ec.hom(e, e2);
            // canonical map w |-> (f |-> f ; w); check it is a bijection
            std::vector<std::vector<std::vector<int>>> canon;
            for (int w : homs) {
                std::vector<std::vector<int>> comp(j.src->n_ob());
                bool valid = true;
                for (int x = 0; x < j.src->n_ob(); ++x) {
                    auto dom = ec.hom(j.ob[x], e);
                    auto cod = ec.hom(j.ob[x], e2);
                    for (int f : dom) {
                        int img = ec.then(f, w);
                        int pos = -1;
                        for (size_t i = 0; i < cod.size(); ++i)
                            if (cod[i] == img) pos = static_cast<int>(i);
                        if (pos < 0) valid = false;
                        comp[x].push_back(pos);
                    }
                }
                if (valid) canon.push_back(comp);
            }
            std::sort(canon.begin(), canon.end());
            bool injective = std::adjacent_find(canon.begin(), canon.end()) ==
                             canon.end();
            std::sort(nats.begin(), nats.end());
            if (!injective || canon != nats) {
                rep.ok = false;
                rep.witness = "(" + ec.objects[e] + ", " + ec.objects[e2] +
                              "): hom count " + std::to_string(homs.size()) +
                              " vs nat count " + std::to_string(nats.size());
                return rep;
            }
        }
    return rep;
}

namespace {

// All pullback objects with the given carrier, in lexicographic order of
// their free action slots.
std::vector<PullbackObject> enumerate_pullback_objects(const RelativeMonad& T,
                                                       const KleisliResult& kl,
                                                       int carrier) {
    const FinCat& a = T.A();
    const FinCat& ec = T.E();
    const FinCat& klc = *kl.kl;

    std::vector<std::vector<int>> fiber(a.n_ob());  // E(j x, carrier)
    for (int x = 0; x < a.n_ob(); ++x) fiber[x] = ec.hom(T.j.ob[x], carrier);

    PullbackObject base;
    base.carrier = carrier;
    // forced part: the action of k_T-images is precomposition
    for (int u = 0; u < a.n_mor(); ++u) {
        int m = kl.k.mor[u];
        for (int g : fiber[a.morphisms[u].tgt])
            base.act[{m, g}] = ec.then(T.j.mor[u], g);
    }
    // consistency of the forced part itself (different u may share m)
    for (int u = 0; u < a.n_mor(); ++u) {
        int m = kl.k.mor[u];
        for (int g : fiber[a.morphisms[u].tgt])
            if (base.act.at({m, g}) != ec.then(T.j.mor[u], g)) return {};
    }

    // remaining slots in (morphism, fiber element) order
    std::vector<std::pair<int, int>> slots;
    for (int m = 0; m < klc.n_mor(); ++m)
        for (int g : fiber[klc.morphisms[m].tgt])
            if (!base.act.count({m, g})) slots.push_back({m, g});

    auto check_partial = [&](const PullbackObject& o) {
        for (int m1 = 0; m1 < klc.n_mor(); ++m1) {
            int mid = klc.morphisms[m1].tgt;
            for (int m2 = 0; m2 < klc.n_mor(); ++m2) {
                if (klc.morphisms[m2].src != mid) continue;
                int m12 = klc.then(m1, m2);
                for (int g : fiber[klc.morphisms[m2].tgt]) {
                    auto it2 = o.act.find({m2, g});
                    if (it2 == o.act.end()) continue;
                    auto it12 = o.act.find({m12, g});
                    auto it1 = o.act.find({m1, it2->second});
                    if (it12 == o.act.end() || it1 == o.act.end()) continue;
                    if (it12->second != it1->second) return false;
                }
            }
        }
        return true;
    };

    std::vector<PullbackObject> out;
    PullbackObject cur = base;
    std::function<void(size_t)> go = [&](size_t k) {
        if (!check_partial(cur)) return;
        if (k == slots.size()) {
            out.push_back(cur);
            return;
        }
        auto [m, g] = slots[k];
        for (int cand : fiber[klc.morphisms[m].src]) {
            cur.act[{m, g}] = cand;
            go(k + 1);
            cur.act.erase({m, g});
        }
    };
    go(0);
    return out;
}

}  // namespace

NervePullbackResult build_nerve_pullback(const RelativeMonad& T,
                                         const KleisliResult& kl,
                                         const Caps& caps) {
    const FinCat& ec = T.E();
    NervePullbackResult out;
    for (int e = 0; e < ec.n_ob(); ++e) {
        auto objs = enumerate_pullback_objects(T, kl, e);
        for (auto& o : objs) {
            out.objects.push_back(std::move(o));
            if (static_cast<int>(out.objects.size()) > caps.max_objects)
                throw CapacityError("pullback object enumeration exceeds object cap");
        }
    }
    int n = static_cast<int>(out.objects.size());
    CatBuilder b;
    for (int i = 0; i < n; ++i)
        b.add_object("p" + std::to_string(i) + "@" +
                     ec.objects[out.objects[i].carrier]);
    std::vector<std::map<int, int>> id_of(static_cast<size_t>(n) * n);
    const FinCat& klc = *kl.kl;
    for (int i = 0; i < n; ++i)
        for (int j2 = 0; j2 < n; ++j2) {
            const auto& s = out.objects[i];
            const auto& t = out.objects[j2];
            for (int psi : ec.hom(s.carrier, t.carrier)) {
                bool ok = true;
                for (const auto& [key, val] : s.act) {
                    auto [m, g] = key;
                    int moved = ec.then(g, psi);
                    if (ec.then(val, psi) != t.apply(m, moved)) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                int id = b.add_morphism(ec.morphisms[psi].name, i, j2);
                id_of[static_cast<size_t>(i) * n + j2][psi] = id;
                out.mor_parent.push_back(psi);
            }
        }
    for (int i = 0; i < n; ++i)
        b.set_identity(i, id_of[static_cast<size_t>(i) * n + i]
                              .at(ec.identity[out.objects[i].carrier]));
    b.finish_morphisms();
    for (int m1 = 0; m1 < static_cast<int>(out.mor_parent.size()); ++m1)
        for (int m2 = 0; m2 < static_cast<int>(out.mor_parent.size()); ++m2) {
            int i = b.cat.morphisms[m1].src, mid = b.cat.morphisms[m1].tgt;
            if (b.cat.morphisms[m2].src != mid) continue;
            int j2 = b.cat.morphisms[m2].tgt;
            int comp = ec.then(out.mor_parent[m1], out.mor_parent[m2]);
            b.set_compose(m1, m2, id_of[static_cast<size_t>(i) * n + j2].at(comp));
        }
    out.p = b.build();

    out.leg_e.src = out.p;
    out.leg_e.dst = T.j.dst;
    out.leg_e.ob.resize(n);
    for (int i = 0; i < n; ++i) out.leg_e.ob[i] = out.objects[i].carrier;
    out.leg_e.mor = out.mor_parent;

    out.report.merge(validate_category(*out.p, caps));
    out.report.merge(validate_functor(out.leg_e));
    return out;
}

Functor comparison_to_pullback(const RelativeMonad& T, const KleisliResult& kl,
                               const EMResult& em, const NervePullbackResult& np) {
    const FinCat& ec = T.E();
    Functor cmp;
    cmp.src = em.alg_cat;
    cmp.dst = np.p;
    cmp.ob.resize(em.alg_cat->n_ob());
    for (size_t bi = 0; bi < em.algebras.size(); ++bi) {
        const Algebra& alg = em.algebras[bi];
        PullbackObject o;
        o.carrier = alg.carrier;
        for (int m = 0; m < kl.kl->n_mor(); ++m) {
            auto [x, y, f] = kl.mor_data[m];
            for (int g : ec.hom(T.j.ob[y], alg.carrier))
                o.act[{m, g}] = ec.then(f, alg.ext(y, g));
        }
        int idx = -1;
        for (size_t i = 0; i < np.objects.size(); ++i)
            if (np.objects[i] == o) idx = static_cast<int>(i);
        if (idx < 0)
            throw InputError("comparison image is not a pullback object");
        cmp.ob[bi] = idx;
    }
    cmp.mor.resize(em.alg_cat->n_mor());
    for (int m = 0; m < em.alg_cat->n_mor(); ++m) {
        int i = cmp.ob[em.alg_cat->morphisms[m].src];
        int j2 = cmp.ob[em.alg_cat->morphisms[m].tgt];
        int id = -1;
        for (int cand : np.p->hom(i, j2))
            if (np.mor_parent[cand] == em.mor_parent[m]) id = cand;
        if (id < 0) throw InputError("comparison image morphism missing");
        cmp.mor[m] = id;
    }
    return cmp;
}

NerveTheoremReport check_nerve_theorem(const RelativeMonad& T, const Caps& caps) {
    NerveTheoremReport rep;
    const FinCat& ec = T.E();
    rep.consistency.merge(check_relative_monad(T).laws);
    if (!rep.consistency.pass()) return rep;
    auto kl = build_kleisli(T);
    auto em = enumerate_algebras(T, caps);
    auto np = build_nerve_pullback(T, kl, caps);
    auto cmpf = comparison_functor(T, kl, em);
    auto cmp = comparison_to_pullback(T, kl, em, np);

    rep.consistency.merge(kl.resolution.certificate);
    rep.consistency.merge(em.resolution.certificate);
    rep.consistency.merge(np.report);
    rep.consistency.merge(validate_functor(cmp));
    rep.consistency.merge(cmpf.report);

    auto dense = is_dense(T.j);
    rep.dense = dense.ok;
    rep.dense_witness = dense.witness;
    rep.comparison_iso = is_strict_isomorphism(cmp);
    if (rep.dense && !rep.comparison_iso)
        rep.consistency.fail("nerve-theorem", "dense root but comparison not iso");

    // the pullback image of each algebra is naturally isomorphic to the
    // nerve of the comparison functor, via f |-> f-alpha
    rep.nerve_of_comparison_ok = true;
    const FinCat& alg = *em.alg_cat;
    for (size_t bi = 0; bi < em.algebras.size(); ++bi) {
        const Algebra& b = em.algebras[bi];
        // phi_x : E(j x, e) -> Alg(i_T x, b), f |-> the morphism over f-alpha
        std::vector<std::vector<int>> phi(kl.kl->n_ob());
        bool ok = true;
        for (int x = 0; x < kl.kl->n_ob() && ok; ++x) {
            auto dom = ec.hom(T.j.ob[x], b.carrier);
            auto cod = alg.hom(cmpf.i.ob[x], static_cast<int>(bi));
            for (int f : dom) {
                int fa = b.ext(x, f);
                int id = -1;
                for (int cand : cod)
                    if (em.mor_parent[cand] == fa) id = cand;
                if (id < 0) ok = false;
                phi[x].push_back(id);
            }
            // bijectivity of the component
            auto sorted = phi[x];
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                ok = false;
            if (phi[x].size() != cod.size()) ok = false;
        }
        // naturality against the Kleisli action of the pullback image
        if (ok) {
            PullbackObject img = np.objects[cmp.ob[bi]];
            for (int m = 0; m < kl.kl->n_mor() && ok; ++m) {
                auto [x, y, f] = kl.mor_data[m];
                auto dom_y = ec.hom(T.j.ob[y], b.carrier);
                for (size_t gi = 0; gi < dom_y.size() && ok; ++gi) {
                    int g = dom_y[gi];
                    int moved = img.apply(m, g);  // element of E(j x, e)
                    auto dom_x = ec.hom(T.j.ob[x], b.carrier);
                    int moved_pos = -1;
                    for (size_t i = 0; i < dom_x.size(); ++i)
                        if (dom_x[i] == moved) moved_pos = static_cast<int>(i);
                    int lhs = phi[x][moved_pos];
                    int rhs = alg.then(cmpf.i.mor[m], phi[y][gi]);
                    ok = lhs == rhs;
                }
            }
        }
        if (!ok) {
            rep.nerve_of_comparison_ok = false;
            rep.consistency.fail("nerve-of-comparison",
                                 "algebra " + std::to_string(bi));
        }
    }
    return rep;
}

RelativeMonad dualize_monad(const RelativeMonad& T) {
    RelativeMonad d;
    auto a_op = opposite_cat(T.j.src);
    auto e_op = opposite_cat(T.j.dst);
    d.j = opposite_functor(T.j, a_op, e_op);
    d.t_ob = T.t_ob;
    d.eta = T.eta;
    for (const auto& [key, v] : T.dagger) {
        auto [x, y, f] = key;
        d.dagger[{y, x, f}] = v;
    }
    return d;
}

ConerveTheoremReport check_conerve_theorem(const RelativeMonad& comonad,
                                           const Caps& caps) {
    auto rep = check_nerve_theorem(dualize_monad(comonad), caps);
    ConerveTheoremReport out;
    out.codense = rep.dense;
    out.comparison_iso = rep.comparison_iso;
    out.conerve_of_comparison_ok = rep.nerve_of_comparison_ok;
    out.codense_witness = rep.dense_witness;
    out.consistency = rep.consistency;
    return out;
}

}  // namespace rml
