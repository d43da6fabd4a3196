#include "rml/relmonad.hpp"

#include <functional>

namespace rml {

namespace {

std::string mname(const FinCat& c, int f) { return c.morphisms[f].name; }

}  // namespace

bool MonadLawReport::law3_pass() const {
    for (const auto& v : laws.violations)
        if (v.law == "associativity") return false;
    return true;
}

MonadLawReport check_relative_monad(const RelativeMonad& T) {
    MonadLawReport rep;
    const FinCat& A = T.A();
    const FinCat& E = T.E();

    if (static_cast<int>(T.t_ob.size()) != A.n_ob() ||
        static_cast<int>(T.eta.size()) != A.n_ob()) {
        rep.laws.fail("malformed:monad-tables", "t_ob/eta not total");
        return rep;
    }
    for (int x = 0; x < A.n_ob(); ++x) {
        if (T.t_ob[x] < 0 || T.t_ob[x] >= E.n_ob()) {
            rep.laws.fail("malformed:t_ob", std::to_string(x));
            return rep;
        }
        int e = T.eta[x];
        if (e < 0 || e >= E.n_mor() || E.morphisms[e].src != T.j.ob[x] ||
            E.morphisms[e].tgt != T.t_ob[x]) {
            rep.laws.fail("malformed:eta-endpoints", A.objects[x]);
            return rep;
        }
    }
    // dagger totality and image endpoints
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(T.j.ob[x], T.t_ob[y])) {
                auto it = T.dagger.find({x, y, f});
                if (it == T.dagger.end()) {
                    rep.laws.fail("malformed:dagger-totality",
                                  "(" + A.objects[x] + "," + A.objects[y] + "," +
                                      mname(E, f) + ")");
                    return rep;
                }
                int d = it->second;
                if (d < 0 || d >= E.n_mor() || E.morphisms[d].src != T.t_ob[x] ||
                    E.morphisms[d].tgt != T.t_ob[y]) {
                    rep.laws.fail("malformed:dagger-image",
                                  mname(E, f) + " -> out of E(t x, t y)");
                    return rep;
                }
            }
    for (const auto& [key, d] : T.dagger) {
        auto [x, y, f] = key;
        if (x < 0 || x >= A.n_ob() || y < 0 || y >= A.n_ob() || f < 0 ||
            f >= E.n_mor() || E.morphisms[f].src != T.j.ob[x] ||
            E.morphisms[f].tgt != T.t_ob[y]) {
            rep.laws.fail("malformed:dagger-key", "stray extension entry");
            return rep;
        }
        (void)d;
    }

    // law 1: eta_x ; f-dagger = f
    for (const auto& [key, d] : T.dagger) {
        auto [x, y, f] = key;
        (void)y;
        if (E.then(T.eta[x], d) != f)
            rep.laws.fail("unit-extension", "(" + A.objects[x] + ", " + mname(E, f) + ")");
    }
    // law 2: eta_x-dagger = id
    for (int x = 0; x < A.n_ob(); ++x)
        if (T.dag(x, x, T.eta[x]) != E.identity[T.t_ob[x]])
            rep.laws.fail("unit-identity", A.objects[x]);
    // law 3: (f ; g-dagger)-dagger = f-dagger ; g-dagger
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(T.j.ob[x], T.t_ob[y]))
                for (int z = 0; z < A.n_ob(); ++z)
                    for (int g : E.hom(T.j.ob[y], T.t_ob[z])) {
                        int gd = T.dag(y, z, g);
                        int lhs = T.dag(x, z, E.then(f, gd));
                        int rhs = E.then(T.dag(x, y, f), gd);
                        if (lhs != rhs)
                            rep.laws.fail("associativity",
                                          "(" + mname(E, f) + ", " + mname(E, g) + ")");
                        // alternative associativity:
                        // (eta_x ; f-dagger ; g-dagger)-dagger = f-dagger ; g-dagger
                        int mid = E.then(E.then(T.eta[x], T.dag(x, y, f)), gd);
                        if (T.dag(x, z, mid) != rhs)
                            rep.alt_assoc.fail("alt-associativity",
                                               "(" + mname(E, f) + ", " + mname(E, g) + ")");
                    }
    return rep;
}

RelativeMonad identity_monad(const CatPtr& a) {
    RelativeMonad T;
    T.j = identity_functor(a);
    T.t_ob.resize(a->n_ob());
    T.eta.resize(a->n_ob());
    for (int x = 0; x < a->n_ob(); ++x) {
        T.t_ob[x] = x;
        T.eta[x] = a->identity[x];
    }
    for (int x = 0; x < a->n_ob(); ++x)
        for (int y = 0; y < a->n_ob(); ++y)
            for (int f : a->hom(x, y)) T.dagger[{x, y, f}] = f;
    return T;
}

CarrierFunctorResult carrier_functor(const RelativeMonad& T) {
    const FinCat& A = T.A();
    const FinCat& E = T.E();
    CarrierFunctorResult res;
    res.t.src = T.j.src;
    res.t.dst = T.j.dst;
    res.t.ob = T.t_ob;
    res.t.mor.resize(A.n_mor());
    for (int u = 0; u < A.n_mor(); ++u) {
        int x = A.morphisms[u].src, y = A.morphisms[u].tgt;
        res.t.mor[u] = T.dag(x, y, E.then(T.j.mor[u], T.eta[y]));
    }
    res.naturality.merge(validate_functor(res.t));
    // eta natural: j u ; eta_y = eta_x ; t u
    for (int u = 0; u < A.n_mor(); ++u) {
        int x = A.morphisms[u].src, y = A.morphisms[u].tgt;
        if (E.then(T.j.mor[u], T.eta[y]) != E.then(T.eta[x], res.t.mor[u]))
            res.naturality.fail("eta-naturality", mname(A, u));
    }
    // dagger natural in both variables
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(T.j.ob[x], T.t_ob[y])) {
                for (int u = 0; u < A.n_mor(); ++u) {
                    if (A.morphisms[u].tgt != x) continue;
                    int xp = A.morphisms[u].src;
                    if (T.dag(xp, y, E.then(T.j.mor[u], f)) !=
                        E.then(res.t.mor[u], T.dag(x, y, f)))
                        res.naturality.fail("dagger-naturality-left",
                                            mname(A, u) + ", " + mname(E, f));
                }
                for (int v = 0; v < A.n_mor(); ++v) {
                    if (A.morphisms[v].src != y) continue;
                    int yp = A.morphisms[v].tgt;
                    if (T.dag(x, yp, E.then(f, res.t.mor[v])) !=
                        E.then(T.dag(x, y, f), res.t.mor[v]))
                        res.naturality.fail("dagger-naturality-right",
                                            mname(E, f) + ", " + mname(A, v));
                }
            }
    return res;
}

int RelativeAdjunction::apply_inv(int x, int y, int g) const {
    const FinCat& C = *ell.dst;
    for (int f : C.hom(ell.ob[x], y))
        if (apply(x, y, f) == g) return f;
    throw InputError("phi inverse: no preimage");
}

LawReport validate_adjunction(const RelativeAdjunction& adj) {
    LawReport rep;
    const FinCat& A = *adj.j.src;
    const FinCat& C = *adj.ell.dst;
    const FinCat& E = *adj.j.dst;
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < C.n_ob(); ++y) {
            auto dom = C.hom(adj.ell.ob[x], y);
            auto cod = E.hom(adj.j.ob[x], adj.r.ob[y]);
            std::vector<int> image;
            for (int f : dom) {
                auto it = adj.phi.find({x, y, f});
                if (it == adj.phi.end()) {
                    rep.fail("malformed:phi-totality",
                             "(" + A.objects[x] + "," + C.objects[y] + ")");
                    return rep;
                }
                bool in_cod = false;
                for (int g : cod) in_cod |= (g == it->second);
                if (!in_cod) {
                    rep.fail("malformed:phi-image",
                             "(" + A.objects[x] + "," + C.objects[y] + ")");
                    return rep;
                }
                image.push_back(it->second);
            }
            std::sort(image.begin(), image.end());
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (image.size() != dom.size() || image.size() != cod.size())
                rep.fail("phi-bijectivity",
                         "(" + A.objects[x] + "," + C.objects[y] + "): " +
                             std::to_string(dom.size()) + " vs " +
                             std::to_string(cod.size()));
        }
    if (!rep.pass()) return rep;
    // naturality in y: phi(f ; h) = phi(f) ; r h
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < C.n_ob(); ++y)
            for (int f : C.hom(adj.ell.ob[x], y))
                for (int h = 0; h < C.n_mor(); ++h) {
                    if (C.morphisms[h].src != y) continue;
                    int y2 = C.morphisms[h].tgt;
                    if (adj.apply(x, y2, C.then(f, h)) !=
                        E.then(adj.apply(x, y, f), adj.r.mor[h]))
                        rep.fail("phi-naturality-codomain",
                                 mname(C, f) + ", " + mname(C, h));
                }
    // naturality in x: phi(ell u ; f) = j u ; phi(f)
    for (int u = 0; u < A.n_mor(); ++u) {
        int x2 = A.morphisms[u].src, x = A.morphisms[u].tgt;
        for (int y = 0; y < C.n_ob(); ++y)
            for (int f : C.hom(adj.ell.ob[x], y))
                if (adj.apply(x2, y, C.then(adj.ell.mor[u], f)) !=
                    E.then(adj.j.mor[u], adj.apply(x, y, f)))
                    rep.fail("phi-naturality-domain", mname(A, u) + ", " + mname(C, f));
    }
    return rep;
}

RelativeMonad monad_from_adjunction(const RelativeAdjunction& adj) {
    const FinCat& A = *adj.j.src;
    const FinCat& C = *adj.ell.dst;
    const FinCat& E = *adj.j.dst;
    RelativeMonad T;
    T.j = adj.j;
    T.t_ob.resize(A.n_ob());
    T.eta.resize(A.n_ob());
    for (int x = 0; x < A.n_ob(); ++x) {
        int lx = adj.ell.ob[x];
        T.t_ob[x] = adj.r.ob[lx];
        T.eta[x] = adj.apply(x, lx, C.identity[lx]);
    }
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(adj.j.ob[x], T.t_ob[y]))
                T.dagger[{x, y, f}] = adj.r.mor[adj.apply_inv(x, adj.ell.ob[y], f)];
    return T;
}

RelativeMonad restrict_monad(const RelativeMonad& S, const Functor& j) {
    const FinCat& E = *j.dst;
    Functor id = identity_functor(j.dst);
    if (S.j.ob != id.ob || S.j.mor != id.mor || *S.j.src != E)
        throw InputError("restrict_monad: S must have identity root");
    const FinCat& A = *j.src;
    RelativeMonad T;
    T.j = j;
    T.t_ob.resize(A.n_ob());
    T.eta.resize(A.n_ob());
    for (int x = 0; x < A.n_ob(); ++x) {
        T.t_ob[x] = S.t_ob[j.ob[x]];
        T.eta[x] = S.eta[j.ob[x]];
    }
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(j.ob[x], T.t_ob[y]))
                T.dagger[{x, y, f}] = S.dag(j.ob[x], j.ob[y], f);
    return T;
}

std::vector<RelativeAdjunction> find_left_relative_adjoint(const Functor& r,
                                                           const Functor& j,
                                                           bool all_solutions,
                                                           long budget) {
    const FinCat& A = *j.src;
    const FinCat& C = *r.src;
    const FinCat& E = *j.dst;
    if (*r.dst != E) throw InputError("find_left_relative_adjoint: codomain mismatch");
    std::vector<RelativeAdjunction> out;
    long tried = 0;

    std::vector<int> ell_ob(A.n_ob(), 0);
    std::vector<int> eta(A.n_ob(), -1);

    auto try_assignment = [&]() {
        // phi_x(f : ell x -> y) = eta_x ; r f must be bijective for all y
        for (int x = 0; x < A.n_ob(); ++x)
            for (int y = 0; y < C.n_ob(); ++y) {
                auto dom = C.hom(ell_ob[x], y);
                auto cod = E.hom(j.ob[x], r.ob[y]);
                if (dom.size() != cod.size()) return;
                std::vector<int> image;
                for (int f : dom) image.push_back(E.then(eta[x], r.mor[f]));
                std::sort(image.begin(), image.end());
                if (std::adjacent_find(image.begin(), image.end()) != image.end())
                    return;
            }
        // ell on morphisms forced by phi^-1(j u ; eta_x')
        Functor ell{j.src, r.src, ell_ob, std::vector<int>(A.n_mor(), -1)};
        for (int u = 0; u < A.n_mor(); ++u) {
            int x = A.morphisms[u].src, x2 = A.morphisms[u].tgt;
            int want = E.then(j.mor[u], eta[x2]);
            int found = -1;
            for (int f : C.hom(ell_ob[x], ell_ob[x2]))
                if (E.then(eta[x], r.mor[f]) == want) found = f;
            if (found < 0) return;
            ell.mor[u] = found;
        }
        if (!validate_functor(ell).pass()) return;
        RelativeAdjunction adj;
        adj.j = j;
        adj.ell = ell;
        adj.r = r;
        for (int x = 0; x < A.n_ob(); ++x)
            for (int y = 0; y < C.n_ob(); ++y)
                for (int f : C.hom(ell_ob[x], y))
                    adj.phi[{x, y, f}] = E.then(eta[x], r.mor[f]);
        if (validate_adjunction(adj).pass()) out.push_back(std::move(adj));
    };

    std::function<void(int)> pick_eta = [&](int x) {
        if (!all_solutions && !out.empty()) return;
        if (++tried > budget) throw CapacityError("adjoint search exceeded budget");
        if (x == A.n_ob()) {
            try_assignment();
            return;
        }
        for (int e : E.hom(j.ob[x], r.ob[ell_ob[x]])) {
            eta[x] = e;
            pick_eta(x + 1);
        }
        eta[x] = -1;
    };
    std::function<void(int)> pick_ob = [&](int x) {
        if (!all_solutions && !out.empty()) return;
        if (x == A.n_ob()) {
            pick_eta(0);
            return;
        }
        for (int y = 0; y < C.n_ob(); ++y) {
            ell_ob[x] = y;
            pick_ob(x + 1);
        }
    };
    if (A.n_ob() == 0) {
        try_assignment();
        return out;
    }
    pick_ob(0);
    return out;
}

SectionData section_from_monad(const RelativeMonad& T) {
    const FinCat& E = T.E();
    SectionData sd;
    sd.j = T.j;
    sd.t = carrier_functor(T).t;
    sd.s = T.dagger;
    const FinCat& A = T.A();
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int g : E.hom(T.t_ob[x], T.t_ob[y]))
                sd.r[{x, y, g}] = E.then(T.eta[x], g);
    return sd;
}

SectionCheck monad_from_section(const SectionData& sd) {
    SectionCheck out;
    const FinCat& A = *sd.j.src;
    const FinCat& E = *sd.j.dst;
    auto s_at = [&](int x, int y, int f) {
        auto it = sd.s.find({x, y, f});
        if (it == sd.s.end()) throw InputError("section s not total");
        return it->second;
    };
    auto r_at = [&](int x, int y, int g) {
        auto it = sd.r.find({x, y, g});
        if (it == sd.r.end()) throw InputError("retraction r not total");
        return it->second;
    };

    // recover eta from the retraction at identities
    std::vector<int> eta(A.n_ob());
    for (int x = 0; x < A.n_ob(); ++x)
        eta[x] = r_at(x, x, E.identity[sd.t.ob[x]]);
    // r must be the canonical post-restriction by eta
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int g : E.hom(sd.t.ob[x], sd.t.ob[y]))
                if (r_at(x, y, g) != E.then(eta[x], g))
                    out.report.fail("retraction-not-canonical",
                                    "(" + A.objects[x] + "," + A.objects[y] + "," +
                                        E.morphisms[g].name + ")");
    // retraction identity: s ; r = 1 on E(j, t)
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(sd.j.ob[x], sd.t.ob[y]))
                if (r_at(x, y, s_at(x, y, f)) != f)
                    out.report.fail("section-retraction",
                                    "(" + A.objects[x] + "," + A.objects[y] + "," +
                                        E.morphisms[f].name + ")");
    // unit section square: s(r(t u)) = t u for each u in A
    for (int u = 0; u < A.n_mor(); ++u) {
        int x = A.morphisms[u].src, y = A.morphisms[u].tgt;
        int tu = sd.t.mor[u];
        if (s_at(x, y, r_at(x, y, tu)) != tu)
            out.report.fail("unit-section-square", A.morphisms[u].name);
    }
    // multiplication section square: s(r(s f ; s g)) = s f ; s g
    for (int x = 0; x < A.n_ob(); ++x)
        for (int y = 0; y < A.n_ob(); ++y)
            for (int f : E.hom(sd.j.ob[x], sd.t.ob[y]))
                for (int z = 0; z < A.n_ob(); ++z)
                    for (int g : E.hom(sd.j.ob[y], sd.t.ob[z])) {
                        int comp = E.then(s_at(x, y, f), s_at(y, z, g));
                        if (s_at(x, z, r_at(x, z, comp)) != comp)
                            out.report.fail("multiplication-section-square",
                                            "(" + E.morphisms[f].name + ", " +
                                                E.morphisms[g].name + ")");
                    }
    if (!out.report.pass()) return out;

    RelativeMonad T;
    T.j = sd.j;
    T.t_ob = sd.t.ob;
    T.eta = eta;
    T.dagger = sd.s;
    auto mlr = check_relative_monad(T);
    out.report.merge(mlr.laws);
    if (out.report.pass()) out.monad = std::move(T);
    return out;
}

}  // namespace rml
