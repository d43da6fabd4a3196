#include "rml/fincat.hpp"

#include <algorithm>
#include <functional>

namespace rml {

std::vector<int> FinCat::hom(int a, int b) const {
    std::vector<int> out;
    for (int f = 0; f < n_mor(); ++f)
        if (morphisms[f].src == a && morphisms[f].tgt == b) out.push_back(f);
    return out;
}

int CatBuilder::add_object(std::string name) {
    cat.objects.push_back(std::move(name));
    return cat.n_ob() - 1;
}

int CatBuilder::add_morphism(std::string name, int src, int tgt) {
    cat.morphisms.push_back({std::move(name), src, tgt});
    return cat.n_mor() - 1;
}

void CatBuilder::set_identity(int obj, int mor) {
    if (static_cast<int>(cat.identity.size()) <= obj)
        cat.identity.resize(obj + 1, -1);
    cat.identity[obj] = mor;
}

void CatBuilder::finish_morphisms() {
    cat.identity.resize(cat.n_ob(), -1);
    cat.compose_table.assign(static_cast<size_t>(cat.n_mor()) * cat.n_mor(), -1);
}

static std::string mor_str(const FinCat& c, int f) {
    return c.morphisms[f].name + "(#" + std::to_string(f) + ": " +
           c.objects[c.morphisms[f].src] + "->" + c.objects[c.morphisms[f].tgt] +
           ")";
}

LawReport validate_category(const FinCat& c, const Caps& caps) {
    LawReport r;
    if (c.n_ob() > caps.max_objects || c.n_mor() > caps.max_morphisms)
        throw CapacityError("category exceeds caps: " + std::to_string(c.n_ob()) +
                            " objects, " + std::to_string(c.n_mor()) +
                            " morphisms");
    // table shape
    if (static_cast<int>(c.identity.size()) != c.n_ob()) {
        r.fail("malformed:identity-table",
               "expected " + std::to_string(c.n_ob()) + " entries, got " +
                   std::to_string(c.identity.size()));
        return r;
    }
    if (static_cast<long>(c.compose_table.size()) !=
        static_cast<long>(c.n_mor()) * c.n_mor()) {
        r.fail("malformed:compose-table", "wrong size");
        return r;
    }
    for (int f = 0; f < c.n_mor(); ++f) {
        const auto& m = c.morphisms[f];
        if (m.src < 0 || m.src >= c.n_ob() || m.tgt < 0 || m.tgt >= c.n_ob()) {
            r.fail("malformed:morphism-endpoints", mor_str(c, f));
            return r;
        }
    }
    for (int a = 0; a < c.n_ob(); ++a) {
        int e = c.identity[a];
        if (e < 0 || e >= c.n_mor()) {
            r.fail("malformed:identity-index", c.objects[a]);
            return r;
        }
    }
    for (long i = 0; i < static_cast<long>(c.compose_table.size()); ++i) {
        int v = c.compose_table[i];
        if (v < -1 || v >= c.n_mor()) {
            r.fail("malformed:compose-index", "entry " + std::to_string(i));
            return r;
        }
    }

    // identities well-placed
    for (int a = 0; a < c.n_ob(); ++a) {
        int e = c.identity[a];
        if (c.morphisms[e].src != a || c.morphisms[e].tgt != a)
            r.fail("identity-endpoints", c.objects[a] + " vs " + mor_str(c, e));
    }
    // domain of composition = composable pairs; codomain correct
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            bool composable = c.morphisms[f].tgt == c.morphisms[g].src;
            int fg = c.then(f, g);
            if (composable && fg < 0)
                r.fail("compose-undefined", mor_str(c, f) + ", " + mor_str(c, g));
            if (!composable && fg >= 0)
                r.fail("compose-overdefined", mor_str(c, f) + ", " + mor_str(c, g));
            if (composable && fg >= 0 &&
                (c.morphisms[fg].src != c.morphisms[f].src ||
                 c.morphisms[fg].tgt != c.morphisms[g].tgt))
                r.fail("compose-endpoints",
                       mor_str(c, f) + ", " + mor_str(c, g) + " -> " + mor_str(c, fg));
        }
    // Law checks still run after an endpoint defect, so a redirected unit
    // composite reports the broken law alongside the structural report;
    // undefined composites were already reported above and are skipped here.
    for (int f = 0; f < c.n_mor(); ++f) {
        int a = c.morphisms[f].src, b = c.morphisms[f].tgt;
        int lf = c.then(c.identity[a], f);
        if (lf >= 0 && lf != f)
            r.fail("right-unit", "(" + mor_str(c, c.identity[a]) + ", " + mor_str(c, f) + ")");
        int fr = c.then(f, c.identity[b]);
        if (fr >= 0 && fr != f)
            r.fail("left-unit", "(" + mor_str(c, c.identity[b]) + ", " + mor_str(c, f) + ")");
    }
    // associativity
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            if (c.morphisms[f].tgt != c.morphisms[g].src) continue;
            int fg = c.then(f, g);
            if (fg < 0) continue;
            for (int h = 0; h < c.n_mor(); ++h) {
                if (c.morphisms[g].tgt != c.morphisms[h].src) continue;
                int gh = c.then(g, h);
                if (gh < 0) continue;
                int lhs = c.then(fg, h);
                int rhs = c.then(f, gh);
                if (lhs >= 0 && rhs >= 0 && lhs != rhs)
                    r.fail("associativity", mor_str(c, f) + ", " + mor_str(c, g) +
                                                ", " + mor_str(c, h));
            }
        }
    return r;
}

LawReport validate_functor(const Functor& f) {
    LawReport r;
    const FinCat& a = *f.src;
    const FinCat& b = *f.dst;
    if (static_cast<int>(f.ob.size()) != a.n_ob() ||
        static_cast<int>(f.mor.size()) != a.n_mor()) {
        r.fail("malformed:functor-maps", "object/morphism map not total");
        return r;
    }
    for (int x : f.ob)
        if (x < 0 || x >= b.n_ob()) {
            r.fail("malformed:object-image", std::to_string(x));
            return r;
        }
    for (int u : f.mor)
        if (u < 0 || u >= b.n_mor()) {
            r.fail("malformed:morphism-image", std::to_string(u));
            return r;
        }
    for (int u = 0; u < a.n_mor(); ++u) {
        int fu = f.mor[u];
        if (b.morphisms[fu].src != f.ob[a.morphisms[u].src] ||
            b.morphisms[fu].tgt != f.ob[a.morphisms[u].tgt])
            r.fail("source-target-preservation", mor_str(a, u));
    }
    for (int x = 0; x < a.n_ob(); ++x)
        if (f.mor[a.identity[x]] != b.identity[f.ob[x]])
            r.fail("identity-preservation", a.objects[x]);
    for (int u = 0; u < a.n_mor(); ++u)
        for (int v = 0; v < a.n_mor(); ++v) {
            if (a.morphisms[u].tgt != a.morphisms[v].src) continue;
            if (f.mor[a.then(u, v)] != b.then(f.mor[u], f.mor[v]))
                r.fail("composition-preservation", mor_str(a, u) + ", " + mor_str(a, v));
        }
    return r;
}

LawReport validate_presheaf(const Presheaf& p) {
    LawReport r;
    const FinCat& c = *p.base;
    if (static_cast<int>(p.value.size()) != c.n_ob() ||
        static_cast<int>(p.action.size()) != c.n_mor()) {
        r.fail("malformed:presheaf-tables", "wrong arity");
        return r;
    }
    for (int f = 0; f < c.n_mor(); ++f) {
        int a = c.morphisms[f].src, b = c.morphisms[f].tgt;
        if (static_cast<int>(p.action[f].size()) != p.size(b)) {
            r.fail("malformed:action-arity", mor_str(c, f));
            return r;
        }
        for (int i : p.action[f])
            if (i < 0 || i >= p.size(a)) {
                r.fail("malformed:action-image", mor_str(c, f));
                return r;
            }
    }
    for (int a = 0; a < c.n_ob(); ++a) {
        int e = c.identity[a];
        for (int i = 0; i < p.size(a); ++i)
            if (p.action[e][i] != i)
                r.fail("presheaf-identity", c.objects[a] + " elt " + std::to_string(i));
    }
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            if (c.morphisms[f].tgt != c.morphisms[g].src) continue;
            int fg = c.then(f, g);
            for (int i = 0; i < p.size(c.morphisms[g].tgt); ++i)
                if (p.action[fg][i] != p.action[f][p.action[g][i]])
                    r.fail("presheaf-composition",
                           mor_str(c, f) + ", " + mor_str(c, g) + " elt " +
                               std::to_string(i));
        }
    return r;
}

Functor identity_functor(const CatPtr& c) {
    Functor f;
    f.src = f.dst = c;
    f.ob.resize(c->n_ob());
    f.mor.resize(c->n_mor());
    for (int i = 0; i < c->n_ob(); ++i) f.ob[i] = i;
    for (int i = 0; i < c->n_mor(); ++i) f.mor[i] = i;
    return f;
}

Functor compose_functors(const Functor& f, const Functor& g) {
    Functor h;
    h.src = f.src;
    h.dst = g.dst;
    h.ob.reserve(f.ob.size());
    for (int x : f.ob) h.ob.push_back(g.ob[x]);
    h.mor.reserve(f.mor.size());
    for (int u : f.mor) h.mor.push_back(g.mor[u]);
    return h;
}

bool functors_equal(const Functor& f, const Functor& g) {
    return *f.src == *g.src && *f.dst == *g.dst && f.ob == g.ob && f.mor == g.mor;
}

std::vector<Functor> enumerate_functors(const CatPtr& src, const CatPtr& dst,
                                        long budget) {
    const FinCat& a = *src;
    const FinCat& b = *dst;
    std::vector<Functor> out;

    std::vector<int> ob(a.n_ob(), 0), mor(a.n_mor(), -1);
    // backtrack over object map, then morphism map with incremental checks
    std::function<void(int)> go_mor = [&](int u) {
        if (u == a.n_mor()) {
            Functor f{src, dst, ob, mor};
            if (validate_functor(f).pass()) {
                out.push_back(std::move(f));
                if (static_cast<long>(out.size()) > budget)
                    throw CapacityError("functor enumeration exceeded budget");
            }
            return;
        }
        int sa = ob[a.morphisms[u].src], ta = ob[a.morphisms[u].tgt];
        for (int v : b.hom(sa, ta)) {
            mor[u] = v;
            // partial coherence: identities and composites with earlier picks
            bool ok = true;
            for (int x = 0; x < a.n_ob() && ok; ++x)
                if (a.identity[x] == u && v != b.identity[ob[x]]) ok = false;
            for (int w = 0; w <= u && ok; ++w) {
                if (mor[w] < 0) continue;
                if (a.morphisms[w].tgt == a.morphisms[u].src) {
                    int c = a.then(w, u);
                    if (c <= u && mor[c] >= 0 && mor[c] != b.then(mor[w], v)) ok = false;
                }
                if (a.morphisms[u].tgt == a.morphisms[w].src) {
                    int c = a.then(u, w);
                    if (c <= u && mor[c] >= 0 && mor[c] != b.then(v, mor[w])) ok = false;
                }
            }
            if (ok) go_mor(u + 1);
            mor[u] = -1;
        }
    };
    std::function<void(int)> go_ob = [&](int x) {
        if (x == a.n_ob()) {
            if (a.n_mor() == 0) {
                out.push_back(Functor{src, dst, ob, {}});
                return;
            }
            go_mor(0);
            return;
        }
        for (int y = 0; y < b.n_ob(); ++y) {
            ob[x] = y;
            go_ob(x + 1);
        }
    };
    if (a.n_ob() == 0) {
        out.push_back(Functor{src, dst, {}, {}});
        return out;
    }
    go_ob(0);
    return out;
}

std::vector<NatTransformation> enumerate_nat_transformations(const Functor& f,
                                                             const Functor& g) {
    const FinCat& a = *f.src;
    const FinCat& e = *f.dst;
    std::vector<NatTransformation> out;
    std::vector<int> comp(a.n_ob(), -1);

    std::function<void(int)> go = [&](int x) {
        if (x == a.n_ob()) {
            out.push_back(NatTransformation{f, g, comp});
            return;
        }
        for (int c : e.hom(f.ob[x], g.ob[x])) {
            comp[x] = c;
            bool ok = true;
            // naturality squares whose endpoints are both assigned
            for (int u = 0; u < a.n_mor() && ok; ++u) {
                int s = a.morphisms[u].src, t = a.morphisms[u].tgt;
                if (comp[s] < 0 || comp[t] < 0) continue;
                if (e.then(f.mor[u], comp[t]) != e.then(comp[s], g.mor[u])) ok = false;
            }
            if (ok) go(x + 1);
            comp[x] = -1;
        }
    };
    go(0);
    return out;
}

CatPtr opposite_cat(const CatPtr& c) {
    FinCat o;
    o.objects = c->objects;
    o.morphisms = c->morphisms;
    for (auto& m : o.morphisms) std::swap(m.src, m.tgt);
    o.identity = c->identity;
    int n = c->n_mor();
    o.compose_table.assign(static_cast<size_t>(n) * n, -1);
    for (int f = 0; f < n; ++f)
        for (int g = 0; g < n; ++g) o.compose_table[f * n + g] = c->then(g, f);
    return std::make_shared<const FinCat>(std::move(o));
}

Functor opposite_functor(const Functor& f, const CatPtr& src_op,
                         const CatPtr& dst_op) {
    return Functor{src_op, dst_op, f.ob, f.mor};
}

PullbackResult pullback_category(const Functor& f, const Functor& g,
                                 const Caps& caps) {
    if (*f.dst != *g.dst) throw InputError("pullback: codomain mismatch");
    const FinCat& a = *f.src;
    const FinCat& b = *g.src;

    PullbackResult res;
    CatBuilder cb;
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < b.n_ob(); ++y)
            if (f.ob[x] == g.ob[y]) {
                cb.add_object("(" + a.objects[x] + "," + b.objects[y] + ")");
                res.pair_ob.push_back({x, y});
            }
    auto ob_index = [&](int x, int y) {
        for (size_t i = 0; i < res.pair_ob.size(); ++i)
            if (res.pair_ob[i] == std::make_pair(x, y)) return static_cast<int>(i);
        return -1;
    };
    for (int u = 0; u < a.n_mor(); ++u)
        for (int v = 0; v < b.n_mor(); ++v) {
            if (f.mor[u] != g.mor[v]) continue;
            int s = ob_index(a.morphisms[u].src, b.morphisms[v].src);
            int t = ob_index(a.morphisms[u].tgt, b.morphisms[v].tgt);
            if (s < 0 || t < 0) continue;
            cb.add_morphism("(" + a.morphisms[u].name + "," + b.morphisms[v].name + ")",
                            s, t);
            res.pair_mor.push_back({u, v});
        }
    if (cb.cat.n_ob() > caps.max_objects || cb.cat.n_mor() > caps.max_morphisms)
        throw CapacityError("pullback apex exceeds caps");
    cb.finish_morphisms();
    auto mor_index = [&](int u, int v) {
        for (size_t i = 0; i < res.pair_mor.size(); ++i)
            if (res.pair_mor[i] == std::make_pair(u, v)) return static_cast<int>(i);
        return -1;
    };
    for (size_t i = 0; i < res.pair_ob.size(); ++i) {
        auto [x, y] = res.pair_ob[i];
        cb.set_identity(static_cast<int>(i), mor_index(a.identity[x], b.identity[y]));
    }
    int nm = cb.cat.n_mor();
    for (int p = 0; p < nm; ++p)
        for (int q = 0; q < nm; ++q) {
            if (cb.cat.morphisms[p].tgt != cb.cat.morphisms[q].src) continue;
            auto [u1, v1] = res.pair_mor[p];
            auto [u2, v2] = res.pair_mor[q];
            cb.set_compose(p, q, mor_index(a.then(u1, u2), b.then(v1, v2)));
        }
    res.apex = cb.build();

    res.proj1.src = res.apex;
    res.proj1.dst = f.src;
    res.proj2.src = res.apex;
    res.proj2.dst = g.src;
    for (auto [x, y] : res.pair_ob) {
        res.proj1.ob.push_back(x);
        res.proj2.ob.push_back(y);
    }
    for (auto [u, v] : res.pair_mor) {
        res.proj1.mor.push_back(u);
        res.proj2.mor.push_back(v);
    }
    return res;
}

Functor pullback_mediate(const PullbackResult& pb, const Functor& c1,
                         const Functor& c2) {
    Functor h;
    h.src = c1.src;
    h.dst = pb.apex;
    for (size_t x = 0; x < c1.ob.size(); ++x) {
        int idx = -1;
        for (size_t i = 0; i < pb.pair_ob.size(); ++i)
            if (pb.pair_ob[i] == std::make_pair(c1.ob[x], c2.ob[x]))
                idx = static_cast<int>(i);
        if (idx < 0) throw InputError("pullback_mediate: cone does not agree");
        h.ob.push_back(idx);
    }
    for (size_t u = 0; u < c1.mor.size(); ++u) {
        int idx = -1;
        for (size_t i = 0; i < pb.pair_mor.size(); ++i)
            if (pb.pair_mor[i] == std::make_pair(c1.mor[u], c2.mor[u]))
                idx = static_cast<int>(i);
        if (idx < 0) throw InputError("pullback_mediate: cone does not agree");
        h.mor.push_back(idx);
    }
    return h;
}

FullyFaithfulReport is_fully_faithful(const Functor& f) {
    const FinCat& a = *f.src;
    const FinCat& b = *f.dst;
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y) {
            auto dom = a.hom(x, y);
            auto cod = b.hom(f.ob[x], f.ob[y]);
            std::vector<int> image;
            for (int u : dom) image.push_back(f.mor[u]);
            std::sort(image.begin(), image.end());
            bool inj = std::adjacent_find(image.begin(), image.end()) == image.end();
            bool surj = image.size() == cod.size();
            if (!inj || !surj)
                return {false, "hom(" + a.objects[x] + "," + a.objects[y] + "): " +
                                   std::to_string(dom.size()) + " vs " +
                                   std::to_string(cod.size()) +
                                   (inj ? "" : " (non-injective)")};
        }
    return {true, ""};
}

bool is_strict_isomorphism(const Functor& f) {
    if (!validate_functor(f).pass()) return false;
    const FinCat& a = *f.src;
    const FinCat& b = *f.dst;
    if (a.n_ob() != b.n_ob() || a.n_mor() != b.n_mor()) return false;
    std::vector<int> ob = f.ob, mor = f.mor;
    std::sort(ob.begin(), ob.end());
    std::sort(mor.begin(), mor.end());
    for (int i = 0; i < a.n_ob(); ++i)
        if (ob[i] != i) return false;
    for (int i = 0; i < a.n_mor(); ++i)
        if (mor[i] != i) return false;
    return true;
}

}  // namespace rml
