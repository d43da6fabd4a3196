#include "rml/distributor.hpp"

#include <algorithm>
#include <functional>

namespace rml {

static std::string elem_str(const Distributor& d, int m) {
    return d.elems[m].name + "(#" + std::to_string(m) + " @ " +
           d.left->objects[d.elems[m].l] + "," + d.right->objects[d.elems[m].r] + ")";
}

LawReport validate_distributor(const Distributor& d, const Caps& caps) {
    LawReport r;
    const FinCat& L = *d.left;
    const FinCat& R = *d.right;
    if (static_cast<int>(d.het.size()) != L.n_ob()) {
        r.fail("malformed:het-shape", "left arity");
        return r;
    }
    for (const auto& row : d.het)
        if (static_cast<int>(row.size()) != R.n_ob()) {
            r.fail("malformed:het-shape", "right arity");
            return r;
        }
    for (int l = 0; l < L.n_ob(); ++l)
        for (int rr = 0; rr < R.n_ob(); ++rr) {
            if (static_cast<int>(d.het[l][rr].size()) > caps.max_het)
                throw CapacityError("het set exceeds cap at (" + L.objects[l] +
                                    "," + R.objects[rr] + ")");
            for (int m : d.het[l][rr]) {
                if (m < 0 || m >= d.n_elems() || d.elems[m].l != l ||
                    d.elems[m].r != rr) {
                    r.fail("malformed:het-index", "dangling heteromorphism index");
                    return r;
                }
            }
        }
    if (d.lact_table.size() != static_cast<size_t>(d.n_elems()) * L.n_mor() ||
        d.ract_table.size() != static_cast<size_t>(d.n_elems()) * R.n_mor()) {
        r.fail("malformed:action-shape", "wrong table size");
        return r;
    }
    for (int m = 0; m < d.n_elems(); ++m) {
        for (int u = 0; u < L.n_mor(); ++u) {
            bool applicable = L.morphisms[u].tgt == d.elems[m].l;
            int res = d.lact(u, m);
            if (applicable &&
                (res < 0 || res >= d.n_elems() ||
                 d.elems[res].l != L.morphisms[u].src || d.elems[res].r != d.elems[m].r)) {
                r.fail("malformed:left-action", elem_str(d, m) + " by " + L.morphisms[u].name);
                return r;
            }
            if (!applicable && res != -1) {
                r.fail("malformed:left-action-overdefined", elem_str(d, m));
                return r;
            }
        }
        for (int v = 0; v < R.n_mor(); ++v) {
            bool applicable = R.morphisms[v].src == d.elems[m].r;
            int res = d.ract(m, v);
            if (applicable &&
                (res < 0 || res >= d.n_elems() || d.elems[res].l != d.elems[m].l ||
                 d.elems[res].r != R.morphisms[v].tgt)) {
                r.fail("malformed:right-action", elem_str(d, m) + " by " + R.morphisms[v].name);
                return r;
            }
            if (!applicable && res != -1) {
                r.fail("malformed:right-action-overdefined", elem_str(d, m));
                return r;
            }
        }
    }

    // bimodule laws
    for (int m = 0; m < d.n_elems(); ++m) {
        if (d.lact(L.identity[d.elems[m].l], m) != m)
            r.fail("left-action-unit", elem_str(d, m));
        if (d.ract(m, R.identity[d.elems[m].r]) != m)
            r.fail("right-action-unit", elem_str(d, m));
    }
    for (int m = 0; m < d.n_elems(); ++m) {
        for (int u = 0; u < L.n_mor(); ++u) {
            if (L.morphisms[u].tgt != d.elems[m].l) continue;
            for (int u2 = 0; u2 < L.n_mor(); ++u2) {
                if (L.morphisms[u2].tgt != L.morphisms[u].src) continue;
                if (d.lact(L.then(u2, u), m) != d.lact(u2, d.lact(u, m)))
                    r.fail("left-action-associativity",
                           elem_str(d, m) + " by " + L.morphisms[u].name + ", " +
                               L.morphisms[u2].name);
            }
        }
        for (int v = 0; v < R.n_mor(); ++v) {
            if (R.morphisms[v].src != d.elems[m].r) continue;
            for (int v2 = 0; v2 < R.n_mor(); ++v2) {
                if (R.morphisms[v2].src != R.morphisms[v].tgt) continue;
                if (d.ract(m, R.then(v, v2)) != d.ract(d.ract(m, v), v2))
                    r.fail("right-action-associativity",
                           elem_str(d, m) + " by " + R.morphisms[v].name + ", " +
                               R.morphisms[v2].name);
            }
        }
        for (int u = 0; u < L.n_mor(); ++u) {
            if (L.morphisms[u].tgt != d.elems[m].l) continue;
            for (int v = 0; v < R.n_mor(); ++v) {
                if (R.morphisms[v].src != d.elems[m].r) continue;
                if (d.ract(d.lact(u, m), v) != d.lact(u, d.ract(m, v)))
                    r.fail("action-compatibility",
                           elem_str(d, m) + " by " + L.morphisms[u].name + ", " +
                               R.morphisms[v].name);
            }
        }
    }
    return r;
}

Distributor hom_distributor(const CatPtr& c) {
    Distributor d;
    d.left = d.right = c;
    int nm = c->n_mor();
    d.het.assign(c->n_ob(), std::vector<std::vector<int>>(c->n_ob()));
    // Elements in hom-block order (x, y, id), matching the enumeration used
    // by restriction, so restricting along identities is bit-exact.
    std::vector<int> elem_of(nm, -1);
    for (int x = 0; x < c->n_ob(); ++x)
        for (int y = 0; y < c->n_ob(); ++y)
            for (int f : c->hom(x, y)) {
                elem_of[f] = d.n_elems();
                d.elems.push_back({c->morphisms[f].name, x, y});
                d.het[x][y].push_back(elem_of[f]);
                d.parent.push_back(f);
            }
    d.lact_table.assign(static_cast<size_t>(nm) * nm, -1);
    d.ract_table.assign(static_cast<size_t>(nm) * nm, -1);
    for (int f = 0; f < nm; ++f) {
        int m = elem_of[f];
        for (int u = 0; u < nm; ++u)
            if (c->morphisms[u].tgt == c->morphisms[f].src)
                d.lact_table[static_cast<size_t>(m) * nm + u] = elem_of[c->then(u, f)];
        for (int v = 0; v < nm; ++v)
            if (c->morphisms[v].src == c->morphisms[f].tgt)
                d.ract_table[static_cast<size_t>(m) * nm + v] = elem_of[c->then(f, v)];
    }
    return d;
}

Distributor restrict_distributor(const Distributor& p, const Functor& f,
                                 const Functor& g) {
    if (*f.dst != *p.left || *g.dst != *p.right)
        throw InputError("restrict_distributor: domain mismatch");
    Distributor d;
    d.left = f.src;
    d.right = g.src;
    const FinCat& L = *d.left;
    const FinCat& R = *d.right;
    d.het.assign(L.n_ob(), std::vector<std::vector<int>>(R.n_ob()));
    // lookup[(x,y) flattened][parent elem] -> new id
    std::vector<std::map<int, int>> lookup(static_cast<size_t>(L.n_ob()) * R.n_ob());
    std::vector<int> src_elem;  // new id -> elem id in p
    for (int x = 0; x < L.n_ob(); ++x)
        for (int y = 0; y < R.n_ob(); ++y) {
            for (int pe : p.het[f.ob[x]][g.ob[y]]) {
                int id = d.n_elems();
                d.elems.push_back({p.elems[pe].name, x, y});
                d.het[x][y].push_back(id);
                d.parent.push_back(p.parent.empty() ? pe : p.parent[pe]);
                lookup[static_cast<size_t>(x) * R.n_ob() + y][pe] = id;
                src_elem.push_back(pe);
            }
        }
    d.lact_table.assign(static_cast<size_t>(d.n_elems()) * L.n_mor(), -1);
    d.ract_table.assign(static_cast<size_t>(d.n_elems()) * R.n_mor(), -1);
    for (int m = 0; m < d.n_elems(); ++m) {
        int x = d.elems[m].l, y = d.elems[m].r, pe = src_elem[m];
        for (int u = 0; u < L.n_mor(); ++u) {
            if (L.morphisms[u].tgt != x) continue;
            int res = p.lact(f.mor[u], pe);
            int xs = L.morphisms[u].src;
            d.lact_table[static_cast<size_t>(m) * L.n_mor() + u] =
                lookup[static_cast<size_t>(xs) * R.n_ob() + y].at(res);
        }
        for (int v = 0; v < R.n_mor(); ++v) {
            if (R.morphisms[v].src != y) continue;
            int res = p.ract(pe, g.mor[v]);
            int yt = R.morphisms[v].tgt;
            d.ract_table[static_cast<size_t>(m) * R.n_mor() + v] =
                lookup[static_cast<size_t>(x) * R.n_ob() + yt].at(res);
        }
    }
    return d;
}

Distributor conjoint(const Functor& j) {
    return restrict_distributor(hom_distributor(j.dst), j, identity_functor(j.dst));
}

std::vector<std::map<int, int>> left_module_morphisms(const Distributor& p,
                                                      int r, int r_prime) {
    const FinCat& L = *p.left;
    std::vector<int> column;  // elems with .r == r, id order
    for (int m = 0; m < p.n_elems(); ++m)
        if (p.elems[m].r == r) column.push_back(m);
    std::vector<std::map<int, int>> out;
    std::map<int, int> phi;

    std::function<void(size_t)> go = [&](size_t k) {
        if (k == column.size()) {
            out.push_back(phi);
            return;
        }
        int m = column[k];
        for (int cand : p.het[p.elems[m].l][r_prime]) {
            phi[m] = cand;
            bool ok = true;
            for (int u = 0; u < L.n_mor() && ok; ++u) {
                // phi(lact(u, m')) == lact(u, phi(m')) whenever both sides known
                for (int mm : column) {
                    auto it = phi.find(mm);
                    if (it == phi.end()) continue;
                    if (L.morphisms[u].tgt != p.elems[mm].l) continue;
                    int moved = p.lact(u, mm);
                    auto it2 = phi.find(moved);
                    if (it2 == phi.end()) continue;
                    if (it2->second != p.lact(u, it->second)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (ok) go(k + 1);
            phi.erase(m);
        }
    };
    go(0);
    return out;
}

DensityReport distributor_dense(const Distributor& p) {
    const FinCat& R = *p.right;
    for (int r = 0; r < R.n_ob(); ++r)
        for (int r2 = 0; r2 < R.n_ob(); ++r2) {
            auto mods = left_module_morphisms(p, r, r2);
            auto homset = R.hom(r, r2);
            // canonical map v |-> ract(-, v)
            std::vector<std::map<int, int>> canon;
            for (int v : homset) {
                std::map<int, int> phi;
                for (int m = 0; m < p.n_elems(); ++m)
                    if (p.elems[m].r == r) phi[m] = p.ract(m, v);
                canon.push_back(std::move(phi));
            }
            std::sort(canon.begin(), canon.end());
            bool inj = std::adjacent_find(canon.begin(), canon.end()) == canon.end();
            std::sort(mods.begin(), mods.end());
            if (!inj || canon != mods)
                return {false, "(" + R.objects[r] + "," + R.objects[r2] +
                                    "): hom count " + std::to_string(homset.size()) +
                                    " vs module-morphism count " +
                                    std::to_string(mods.size())};
        }
    return {true, ""};
}

std::vector<std::vector<int>> chain_tuples(
    const std::vector<const Distributor*>& chain) {
    std::vector<std::vector<int>> out;
    if (chain.empty()) return out;
    std::vector<int> cur;
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == chain.size()) {
            out.push_back(cur);
            return;
        }
        const Distributor& s = *chain[i];
        for (int m = 0; m < s.n_elems(); ++m) {
            if (i > 0) {
                const Distributor& prev = *chain[i - 1];
                if (prev.elems[cur.back()].r != s.elems[m].l) continue;
            }
            cur.push_back(m);
            go(i + 1);
            cur.pop_back();
        }
    };
    go(0);
    return out;
}

namespace {

// A law instance relating two chain tuples: val(b) = post(val(a)) where
// post applies a target action (or is the identity for balance laws).
struct CellConstraint {
    int a = -1, b = -1;
    enum Kind { LeftAct, RightAct, Balance } kind = Balance;
    int mor = -1;  // target-category morphism for LeftAct/RightAct
};

std::vector<CellConstraint> build_constraints(
    const std::vector<const Distributor*>& chain,
    const std::vector<std::vector<int>>& tuples) {
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);
    std::vector<CellConstraint> cs;
    const FinCat& L = *chain.front()->left;
    const FinCat& R = *chain.back()->right;
    for (size_t i = 0; i < tuples.size(); ++i) {
        const auto& t = tuples[i];
        // outer left action
        for (int u = 0; u < L.n_mor(); ++u) {
            if (L.morphisms[u].tgt != chain.front()->elems[t[0]].l) continue;
            auto t2 = t;
            t2[0] = chain.front()->lact(u, t[0]);
            cs.push_back({static_cast<int>(i), index.at(t2), CellConstraint::LeftAct, u});
        }
        // outer right action
        for (int v = 0; v < R.n_mor(); ++v) {
            if (R.morphisms[v].src != chain.back()->elems[t.back()].r) continue;
            auto t2 = t;
            t2.back() = chain.back()->ract(t.back(), v);
            cs.push_back({static_cast<int>(i), index.at(t2), CellConstraint::RightAct, v});
        }
    }
    // balance at interior boundaries: the source tuple is composable
    // everywhere except at boundary k, where it is linked by a morphism w
    for (size_t k = 0; k + 1 < chain.size(); ++k) {
        const FinCat& M = *chain[k]->right;
        for (int w = 0; w < M.n_mor(); ++w) {
            std::vector<int> cur;
            std::function<void(size_t)> go = [&](size_t i) {
                if (i == chain.size()) {
                    auto ta = cur;
                    ta[k] = chain[k]->ract(cur[k], w);
                    auto tb = cur;
                    tb[k + 1] = chain[k + 1]->lact(w, cur[k + 1]);
                    cs.push_back({index.at(ta), index.at(tb), CellConstraint::Balance, -1});
                    return;
                }
                const Distributor& s = *chain[i];
                for (int m = 0; m < s.n_elems(); ++m) {
                    if (i == k + 1) {
                        if (s.elems[m].l != M.morphisms[w].tgt) continue;
                    } else if (i > 0) {
                        if (chain[i - 1]->elems[cur.back()].r != s.elems[m].l) continue;
                    }
                    if (i == k && s.elems[m].r != M.morphisms[w].src) continue;
                    cur.push_back(m);
                    go(i + 1);
                    cur.pop_back();
                }
            };
            go(0);
        }
    }
    return cs;
}

bool constraint_holds(const CellConstraint& c, const Distributor& q,
                      const std::vector<int>& val) {
    if (val[c.a] < 0 || val[c.b] < 0) return true;  // not yet assigned
    switch (c.kind) {
        case CellConstraint::LeftAct:
            return val[c.b] == q.lact(c.mor, val[c.a]);
        case CellConstraint::RightAct:
            return val[c.b] == q.ract(val[c.a], c.mor);
        case CellConstraint::Balance:
            return val[c.a] == val[c.b];
    }
    return true;
}

}  // namespace

LawReport validate_two_cell(const ChainTwoCell& c) {
    LawReport rep;
    const Distributor& q = *c.target;
    if (c.chain.empty()) {
        const FinCat& X = *q.left;
        if (*q.left != *q.right || static_cast<int>(c.comp0.size()) != X.n_ob()) {
            rep.fail("malformed:two-cell", "nullary cell shape");
            return rep;
        }
        for (int x = 0; x < X.n_ob(); ++x) {
            int e = c.comp0[x];
            if (e < 0 || e >= q.n_elems() || q.elems[e].l != x || q.elems[e].r != x) {
                rep.fail("malformed:two-cell-component", X.objects[x]);
                return rep;
            }
        }
        for (int u = 0; u < X.n_mor(); ++u) {
            int s = X.morphisms[u].src, t = X.morphisms[u].tgt;
            if (q.lact(u, c.comp0[t]) != q.ract(c.comp0[s], u))
                rep.fail("two-cell-naturality", X.morphisms[u].name);
        }
        return rep;
    }
    auto tuples = chain_tuples(c.chain);
    std::vector<int> val(tuples.size(), -1);
    for (size_t i = 0; i < tuples.size(); ++i) {
        auto it = c.table.find(tuples[i]);
        if (it == c.table.end()) {
            rep.fail("malformed:two-cell-totality", "missing tuple");
            return rep;
        }
        int l0 = c.chain.front()->elems[tuples[i][0]].l;
        int rn = c.chain.back()->elems[tuples[i].back()].r;
        if (it->second < 0 || it->second >= q.n_elems() ||
            q.elems[it->second].l != l0 || q.elems[it->second].r != rn) {
            rep.fail("malformed:two-cell-image", "tuple " + std::to_string(i));
            return rep;
        }
        val[i] = it->second;
    }
    for (const auto& con : build_constraints(c.chain, tuples))
        if (!constraint_holds(con, q, val))
            rep.fail("two-cell-law", "constraint between tuples " +
                                         std::to_string(con.a) + " and " +
                                         std::to_string(con.b));
    return rep;
}

std::vector<ChainTwoCell> enumerate_two_cells(
    const std::vector<const Distributor*>& chain, const Distributor& target,
    long budget) {
    std::vector<ChainTwoCell> out;
    if (chain.empty()) {
        const FinCat& X = *target.left;
        std::vector<int> comp(X.n_ob(), -1);
        std::function<void(int)> go = [&](int x) {
            if (x == X.n_ob()) {
                ChainTwoCell c;
                c.target = &target;
                c.comp0 = comp;
                out.push_back(std::move(c));
                if (static_cast<long>(out.size()) > budget)
                    throw CapacityError("two-cell enumeration exceeded budget");
                return;
            }
            for (int e : target.het[x][x]) {
                comp[x] = e;
                bool ok = true;
                for (int u = 0; u < X.n_mor() && ok; ++u) {
                    int s = X.morphisms[u].src, t = X.morphisms[u].tgt;
                    if (comp[s] < 0 || comp[t] < 0) continue;
                    if (target.lact(u, comp[t]) != target.ract(comp[s], u)) ok = false;
                }
                if (ok) go(x + 1);
                comp[x] = -1;
            }
        };
        go(0);
        return out;
    }

    auto tuples = chain_tuples(chain);
    auto constraints = build_constraints(chain, tuples);
    // constraints touching tuple index i, for incremental checking
    std::vector<std::vector<int>> touching(tuples.size());
    for (size_t ci = 0; ci < constraints.size(); ++ci) {
        touching[constraints[ci].a].push_back(static_cast<int>(ci));
        if (constraints[ci].b != constraints[ci].a)
            touching[constraints[ci].b].push_back(static_cast<int>(ci));
    }
    std::vector<int> val(tuples.size(), -1);
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == tuples.size()) {
            ChainTwoCell c;
            c.chain = chain;
            c.target = &target;
            for (size_t k = 0; k < tuples.size(); ++k) c.table[tuples[k]] = val[k];
            out.push_back(std::move(c));
            if (static_cast<long>(out.size()) > budget)
                throw CapacityError("two-cell enumeration exceeded budget");
            return;
        }
        int l0 = chain.front()->elems[tuples[i][0]].l;
        int rn = chain.back()->elems[tuples[i].back()].r;
        for (int cand : target.het[l0][rn]) {
            val[i] = cand;
            bool ok = true;
            for (int ci : touching[i])
                if (!constraint_holds(constraints[ci], target, val)) {
                    ok = false;
                    break;
                }
            if (ok) go(i + 1);
            val[i] = -1;
        }
    };
    go(0);
    return out;
}

namespace {

// Push a 2-cell's values to morphism ids of a downstream category via a
// functor applied to the target's parent morphisms.
std::vector<int> push_values(const ChainTwoCell& c, const Functor& f) {
    const Distributor& q = *c.target;
    std::vector<int> vals;
    if (c.chain.empty()) {
        for (int e : c.comp0) vals.push_back(f.mor[q.parent[e]]);
    } else {
        for (const auto& [tuple, v] : c.table) vals.push_back(f.mor[q.parent[v]]);
    }
    return vals;
}

}  // namespace

TwoCellPropertyReport pullback_two_cell_property(
    const PullbackResult& pb, const Functor& f, const Functor& g,
    const std::vector<std::pair<Functor, Functor>>& cones,
    const std::vector<std::vector<const Distributor*>>& chains) {
    Distributor hom_a = hom_distributor(f.src);
    Distributor hom_b = hom_distributor(g.src);
    Distributor hom_p = hom_distributor(pb.apex);

    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = 0; j < cones.size(); ++j) {
            const auto& [a1, b1] = cones[i];
            const auto& [a2, b2] = cones[j];
            if (*a1.src != *a2.src) continue;  // cones over different domains
            Functor m1 = pullback_mediate(pb, a1, b1);
            Functor m2 = pullback_mediate(pb, a2, b2);
            Distributor qa = restrict_distributor(hom_a, a1, a2);
            Distributor qb = restrict_distributor(hom_b, b1, b2);
            Distributor qp = restrict_distributor(hom_p, m1, m2);
            for (const auto& chain : chains) {
                if (!chain.empty() && *chain.front()->left != *a1.src) continue;
                auto cells_a = enumerate_two_cells(chain, qa);
                auto cells_b = enumerate_two_cells(chain, qb);
                auto cells_p = enumerate_two_cells(chain, qp);
                for (const auto& ca : cells_a) {
                    auto down_a = push_values(ca, f);
                    for (const auto& cb : cells_b) {
                        if (push_values(cb, g) != down_a) continue;
                        int count = 0;
                        auto up_a = push_values(ca, identity_functor(f.src));
                        auto up_b = push_values(cb, identity_functor(g.src));
                        for (const auto& cp : cells_p) {
                            if (push_values(cp, pb.proj1) == up_a &&
                                push_values(cp, pb.proj2) == up_b)
                                ++count;
                        }
                        if (count != 1)
                            return {false,
                                    "cone pair (" + std::to_string(i) + "," +
                                        std::to_string(j) + "): mediating 2-cell count " +
                                        std::to_string(count)};
                    }
                }
            }
        }
    return {true, ""};
}

}  // namespace rml
