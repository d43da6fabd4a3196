#include "rml/corpus.hpp"

#include <random>

#include "rml/fincat.hpp"
#include "rml/nervepullback.hpp"

namespace rml {

namespace {

// A group-enriched preorder: hom(x, y) = Z/m when x <= y, empty otherwise,
// with composition by addition mod m. Morphism g of grade k from x to y is
// named "f<x>_<y>_<k>"; identities are the grade-0 endomorphisms.
CatPtr group_preorder_cat(const std::vector<char>& leq, int n, int m,
                          const std::string& prefix) {
    CatBuilder b;
    for (int x = 0; x < n; ++x) b.add_object(prefix + std::to_string(x));
    std::vector<std::vector<std::vector<int>>> ids(
        n, std::vector<std::vector<int>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!leq[static_cast<size_t>(x) * n + y]) continue;
            for (int k = 0; k < m; ++k)
                ids[x][y].push_back(b.add_morphism(
                    "f" + std::to_string(x) + "_" + std::to_string(y) + "_" +
                        std::to_string(k),
                    x, y));
        }
    for (int x = 0; x < n; ++x) b.set_identity(x, ids[x][x][0]);
    b.finish_morphisms();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (ids[x][y].empty() || ids[y][z].empty()) continue;
                for (int k1 = 0; k1 < m; ++k1)
                    for (int k2 = 0; k2 < m; ++k2)
                        b.set_compose(ids[x][y][k1], ids[y][z][k2],
                                      ids[x][z][(k1 + k2) % m]);
            }
    return b.build();
}

std::vector<char> random_preorder(std::mt19937_64& rng, int n) {
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            leq[static_cast<size_t>(x) * n + y] = x == y || rng() % 5 == 0;
    for (int k = 0; k < n; ++k)  // transitive closure
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (leq[static_cast<size_t>(x) * n + k] &&
                    leq[static_cast<size_t>(k) * n + y])
                    leq[static_cast<size_t>(x) * n + y] = 1;
    return leq;
}

}  // namespace

std::vector<CorpusInstance> generate_corpus(const CorpusSpec& spec) {
    Caps caps;
    if (spec.count <= 0) throw InputError("corpus count must be positive");
    if (spec.max_objects <= 0 || spec.max_hom <= 0)
        throw InputError("corpus caps must be positive");
    if (spec.max_objects > caps.max_objects || spec.max_hom > caps.max_het)
        throw InputError("corpus caps exceed module capacity limits");

    std::mt19937_64 rng(spec.seed);
    std::vector<CorpusInstance> out;
    long attempts = 0;
    const long budget = 5000L * spec.count;
    while (static_cast<int>(out.size()) < spec.count) {
        if (++attempts > budget)
            throw CapacityError("corpus exhaustion: produced " +
                                std::to_string(out.size()) + " of " +
                                std::to_string(spec.count) + " instances");
        int n = 1 + static_cast<int>(rng() % spec.max_objects);
        int m = 1 + static_cast<int>(rng() % spec.max_hom);
        auto leq = random_preorder(rng, n);
        CatPtr e = group_preorder_cat(leq, n, m, "e");

        // root: a random nonempty full subcategory, included
        std::vector<int> subset;
        std::uint64_t pick = rng();
        for (int x = 0; x < n; ++x)
            if ((pick >> x) & 1) subset.push_back(x);
        if (subset.empty()) subset.push_back(static_cast<int>(rng() % n));
        int na = static_cast<int>(subset.size());
        std::vector<char> aleq(static_cast<size_t>(na) * na);
        for (int x = 0; x < na; ++x)
            for (int y = 0; y < na; ++y)
                aleq[static_cast<size_t>(x) * na + y] =
                    leq[static_cast<size_t>(subset[x]) * n + subset[y]];
        CatPtr a = group_preorder_cat(aleq, na, m, "a");

        RelativeMonad t;
        t.j.src = a;
        t.j.dst = e;
        t.j.ob.resize(na);
        for (int x = 0; x < na; ++x) t.j.ob[x] = subset[x];
        t.j.mor.resize(a->n_mor());
        bool ok = true;
        for (int f = 0; f < a->n_mor(); ++f) {
            int x = a->morphisms[f].src, y = a->morphisms[f].tgt;
            // grade k is the trailing suffix of the generated name
            int k = std::stoi(
                a->morphisms[f].name.substr(a->morphisms[f].name.rfind('_') + 1));
            auto block = e->hom(t.j.ob[x], t.j.ob[y]);
            if (k >= static_cast<int>(block.size())) ok = false;
            if (ok) t.j.mor[f] = block[k];
        }
        if (!ok) continue;

        // carrier objects above the root images, then a sampled unit
        t.t_ob.resize(na);
        t.eta.resize(na);
        for (int x = 0; x < na && ok; ++x) {
            std::vector<int> above;
            for (int y = 0; y < n; ++y)
                if (leq[static_cast<size_t>(t.j.ob[x]) * n + y]) above.push_back(y);
            t.t_ob[x] = above[rng() % above.size()];
            auto block = e->hom(t.j.ob[x], t.t_ob[x]);
            t.eta[x] = block[rng() % block.size()];
        }
        if (!ok) continue;

        // the extension table is forced in a group-enriched preorder:
        // eta_x ; g = f has at most one solution g
        for (int x = 0; x < na && ok; ++x)
            for (int y = 0; y < na && ok; ++y)
                for (int f : e->hom(t.j.ob[x], t.t_ob[y])) {
                    int sol = -1;
                    for (int g : e->hom(t.t_ob[x], t.t_ob[y]))
                        if (e->then(t.eta[x], g) == f) sol = g;
                    if (sol < 0) {
                        ok = false;
                        break;
                    }
                    t.dagger[{x, y, f}] = sol;
                }
        if (!ok) continue;
        if (!check_relative_monad(t).laws.pass()) continue;
        if (spec.density_required && !is_dense(t.j).ok) continue;

        CorpusInstance inst;
        std::string num = std::to_string(out.size());
        inst.id = "inst-" + std::string(num.size() < 4 ? 4 - num.size() : 0, '0') + num;
        inst.monad = std::move(t);
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<VCorpusInstance> generate_v_corpus(const QuantalePtr& q,
                                               int max_points, bool dense_only) {
    std::vector<VCorpusInstance> out;
    std::vector<char> bottom_mask(q->n(), 0);
    int bottom = q->join(bottom_mask);
    if (bottom < 0) throw InputError("base quantale has no bottom element");
    for (int n = 1; n <= max_points; ++n) {
        auto bases = enumerate_preorders(n);
        for (size_t bi = 0; bi < bases.size(); ++bi) {
            // embed the preorder into q at unit / bottom
            VCat ev;
            ev.q = q;
            ev.objects = bases[bi]->objects;
            ev.hom_table.resize(static_cast<size_t>(n) * n);
            for (size_t i = 0; i < ev.hom_table.size(); ++i)
                ev.hom_table[i] = bases[bi]->hom_table[i] ? q->unit : bottom;
            auto e = std::make_shared<const VCat>(std::move(ev));

            for (int mask = 1; mask < (1 << n); ++mask) {
                std::vector<int> subset;
                for (int x = 0; x < n; ++x)
                    if ((mask >> x) & 1) subset.push_back(x);
                int na = static_cast<int>(subset.size());
                VCat av;
                av.q = q;
                av.hom_table.resize(static_cast<size_t>(na) * na);
                for (int x = 0; x < na; ++x) {
                    av.objects.push_back(e->objects[subset[x]]);
                    for (int y = 0; y < na; ++y)
                        av.hom_table[static_cast<size_t>(x) * na + y] =
                            e->hom(subset[x], subset[y]);
                }
                VFunctor j;
                j.src = std::make_shared<const VCat>(std::move(av));
                j.dst = e;
                j.ob = subset;
                if (dense_only && !v_dense(j).ok) continue;

                // all carrier maps satisfying the two witness families
                std::vector<int> t_ob(na, 0);
                while (true) {
                    VRelMonad t;
                    t.j = j;
                    t.t_ob = t_ob;
                    if (validate_vrel_monad(t).pass()) {
                        VCorpusInstance inst;
                        inst.id = "v-" + std::to_string(n) + "-" +
                                  std::to_string(bi) + "-" + std::to_string(mask);
                        for (int v : t_ob) inst.id += "-" + std::to_string(v);
                        inst.monad = std::move(t);
                        out.push_back(std::move(inst));
                    }
                    int i = na - 1;
                    while (i >= 0 && t_ob[i] == e->n_ob() - 1) t_ob[i--] = 0;
                    if (i < 0) break;
                    ++t_ob[i];
                }
            }
        }
    }
    return out;
}

}  // namespace rml
