#include "rml/quantale.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace rml {

namespace {

std::string trip(const Quantale& q, int a, int b, int c) {
    return "(" + q.elements[a] + ", " + q.elements[b] + ", " + q.elements[c] + ")";
}

// Number of candidate tables |base|^exp, throwing past the enumeration cap.
long checked_pow(long base, long exp, const char* what) {
    long r = 1;
    for (long i = 0; i < exp; ++i) {
        r *= base;
        if (r > 65536) throw CapacityError(std::string(what) + " enumeration too large");
    }
    return r;
}

}  // namespace

int Quantale::join(const std::vector<char>& mask) const {
    for (int u = 0; u < n(); ++u) {
        bool upper = true;
        for (int a = 0; a < n(); ++a)
            if (mask[a] && !leq(a, u)) upper = false;
        if (!upper) continue;
        bool least = true;
        for (int v = 0; v < n(); ++v) {
            bool upper2 = true;
            for (int a = 0; a < n(); ++a)
                if (mask[a] && !leq(a, v)) upper2 = false;
            if (upper2 && !leq(u, v)) least = false;
        }
        if (least) return u;
    }
    return -1;
}

int Quantale::meet(const std::vector<char>& mask) const {
    for (int u = 0; u < n(); ++u) {
        bool lower = true;
        for (int a = 0; a < n(); ++a)
            if (mask[a] && !leq(u, a)) lower = false;
        if (!lower) continue;
        bool greatest = true;
        for (int v = 0; v < n(); ++v) {
            bool lower2 = true;
            for (int a = 0; a < n(); ++a)
                if (mask[a] && !leq(v, a)) lower2 = false;
            if (lower2 && !leq(v, u)) greatest = false;
        }
        if (greatest) return u;
    }
    return -1;
}

void derive_residuals(Quantale& q) {
    int n = q.n();
    q.lres_table.assign(static_cast<size_t>(n) * n, -1);
    q.rres_table.assign(static_cast<size_t>(n) * n, -1);
    std::vector<char> mask(n);
    for (int a = 0; a < n; ++a)
        for (int c = 0; c < n; ++c) {
            std::fill(mask.begin(), mask.end(), 0);
            for (int b = 0; b < n; ++b)
                if (q.leq(q.tensor(a, b), c)) mask[b] = 1;
            q.rres_table[static_cast<size_t>(a) * n + c] = q.join(mask);
        }
    for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
            std::fill(mask.begin(), mask.end(), 0);
            for (int a = 0; a < n; ++a)
                if (q.leq(q.tensor(a, b), c)) mask[a] = 1;
            q.lres_table[static_cast<size_t>(b) * n + c] = q.join(mask);
        }
}

LawReport validate_quantale(const Quantale& q) {
    LawReport r;
    size_t n = q.elements.size();
    if (n == 0) {
        r.fail("malformed:empty", "a quantale needs at least one element");
        return r;
    }
    if (q.leq_table.size() != n * n) r.fail("malformed:leq-shape", "order table size");
    if (q.tensor_table.size() != n * n) r.fail("malformed:tensor-shape", "tensor table size");
    if (q.unit < 0 || q.unit >= static_cast<int>(n))
        r.fail("malformed:unit-range", "unit element id");
    if (q.lres_table.size() != n * n || q.rres_table.size() != n * n)
        r.fail("malformed:residual-shape", "residual table size");
    for (int t : q.tensor_table)
        if (t < 0 || t >= static_cast<int>(n)) {
            r.fail("malformed:tensor-range", "tensor entry out of range");
            break;
        }
    if (!r.pass()) return r;

    int nn = q.n();
    for (int a = 0; a < nn; ++a)
        if (!q.leq(a, a)) r.fail("order-reflexivity", q.elements[a]);
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            if (a != b && q.leq(a, b) && q.leq(b, a))
                r.fail("order-antisymmetry", q.elements[a] + " ~ " + q.elements[b]);
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            for (int c = 0; c < nn; ++c)
                if (q.leq(a, b) && q.leq(b, c) && !q.leq(a, c))
                    r.fail("order-transitivity", trip(q, a, b, c));
    if (!r.pass()) return r;

    // a finite lattice with bounds is complete; check pairs and bounds
    std::vector<char> mask(nn, 0);
    if (q.join(mask) < 0) r.fail("lattice-joins", "no bottom element");
    if (q.meet(mask) < 0) r.fail("lattice-meets", "no top element");
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b) {
            std::fill(mask.begin(), mask.end(), 0);
            mask[a] = mask[b] = 1;
            if (q.join(mask) < 0)
                r.fail("lattice-joins", q.elements[a] + " v " + q.elements[b]);
            if (q.meet(mask) < 0)
                r.fail("lattice-meets", q.elements[a] + " ^ " + q.elements[b]);
        }

    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            for (int c = 0; c < nn; ++c)
                if (q.tensor(q.tensor(a, b), c) != q.tensor(a, q.tensor(b, c)))
                    r.fail("tensor-associativity", trip(q, a, b, c));
    for (int a = 0; a < nn; ++a) {
        if (q.tensor(q.unit, a) != a) r.fail("tensor-unit-left", q.elements[a]);
        if (q.tensor(a, q.unit) != a) r.fail("tensor-unit-right", q.elements[a]);
    }
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            for (int c = 0; c < nn; ++c) {
                if (q.leq(a, b) && !q.leq(q.tensor(a, c), q.tensor(b, c)))
                    r.fail("tensor-monotone-left", trip(q, a, b, c));
                if (q.leq(a, b) && !q.leq(q.tensor(c, a), q.tensor(c, b)))
                    r.fail("tensor-monotone-right", trip(q, a, b, c));
            }

    Quantale derived = q;
    derive_residuals(derived);
    for (int a = 0; a < nn && r.pass(); ++a)
        for (int c = 0; c < nn; ++c)
            if (derived.rres(a, c) != q.rres(a, c) || derived.rres(a, c) < 0)
                r.fail("residuation-right", "(" + q.elements[a] + ", " + q.elements[c] + ")");
    for (int b = 0; b < nn && r.pass(); ++b)
        for (int c = 0; c < nn; ++c)
            if (derived.lres(b, c) != q.lres(b, c) || derived.lres(b, c) < 0)
                r.fail("residuation-left", "(" + q.elements[b] + ", " + q.elements[c] + ")");
    // the adjunction itself, elementwise
    for (int a = 0; a < nn && r.pass(); ++a)
        for (int b = 0; b < nn; ++b)
            for (int c = 0; c < nn; ++c) {
                bool tle = q.leq(q.tensor(a, b), c);
                if (tle != q.leq(b, q.rres(a, c)))
                    r.fail("residuation-right", trip(q, a, b, c));
                if (tle != q.leq(a, q.lres(b, c)))
                    r.fail("residuation-left", trip(q, a, b, c));
            }
    return r;
}

QuantalePtr chain_quantale(int n) {
    Quantale q;
    for (int i = 0; i < n; ++i) q.elements.push_back(std::to_string(i));
    q.leq_table.assign(static_cast<size_t>(n) * n, 0);
    q.tensor_table.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            q.leq_table[static_cast<size_t>(a) * n + b] = a <= b;
            q.tensor_table[static_cast<size_t>(a) * n + b] = std::min(a, b);
        }
    q.unit = n - 1;
    derive_residuals(q);
    return std::make_shared<const Quantale>(std::move(q));
}

QuantalePtr bool_quantale() { return chain_quantale(2); }

QuantalePtr powerset_quantale(int nbits) {
    int n = 1 << nbits;
    Quantale q;
    for (int m = 0; m < n; ++m) {
        std::string name = "{";
        for (int i = 0; i < nbits; ++i)
            if (m & (1 << i)) name += (name.size() > 1 ? "," : "") + std::to_string(i);
        q.elements.push_back(name + "}");
    }
    q.leq_table.assign(static_cast<size_t>(n) * n, 0);
    q.tensor_table.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            q.leq_table[static_cast<size_t>(a) * n + b] = (a & b) == a;
            q.tensor_table[static_cast<size_t>(a) * n + b] = a & b;
        }
    q.unit = n - 1;
    derive_residuals(q);
    return std::make_shared<const Quantale>(std::move(q));
}

LawReport validate_vcat(const VCat& a) {
    LawReport r;
    if (!a.q) {
        r.fail("malformed:no-quantale", "missing base quantale");
        return r;
    }
    size_t n = a.objects.size();
    if (a.hom_table.size() != n * n) {
        r.fail("malformed:hom-shape", "hom table size");
        return r;
    }
    for (int h : a.hom_table)
        if (h < 0 || h >= a.q->n()) {
            r.fail("malformed:hom-range", "hom entry out of range");
            return r;
        }
    const Quantale& q = *a.q;
    for (int x = 0; x < a.n_ob(); ++x)
        if (!q.leq(q.unit, a.hom(x, x))) r.fail("v-identity", a.objects[x]);
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            for (int z = 0; z < a.n_ob(); ++z)
                if (!q.leq(q.tensor(a.hom(x, y), a.hom(y, z)), a.hom(x, z)))
                    r.fail("v-composition", "(" + a.objects[x] + ", " +
                                                a.objects[y] + ", " + a.objects[z] + ")");
    return r;
}

LawReport validate_vfunctor(const VFunctor& f) {
    LawReport r;
    if (!f.src || !f.dst) {
        r.fail("malformed:endpoints", "missing source or target");
        return r;
    }
    if (!(*f.src->q == *f.dst->q)) {
        r.fail("malformed:base-mismatch", "different base quantales");
        return r;
    }
    if (static_cast<int>(f.ob.size()) != f.src->n_ob()) {
        r.fail("malformed:ob-shape", "object map size");
        return r;
    }
    for (int o : f.ob)
        if (o < 0 || o >= f.dst->n_ob()) {
            r.fail("malformed:ob-range", "object map out of range");
            return r;
        }
    const Quantale& q = *f.src->q;
    for (int x = 0; x < f.src->n_ob(); ++x)
        for (int y = 0; y < f.src->n_ob(); ++y)
            if (!q.leq(f.src->hom(x, y), f.dst->hom(f.ob[x], f.ob[y])))
                r.fail("v-functoriality",
                       "(" + f.src->objects[x] + ", " + f.src->objects[y] + ")");
    return r;
}

VCatPtr preorder_vcat(const std::vector<std::string>& objects,
                      const std::vector<char>& leq) {
    VCat a;
    a.q = bool_quantale();
    a.objects = objects;
    a.hom_table.assign(leq.begin(), leq.end());
    return std::make_shared<const VCat>(std::move(a));
}

std::vector<VCatPtr> enumerate_preorders(int n) {
    int bits = n * n - n;  // off-diagonal entries
    std::vector<VCatPtr> out;
    std::vector<std::vector<char>> seen;
    std::vector<int> perm(n);
    std::vector<char> rel(static_cast<size_t>(n) * n);
    for (long code = 0; code < (1L << bits); ++code) {
        long c = code;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) {
                    rel[static_cast<size_t>(i) * n + j] = 1;
                } else {
                    rel[static_cast<size_t>(i) * n + j] = c & 1;
                    c >>= 1;
                }
            }
        bool trans = true;
        for (int i = 0; i < n && trans; ++i)
            for (int j = 0; j < n && trans; ++j)
                for (int k = 0; k < n && trans; ++k)
                    if (rel[static_cast<size_t>(i) * n + j] &&
                        rel[static_cast<size_t>(j) * n + k] &&
                        !rel[static_cast<size_t>(i) * n + k])
                        trans = false;
        if (!trans) continue;
        // canonical form: the least relabelling of the matrix
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<char> canon;
        std::vector<char> relabeled(static_cast<size_t>(n) * n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    relabeled[static_cast<size_t>(i) * n + j] =
                        rel[static_cast<size_t>(perm[i]) * n + perm[j]];
            if (canon.empty() || relabeled < canon) canon = relabeled;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (std::find(seen.begin(), seen.end(), canon) != seen.end()) continue;
        seen.push_back(canon);
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("a" + std::to_string(i));
        out.push_back(preorder_vcat(names, canon));
    }
    return out;
}

namespace {

std::string presheaf_name(const Quantale& q, const std::vector<int>& v) {
    std::string s = "<";
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + q.elements[v[i]];
    return s + ">";
}

bool down_closed(const VCat& a, const std::vector<int>& p) {
    const Quantale& q = *a.q;
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            if (!q.leq(q.tensor(a.hom(x, y), p[y]), p[x])) return false;
    return true;
}

int hom_of_maps(const Quantale& q, const std::vector<int>& p,
                const std::vector<int>& r) {
    std::vector<char> mask(q.n(), 0);
    if (p.empty()) return q.meet(mask);  // empty base: the top element
    int acc = -1;
    for (size_t i = 0; i < p.size(); ++i) {
        int piece = q.rres(p[i], r[i]);
        if (acc < 0) {
            acc = piece;
        } else {
            std::fill(mask.begin(), mask.end(), 0);
            mask[acc] = mask[piece] = 1;
            acc = q.meet(mask);
        }
    }
    return acc;
}

}  // namespace

PresheafObjectResult v_presheaf_object(const VCatPtr& a, const Caps& caps) {
    (void)caps;
    const Quantale& q = *a->q;
    int nob = a->n_ob();
    checked_pow(q.n(), nob, "presheaf");
    PresheafObjectResult out;
    std::vector<int> v(nob, 0);
    // odometer over value maps, lexicographic in element ids
    while (true) {
        if (down_closed(*a, v)) out.presheaves.push_back(v);
        int i = nob - 1;
        while (i >= 0 && v[i] == q.n() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    VCat pa;
    pa.q = a->q;
    int np = static_cast<int>(out.presheaves.size());
    for (const auto& p : out.presheaves) pa.objects.push_back(presheaf_name(q, p));
    pa.hom_table.assign(static_cast<size_t>(np) * np, -1);
    for (int p = 0; p < np; ++p)
        for (int r = 0; r < np; ++r)
            pa.hom_table[static_cast<size_t>(p) * np + r] =
                hom_of_maps(q, out.presheaves[p], out.presheaves[r]);
    out.pa = std::make_shared<const VCat>(std::move(pa));
    out.certificate.merge(validate_vcat(*out.pa));

    out.yo.assign(nob, -1);
    for (int x = 0; x < nob; ++x) {
        std::vector<int> rep(nob);
        for (int y = 0; y < nob; ++y) rep[y] = a->hom(y, x);
        for (int p = 0; p < np; ++p)
            if (out.presheaves[p] == rep) out.yo[x] = p;
        if (out.yo[x] < 0)
            out.certificate.fail("yoneda", "representable of " + a->objects[x] +
                                               " is not down-closed");
    }
    if (!out.certificate.pass()) return out;

    // Yoneda: P A(yo x, p) = p(x)
    for (int x = 0; x < nob; ++x)
        for (int p = 0; p < np; ++p)
            if (out.pa->hom(out.yo[x], p) != out.presheaves[p][x])
                out.certificate.fail("yoneda", "(" + a->objects[x] + ", " +
                                                   out.pa->objects[p] + ")");
    // right-lift law: hom(p, r) is the largest h with p(x) (x) h <= r(x)
    for (int p = 0; p < np; ++p)
        for (int r = 0; r < np; ++r) {
            std::vector<char> ok(q.n(), 0);
            for (int h = 0; h < q.n(); ++h) {
                bool good = true;
                for (int x = 0; x < nob; ++x)
                    if (!q.leq(q.tensor(out.presheaves[p][x], h),
                               out.presheaves[r][x]))
                        good = false;
                ok[h] = good;
            }
            if (q.join(ok) != out.pa->hom(p, r))
                out.certificate.fail("right-lift", "(" + out.pa->objects[p] + ", " +
                                                       out.pa->objects[r] + ")");
        }
    // classification against the unit V-category
    VCat unit_vc;
    unit_vc.q = a->q;
    unit_vc.objects = {"*"};
    unit_vc.hom_table = {q.unit};
    auto cls = v_classify(std::make_shared<const VCat>(std::move(unit_vc)), a, out);
    out.certificate.merge(cls.report);
    return out;
}

ClassificationReport v_classify(const VCatPtr& x, const VCatPtr& a,
                                const PresheafObjectResult& pa) {
    const Quantale& q = *a->q;
    int na = a->n_ob(), nx = x->n_ob();
    checked_pow(q.n(), static_cast<long>(na) * nx, "distributor");
    ClassificationReport out;

    // distributors: value maps d(a, x) with both module inequalities
    std::vector<std::vector<int>> dists;
    std::vector<int> d(static_cast<size_t>(na) * nx, 0);
    auto dval = [&](const std::vector<int>& t, int ai, int xi) {
        return t[static_cast<size_t>(ai) * nx + xi];
    };
    while (true) {
        bool ok = true;
        for (int a1 = 0; a1 < na && ok; ++a1)
            for (int a2 = 0; a2 < na && ok; ++a2)
                for (int xi = 0; xi < nx && ok; ++xi)
                    ok = q.leq(q.tensor(a->hom(a1, a2), dval(d, a2, xi)),
                               dval(d, a1, xi));
        for (int ai = 0; ai < na && ok; ++ai)
            for (int x1 = 0; x1 < nx && ok; ++x1)
                for (int x2 = 0; x2 < nx && ok; ++x2)
                    ok = q.leq(q.tensor(dval(d, ai, x1), x->hom(x1, x2)),
                               dval(d, ai, x2));
        if (ok) dists.push_back(d);
        int i = static_cast<int>(d.size()) - 1;
        while (i >= 0 && d[i] == q.n() - 1) d[i--] = 0;
        if (i < 0) break;
        ++d[i];
    }
    out.distributors = static_cast<long>(dists.size());

    // functors X -> P A and their canonical distributors
    std::vector<std::vector<int>> images;
    std::vector<int> f(nx, 0);
    int np = pa.pa->n_ob();
    while (true) {
        bool ok = true;
        for (int x1 = 0; x1 < nx && ok; ++x1)
            for (int x2 = 0; x2 < nx && ok; ++x2)
                ok = q.leq(x->hom(x1, x2), pa.pa->hom(f[x1], f[x2]));
        if (ok) {
            ++out.functors;
            std::vector<int> img(static_cast<size_t>(na) * nx);
            for (int ai = 0; ai < na; ++ai)
                for (int xi = 0; xi < nx; ++xi)
                    img[static_cast<size_t>(ai) * nx + xi] =
                        pa.presheaves[f[xi]][ai];
            images.push_back(img);
        }
        int i = nx - 1;
        while (i >= 0 && f[i] == np - 1) f[i--] = 0;
        if (i < 0) break;
        ++f[i];
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        out.report.fail("classification-bijection", "canonical map not injective");
    std::sort(dists.begin(), dists.end());
    if (images != dists)
        out.report.fail("classification-bijection",
                        "distributors " + std::to_string(out.distributors) +
                            " vs functors " + std::to_string(out.functors));
    return out;
}

VNerveResult v_nerve(const VFunctor& j, const PresheafObjectResult& pa) {
    const VCat& a = *j.src;
    const VCat& e = *j.dst;
    VNerveResult out;
    out.n.src = j.dst;
    out.n.dst = pa.pa;
    out.n.ob.assign(e.n_ob(), -1);
    for (int ei = 0; ei < e.n_ob(); ++ei) {
        std::vector<int> v(a.n_ob());
        for (int x = 0; x < a.n_ob(); ++x) v[x] = e.hom(j.ob[x], ei);
        for (size_t p = 0; p < pa.presheaves.size(); ++p)
            if (pa.presheaves[p] == v) out.n.ob[ei] = static_cast<int>(p);
        if (out.n.ob[ei] < 0)
            out.certificate.fail("nerve-not-presheaf", e.objects[ei]);
    }
    if (!out.certificate.pass()) return out;
    out.certificate.merge(validate_vfunctor(out.n));
    // relative adjunction at the thin level: E(j x, e) = P A(yo x, n e)
    for (int x = 0; x < a.n_ob(); ++x)
        for (int ei = 0; ei < e.n_ob(); ++ei)
            if (e.hom(j.ob[x], ei) != pa.pa->hom(pa.yo[x], out.n.ob[ei]))
                out.certificate.fail("nerve-adjunction",
                                     "(" + a.objects[x] + ", " + e.objects[ei] + ")");
    return out;
}

VDenseReport v_dense(const VFunctor& j) {
    auto pa = v_presheaf_object(j.src);
    auto nerve = v_nerve(j, pa);
    VDenseReport rep;
    if (!pa.certificate.pass() || !nerve.certificate.pass()) {
        rep.ok = false;
        rep.witness = "nerve construction failed";
        return rep;
    }
    const VCat& e = *j.dst;
    for (int e1 = 0; e1 < e.n_ob(); ++e1)
        for (int e2 = 0; e2 < e.n_ob(); ++e2)
            if (e.hom(e1, e2) != pa.pa->hom(nerve.n.ob[e1], nerve.n.ob[e2])) {
                rep.ok = false;
                rep.witness = "(" + e.objects[e1] + ", " + e.objects[e2] + ")";
                return rep;
            }
    return rep;
}

LawReport validate_vrel_monad(const VRelMonad& t) {
    LawReport r = validate_vfunctor(t.j);
    if (!r.pass()) return r;
    const VCat& a = *t.j.src;
    const VCat& e = *t.j.dst;
    const Quantale& q = *a.q;
    if (static_cast<int>(t.t_ob.size()) != a.n_ob()) {
        r.fail("malformed:t-shape", "carrier object map size");
        return r;
    }
    for (int o : t.t_ob)
        if (o < 0 || o >= e.n_ob()) {
            r.fail("malformed:t-range", "carrier object out of range");
            return r;
        }
    for (int x = 0; x < a.n_ob(); ++x)
        if (!q.leq(q.unit, e.hom(t.j.ob[x], t.t_ob[x])))
            r.fail("unit-witness", a.objects[x]);
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            if (!q.leq(e.hom(t.j.ob[x], t.t_ob[y]), e.hom(t.t_ob[x], t.t_ob[y])))
                r.fail("extension-witness", "(" + a.objects[x] + ", " + a.objects[y] + ")");
    return r;
}

LawReport check_v_loose_monad(const VLooseMonad& lm) {
    LawReport r;
    const VCat& a = *lm.base;
    const Quantale& q = *a.q;
    if (lm.carrier.size() != static_cast<size_t>(a.n_ob()) * a.n_ob()) {
        r.fail("malformed:carrier-shape", "carrier table size");
        return r;
    }
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            if (!q.leq(a.hom(x, y), lm.c(x, y)))
                r.fail("loose-unit", "(" + a.objects[x] + ", " + a.objects[y] + ")");
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            for (int z = 0; z < a.n_ob(); ++z)
                if (!q.leq(q.tensor(lm.c(x, y), lm.c(y, z)), lm.c(x, z)))
                    r.fail("loose-multiplication",
                           "(" + a.objects[x] + ", " + a.objects[y] + ", " +
                               a.objects[z] + ")");
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            for (int z = 0; z < a.n_ob(); ++z) {
                if (!q.leq(q.tensor(a.hom(x, y), lm.c(y, z)), lm.c(x, z)))
                    r.fail("loose-left-action",
                           "(" + a.objects[x] + ", " + a.objects[y] + ", " +
                               a.objects[z] + ")");
                if (!q.leq(q.tensor(lm.c(x, y), a.hom(y, z)), lm.c(x, z)))
                    r.fail("loose-right-action",
                           "(" + a.objects[x] + ", " + a.objects[y] + ", " +
                               a.objects[z] + ")");
            }
    return r;
}

VNerveTheoremReport v_check_nerve_theorem(const VRelMonad& t, const Caps& caps) {
    VNerveTheoremReport rep;
    rep.consistency.merge(validate_vrel_monad(t));
    rep.monad_ok = rep.consistency.pass();
    if (!rep.monad_ok) return rep;

    const VCat& a = *t.j.src;
    const VCat& e = *t.j.dst;
    const Quantale& q = *a.q;

    // Kleisli V-category: objects of A, hom(x, y) = E(j x, t y)
    VCat klv;
    klv.q = a.q;
    klv.objects = a.objects;
    klv.hom_table.assign(static_cast<size_t>(a.n_ob()) * a.n_ob(), -1);
    for (int x = 0; x < a.n_ob(); ++x)
        for (int y = 0; y < a.n_ob(); ++y)
            klv.hom_table[static_cast<size_t>(x) * a.n_ob() + y] =
                e.hom(t.j.ob[x], t.t_ob[y]);
    auto kl = std::make_shared<const VCat>(std::move(klv));
    rep.consistency.merge(validate_vcat(*kl));

    // algebra objects: E(j x, e) <= E(t x, e) for all x
    std::vector<int> alg_obs;
    for (int ei = 0; ei < e.n_ob(); ++ei) {
        bool ok = true;
        for (int x = 0; x < a.n_ob(); ++x)
            if (!q.leq(e.hom(t.j.ob[x], ei), e.hom(t.t_ob[x], ei))) ok = false;
        if (ok) alg_obs.push_back(ei);
    }
    VCat algv;
    algv.q = a.q;
    for (int ei : alg_obs) algv.objects.push_back(e.objects[ei]);
    int nal = static_cast<int>(alg_obs.size());
    algv.hom_table.assign(static_cast<size_t>(nal) * nal, -1);
    for (int i = 0; i < nal; ++i)
        for (int k = 0; k < nal; ++k)
            algv.hom_table[static_cast<size_t>(i) * nal + k] =
                e.hom(alg_obs[i], alg_obs[k]);
    rep.alg = std::make_shared<const VCat>(std::move(algv));
    rep.consistency.merge(validate_vcat(*rep.alg));

    auto pa = v_presheaf_object(t.j.src, caps);
    auto pkl = v_presheaf_object(kl, caps);
    rep.consistency.merge(pa.certificate);
    rep.consistency.merge(pkl.certificate);
    auto nerve = v_nerve(t.j, pa);
    rep.consistency.merge(nerve.certificate);

    // restriction along the identity-on-objects k : A -> Kl keeps value maps
    std::vector<int> kstar(pkl.presheaves.size(), -1);
    for (size_t p = 0; p < pkl.presheaves.size(); ++p) {
        for (size_t r = 0; r < pa.presheaves.size(); ++r)
            if (pa.presheaves[r] == pkl.presheaves[p]) kstar[p] = static_cast<int>(r);
        if (kstar[p] < 0)
            rep.consistency.fail("restriction-functor", pkl.pa->objects[p]);
    }
    if (!rep.consistency.pass()) return rep;

    // pullback of the nerve against the restriction: pairs with equal images,
    // hom the meet of the two legs' homs
    std::vector<std::pair<int, int>> apex_obs;  // (E object, P Kl object)
    for (int ei = 0; ei < e.n_ob(); ++ei)
        for (size_t p = 0; p < pkl.presheaves.size(); ++p)
            if (nerve.n.ob[ei] == kstar[p])
                apex_obs.push_back({ei, static_cast<int>(p)});
    VCat apexv;
    apexv.q = a.q;
    for (auto [ei, p] : apex_obs)
        apexv.objects.push_back("(" + e.objects[ei] + ", " + pkl.pa->objects[p] + ")");
    int nap = static_cast<int>(apex_obs.size());
    apexv.hom_table.assign(static_cast<size_t>(nap) * nap, -1);
    std::vector<char> mask(q.n(), 0);
    for (int i = 0; i < nap; ++i)
        for (int k = 0; k < nap; ++k) {
            std::fill(mask.begin(), mask.end(), 0);
            mask[e.hom(apex_obs[i].first, apex_obs[k].first)] = 1;
            mask[pkl.pa->hom(apex_obs[i].second, apex_obs[k].second)] = 1;
            apexv.hom_table[static_cast<size_t>(i) * nap + k] = q.meet(mask);
        }
    rep.apex = std::make_shared<const VCat>(std::move(apexv));
    rep.consistency.merge(validate_vcat(*rep.apex));

    auto dense = v_dense(t.j);
    rep.dense = dense.ok;
    rep.dense_witness = dense.witness;

    // comparison Alg(T) -> apex: e |-> (e, its nerve as a Kl presheaf)
    std::vector<int> cmp(nal, -1);
    bool cmp_ok = true;
    for (int i = 0; i < nal; ++i) {
        std::vector<int> v(a.n_ob());
        for (int x = 0; x < a.n_ob(); ++x) v[x] = e.hom(t.j.ob[x], alg_obs[i]);
        int p = -1;
        for (size_t r = 0; r < pkl.presheaves.size(); ++r)
            if (pkl.presheaves[r] == v) p = static_cast<int>(r);
        if (p < 0) {
            cmp_ok = false;
            continue;
        }
        for (int k = 0; k < nap; ++k)
            if (apex_obs[k] == std::make_pair(alg_obs[i], p)) cmp[i] = k;
        if (cmp[i] < 0) cmp_ok = false;
    }
    // isomorphism: bijective on objects and hom-equal
    if (cmp_ok) {
        std::vector<int> sorted = cmp;
        std::sort(sorted.begin(), sorted.end());
        cmp_ok = nal == nap &&
                 std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (cmp_ok)
        for (int i = 0; i < nal; ++i)
            for (int k = 0; k < nal; ++k)
                if (rep.alg->hom(i, k) != rep.apex->hom(cmp[i], cmp[k])) cmp_ok = false;
    rep.comparison_iso = cmp_ok;
    if (rep.dense && !rep.comparison_iso)
        rep.consistency.fail("enriched-nerve-theorem",
                             "dense root but comparison not an isomorphism");

    // direct semanticiser apex: objects e whose nerve is Kl-down-closed,
    // homs the meet of E(e, e') with the module-map residual formula
    std::vector<int> sem_obs;
    for (int ei = 0; ei < e.n_ob(); ++ei) {
        bool ok = true;
        for (int x = 0; x < a.n_ob() && ok; ++x)
            for (int y = 0; y < a.n_ob() && ok; ++y)
                ok = q.leq(q.tensor(e.hom(t.j.ob[x], t.t_ob[y]),
                                    e.hom(t.j.ob[y], ei)),
                           e.hom(t.j.ob[x], ei));
        if (ok) sem_obs.push_back(ei);
    }
    bool sem_ok = static_cast<int>(sem_obs.size()) == nap;
    if (sem_ok)
        for (int i = 0; i < nap && sem_ok; ++i) sem_ok = apex_obs[i].first == sem_obs[i];
    if (sem_ok)
        for (int i = 0; i < nap && sem_ok; ++i)
            for (int k = 0; k < nap && sem_ok; ++k) {
                std::vector<int> pv(a.n_ob()), rv(a.n_ob());
                for (int x = 0; x < a.n_ob(); ++x) {
                    pv[x] = e.hom(t.j.ob[x], sem_obs[i]);
                    rv[x] = e.hom(t.j.ob[x], sem_obs[k]);
                }
                std::fill(mask.begin(), mask.end(), 0);
                mask[e.hom(sem_obs[i], sem_obs[k])] = 1;
                mask[hom_of_maps(q, pv, rv)] = 1;
                sem_ok = q.meet(mask) == rep.apex->hom(i, k);
            }
    rep.semanticiser_match = sem_ok;
    if (!sem_ok)
        rep.consistency.fail("semanticiser-apex", "direct apex differs from pullback");
    return rep;
}

YoBijectionReport v_yo_monad_bijection(const VCatPtr& a, const Caps& caps) {
    const Quantale& q = *a->q;
    int nob = a->n_ob();
    checked_pow(q.n(), static_cast<long>(nob) * nob, "loose-monad");
    YoBijectionReport out;
    auto pa = v_presheaf_object(a, caps);
    out.report.merge(pa.certificate);
    if (!out.report.pass()) return out;
    int np = pa.pa->n_ob();

    // all loose monads on A
    std::vector<std::vector<int>> looses;
    {
        std::vector<int> c(static_cast<size_t>(nob) * nob, 0);
        while (true) {
            VLooseMonad lm;
            lm.base = a;
            lm.carrier = c;
            if (check_v_loose_monad(lm).pass()) looses.push_back(c);
            int i = static_cast<int>(c.size()) - 1;
            while (i >= 0 && c[i] == q.n() - 1) c[i--] = 0;
            if (i < 0) break;
            ++c[i];
        }
    }
    out.loose_count = static_cast<long>(looses.size());

    // all yo-relative monads: carrier maps into P A with both witnesses
    VFunctor yo;
    yo.src = a;
    yo.dst = pa.pa;
    yo.ob = pa.yo;
    std::vector<std::vector<int>> monads;
    {
        checked_pow(np, nob, "yo-monad");
        std::vector<int> tb(nob, 0);
        while (true) {
            VRelMonad t;
            t.j = yo;
            t.t_ob = tb;
            if (validate_vrel_monad(t).pass()) monads.push_back(tb);
            int i = nob - 1;
            while (i >= 0 && tb[i] == np - 1) tb[i--] = 0;
            if (i < 0) break;
            ++tb[i];
        }
    }
    out.monad_count = static_cast<long>(monads.size());

    // the bijection T |-> c(x, y) = P A(yo x, t y) and its inverse
    out.bijection_ok = true;
    out.roundtrip_ok = true;
    out.collapse_ok = true;
    out.alg_presheaf_ok = true;
    std::vector<std::vector<int>> images;
    for (const auto& tb : monads) {
        std::vector<int> c(static_cast<size_t>(nob) * nob);
        for (int x = 0; x < nob; ++x)
            for (int y = 0; y < nob; ++y)
                c[static_cast<size_t>(x) * nob + y] = pa.pa->hom(pa.yo[x], tb[y]);
        VLooseMonad lm;
        lm.base = a;
        lm.carrier = c;
        if (!check_v_loose_monad(lm).pass()) out.bijection_ok = false;
        images.push_back(c);

        // inverse: t y is the presheaf x |-> c(x, y); round trip
        std::vector<int> back(nob, -1);
        for (int y = 0; y < nob; ++y) {
            std::vector<int> v(nob);
            for (int x = 0; x < nob; ++x) v[x] = c[static_cast<size_t>(x) * nob + y];
            for (int p = 0; p < np; ++p)
                if (pa.presheaves[p] == v) back[y] = p;
        }
        if (back != tb) out.roundtrip_ok = false;

        // collapse corollary: Kl homs equal the carrier
        for (int x = 0; x < nob; ++x)
            for (int y = 0; y < nob; ++y)
                if (pa.presheaves[tb[y]][x] != c[static_cast<size_t>(x) * nob + y])
                    out.collapse_ok = false;

        // Alg(T) objects equal the presheaves over the collapse
        VCat col;
        col.q = a->q;
        col.objects = a->objects;
        col.hom_table = c;
        auto pcol = v_presheaf_object(std::make_shared<const VCat>(std::move(col)),
                                      caps);
        std::vector<std::vector<int>> alg_ps;
        for (int p = 0; p < np; ++p) {
            bool isalg = true;
            for (int x = 0; x < nob; ++x)
                if (!q.leq(pa.pa->hom(pa.yo[x], p), pa.pa->hom(tb[x], p)))
                    isalg = false;
            if (isalg) alg_ps.push_back(pa.presheaves[p]);
        }
        if (alg_ps != pcol.presheaves) out.alg_presheaf_ok = false;
    }
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        out.bijection_ok = false;
    std::sort(looses.begin(), looses.end());
    if (images != looses) out.bijection_ok = false;

    if (!out.bijection_ok) out.report.fail("yo-bijection", "correspondence failed");
    if (!out.roundtrip_ok) out.report.fail("yo-roundtrip", "inverse failed");
    if (!out.collapse_ok) out.report.fail("yo-collapse", "Kleisli vs collapse");
    if (!out.alg_presheaf_ok)
        out.report.fail("yo-algebras", "Alg(T) vs presheaves over the collapse");
    return out;
}

}  // namespace rml
