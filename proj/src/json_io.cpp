#include "rml/json_io.hpp"

#include <fstream>
#include <map>

namespace rml {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

int lookup(const std::map<std::string, int>& ids, const std::string& name,
           const char* kind) {
    auto it = ids.find(name);
    if (it == ids.end())
        throw InputError(std::string("unknown ") + kind + " '" + name + "'");
    return it->second;
}

}  // namespace

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
}

CatPtr category_from_json(const json& doc) {
    try {
        CatBuilder b;
        std::map<std::string, int> obj_ids, mor_ids;
        for (const auto& name : field(doc, "objects")) {
            std::string n = name.get<std::string>();
            if (obj_ids.count(n)) throw InputError("duplicate object '" + n + "'");
            obj_ids[n] = b.add_object(n);
        }
        for (const auto& m : field(doc, "morphisms")) {
            std::string id = field(m, "id").get<std::string>();
            if (mor_ids.count(id)) throw InputError("duplicate morphism '" + id + "'");
            mor_ids[id] = b.add_morphism(
                id, lookup(obj_ids, field(m, "src").get<std::string>(), "object"),
                lookup(obj_ids, field(m, "tgt").get<std::string>(), "object"));
        }
        for (const auto& [obj, mor] : field(doc, "identities").items())
            b.set_identity(lookup(obj_ids, obj, "object"),
                           lookup(mor_ids, mor.get<std::string>(), "morphism"));
        b.finish_morphisms();
        // identity composites are implied; explicit entries override below
        for (int f = 0; f < b.cat.n_mor(); ++f) {
            int src = b.cat.morphisms[f].src, tgt = b.cat.morphisms[f].tgt;
            if (src >= 0 && src < b.cat.n_ob() && b.cat.identity[src] >= 0)
                b.set_compose(b.cat.identity[src], f, f);
            if (tgt >= 0 && tgt < b.cat.n_ob() && b.cat.identity[tgt] >= 0)
                b.set_compose(f, b.cat.identity[tgt], f);
        }
        if (doc.contains("compose"))
            for (const auto& triple : doc["compose"]) {
                if (triple.size() != 3)
                    throw InputError("compose entries are triples [f, g, fg]");
                b.set_compose(
                    lookup(mor_ids, triple[0].get<std::string>(), "morphism"),
                    lookup(mor_ids, triple[1].get<std::string>(), "morphism"),
                    lookup(mor_ids, triple[2].get<std::string>(), "morphism"));
            }
        return b.build();
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed category document: ") + e.what());
    }
}

json category_to_json(const FinCat& c) {
    json doc;
    doc["schema_version"] = 1;
    doc["objects"] = c.objects;
    json mors = json::array();
    for (const auto& m : c.morphisms)
        mors.push_back({{"id", m.name},
                        {"src", c.objects[m.src]},
                        {"tgt", c.objects[m.tgt]}});
    doc["morphisms"] = mors;
    json ids = json::object();
    for (int x = 0; x < c.n_ob(); ++x)
        ids[c.objects[x]] = c.morphisms[c.identity[x]].name;
    doc["identities"] = ids;
    json comp = json::array();
    for (int f = 0; f < c.n_mor(); ++f)
        for (int g = 0; g < c.n_mor(); ++g) {
            if (c.morphisms[f].tgt != c.morphisms[g].src) continue;
            int fg = c.then(f, g);
            if (fg < 0) continue;
            comp.push_back({c.morphisms[f].name, c.morphisms[g].name,
                            c.morphisms[fg].name});
        }
    doc["compose"] = comp;
    return doc;
}

Functor functor_from_json(const json& doc, const CatPtr& src, const CatPtr& dst) {
    try {
        std::map<std::string, int> sob, smor, dob, dmor;
        for (int x = 0; x < src->n_ob(); ++x) sob[src->objects[x]] = x;
        for (int f = 0; f < src->n_mor(); ++f) smor[src->morphisms[f].name] = f;
        for (int x = 0; x < dst->n_ob(); ++x) dob[dst->objects[x]] = x;
        for (int f = 0; f < dst->n_mor(); ++f) dmor[dst->morphisms[f].name] = f;
        Functor out;
        out.src = src;
        out.dst = dst;
        out.ob.assign(src->n_ob(), -1);
        out.mor.assign(src->n_mor(), -1);
        for (const auto& [from, to] : field(doc, "obj_map").items())
            out.ob[lookup(sob, from, "object")] =
                lookup(dob, to.get<std::string>(), "object");
        for (const auto& [from, to] : field(doc, "mor_map").items())
            out.mor[lookup(smor, from, "morphism")] =
                lookup(dmor, to.get<std::string>(), "morphism");
        for (int o : out.ob)
            if (o < 0) throw InputError("functor object map is not total");
        for (int m : out.mor)
            if (m < 0) throw InputError("functor morphism map is not total");
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed functor document: ") + e.what());
    }
}

MonadDocument monad_from_json(const json& doc) {
    try {
        MonadDocument out;
        out.a = category_from_json(field(doc, "A"));
        out.e = category_from_json(field(doc, "E"));
        out.monad.j = functor_from_json(field(doc, "j"), out.a, out.e);
        std::map<std::string, int> aob, eob, emor;
        for (int x = 0; x < out.a->n_ob(); ++x) aob[out.a->objects[x]] = x;
        for (int x = 0; x < out.e->n_ob(); ++x) eob[out.e->objects[x]] = x;
        for (int f = 0; f < out.e->n_mor(); ++f)
            emor[out.e->morphisms[f].name] = f;
        out.monad.t_ob.assign(out.a->n_ob(), -1);
        for (const auto& [from, to] : field(doc, "t_ob").items())
            out.monad.t_ob[lookup(aob, from, "object")] =
                lookup(eob, to.get<std::string>(), "object");
        out.monad.eta.assign(out.a->n_ob(), -1);
        for (const auto& [from, to] : field(doc, "eta").items())
            out.monad.eta[lookup(aob, from, "object")] =
                lookup(emor, to.get<std::string>(), "morphism");
        for (int v : out.monad.t_ob)
            if (v < 0) throw InputError("t_ob is not total");
        for (int v : out.monad.eta)
            if (v < 0) throw InputError("eta is not total");
        for (const auto& entry : field(doc, "dagger")) {
            if (entry.size() != 4)
                throw InputError("dagger entries are [x, y, f, fdag]");
            int x = lookup(aob, entry[0].get<std::string>(), "object");
            int y = lookup(aob, entry[1].get<std::string>(), "object");
            int f = lookup(emor, entry[2].get<std::string>(), "morphism");
            int fd = lookup(emor, entry[3].get<std::string>(), "morphism");
            out.monad.dagger[{x, y, f}] = fd;
        }
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed monad document: ") + e.what());
    }
}

json monad_to_json(const RelativeMonad& t) {
    const FinCat& a = *t.j.src;
    const FinCat& e = *t.j.dst;
    json doc;
    doc["schema_version"] = 1;
    doc["A"] = category_to_json(a);
    doc["E"] = category_to_json(e);
    json obj_map = json::object(), mor_map = json::object();
    for (int x = 0; x < a.n_ob(); ++x)
        obj_map[a.objects[x]] = e.objects[t.j.ob[x]];
    for (int f = 0; f < a.n_mor(); ++f)
        mor_map[a.morphisms[f].name] = e.morphisms[t.j.mor[f]].name;
    doc["j"] = {{"obj_map", obj_map}, {"mor_map", mor_map}};
    json t_ob = json::object(), eta = json::object();
    for (int x = 0; x < a.n_ob(); ++x) {
        t_ob[a.objects[x]] = e.objects[t.t_ob[x]];
        eta[a.objects[x]] = e.morphisms[t.eta[x]].name;
    }
    doc["t_ob"] = t_ob;
    doc["eta"] = eta;
    json dag = json::array();
    for (const auto& [key, fd] : t.dagger) {
        auto [x, y, f] = key;
        dag.push_back({a.objects[x], a.objects[y], e.morphisms[f].name,
                       e.morphisms[fd].name});
    }
    doc["dagger"] = dag;
    return doc;
}

QuantalePtr quantale_from_json(const json& doc) {
    try {
        Quantale q;
        std::map<std::string, int> ids;
        for (const auto& name : field(doc, "elements")) {
            std::string n = name.get<std::string>();
            if (ids.count(n)) throw InputError("duplicate element '" + n + "'");
            ids[n] = static_cast<int>(q.elements.size());
            q.elements.push_back(n);
        }
        int n = q.n();
        q.leq_table.assign(static_cast<size_t>(n) * n, 0);
        for (int a = 0; a < n; ++a)
            q.leq_table[static_cast<size_t>(a) * n + a] = 1;
        for (const auto& pair : field(doc, "leq")) {
            if (pair.size() != 2) throw InputError("leq entries are pairs");
            int a = lookup(ids, pair[0].get<std::string>(), "element");
            int b = lookup(ids, pair[1].get<std::string>(), "element");
            q.leq_table[static_cast<size_t>(a) * n + b] = 1;
        }
        const json& tensor = field(doc, "tensor");
        if (static_cast<int>(tensor.size()) != n)
            throw InputError("tensor table must have one row per element");
        q.tensor_table.assign(static_cast<size_t>(n) * n, -1);
        for (int a = 0; a < n; ++a) {
            if (static_cast<int>(tensor[a].size()) != n)
                throw InputError("tensor rows must have one entry per element");
            for (int b = 0; b < n; ++b)
                q.tensor_table[static_cast<size_t>(a) * n + b] =
                    lookup(ids, tensor[a][b].get<std::string>(), "element");
        }
        q.unit = lookup(ids, field(doc, "unit").get<std::string>(), "element");
        if (doc.contains("lres") || doc.contains("rres")) {
            auto read = [&](const char* key, std::vector<int>& table) {
                const json& rows = field(doc, key);
                table.assign(static_cast<size_t>(n) * n, -1);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                        table[static_cast<size_t>(a) * n + b] =
                            lookup(ids, rows[a][b].get<std::string>(), "element");
            };
            read("lres", q.lres_table);
            read("rres", q.rres_table);
        } else {
            derive_residuals(q);
        }
        return std::make_shared<const Quantale>(std::move(q));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed quantale document: ") + e.what());
    }
}

json quantale_to_json(const Quantale& q) {
    json doc;
    doc["schema_version"] = 1;
    doc["elements"] = q.elements;
    json leq = json::array();
    for (int a = 0; a < q.n(); ++a)
        for (int b = 0; b < q.n(); ++b)
            if (a != b && q.leq(a, b)) leq.push_back({q.elements[a], q.elements[b]});
    doc["leq"] = leq;
    json tensor = json::array();
    for (int a = 0; a < q.n(); ++a) {
        json row = json::array();
        for (int b = 0; b < q.n(); ++b) row.push_back(q.elements[q.tensor(a, b)]);
        tensor.push_back(row);
    }
    doc["tensor"] = tensor;
    doc["unit"] = q.elements[q.unit];
    return doc;
}

VCatPtr vcat_from_json(const json& doc, const QuantalePtr& q) {
    try {
        VCat a;
        a.q = q;
        std::map<std::string, int> eids;
        for (int i = 0; i < q->n(); ++i) eids[q->elements[i]] = i;
        for (const auto& name : field(doc, "objects"))
            a.objects.push_back(name.get<std::string>());
        int n = a.n_ob();
        const json& hom = field(doc, "hom");
        if (static_cast<int>(hom.size()) != n)
            throw InputError("hom table must have one row per object");
        a.hom_table.assign(static_cast<size_t>(n) * n, -1);
        for (int x = 0; x < n; ++x) {
            if (static_cast<int>(hom[x].size()) != n)
                throw InputError("hom rows must have one entry per object");
            for (int y = 0; y < n; ++y)
                a.hom_table[static_cast<size_t>(x) * n + y] =
                    lookup(eids, hom[x][y].get<std::string>(), "element");
        }
        return std::make_shared<const VCat>(std::move(a));
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed vcat document: ") + e.what());
    }
}

json vcat_to_json(const VCat& a) {
    json doc;
    doc["schema_version"] = 1;
    doc["objects"] = a.objects;
    json hom = json::array();
    for (int x = 0; x < a.n_ob(); ++x) {
        json row = json::array();
        for (int y = 0; y < a.n_ob(); ++y)
            row.push_back(a.q->elements[a.hom(x, y)]);
        hom.push_back(row);
    }
    doc["hom"] = hom;
    return doc;
}

VMonadDocument v_monad_from_json(const json& doc) {
    try {
        VMonadDocument out;
        out.q = quantale_from_json(field(doc, "quantale"));
        out.a = vcat_from_json(field(doc, "A"), out.q);
        out.e = vcat_from_json(field(doc, "E"), out.q);
        std::map<std::string, int> aob, eob;
        for (int x = 0; x < out.a->n_ob(); ++x) aob[out.a->objects[x]] = x;
        for (int x = 0; x < out.e->n_ob(); ++x) eob[out.e->objects[x]] = x;
        out.monad.j.src = out.a;
        out.monad.j.dst = out.e;
        out.monad.j.ob.assign(out.a->n_ob(), -1);
        for (const auto& [from, to] : field(field(doc, "j"), "obj_map").items())
            out.monad.j.ob[lookup(aob, from, "object")] =
                lookup(eob, to.get<std::string>(), "object");
        out.monad.t_ob.assign(out.a->n_ob(), -1);
        for (const auto& [from, to] : field(doc, "t_ob").items())
            out.monad.t_ob[lookup(aob, from, "object")] =
                lookup(eob, to.get<std::string>(), "object");
        for (int v : out.monad.j.ob)
            if (v < 0) throw InputError("j object map is not total");
        for (int v : out.monad.t_ob)
            if (v < 0) throw InputError("t_ob is not total");
        return out;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed v-monad document: ") + e.what());
    }
}

json report_to_json(const LawReport& r) {
    json doc;
    doc["pass"] = r.pass();
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"law", viol.law}, {"witness", viol.witness}});
    doc["violations"] = v;
    return doc;
}

}  // namespace rml
