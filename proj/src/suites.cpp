#include "rml/suites.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "rml/constructions.hpp"
#include "rml/corpus.hpp"
#include "rml/json_io.hpp"
#include "rml/loosemonad.hpp"
#include "rml/nervepullback.hpp"
#include "rml/quantale.hpp"

namespace rml {

using nlohmann::json;

namespace {

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

json require_input(const SuiteOptions& opt, RunReport& rep) {
    if (opt.input.empty()) throw InputError("this suite requires --input FILE");
    std::string bytes = read_file(opt.input);
    rep.input_digest = fnv1a_digest(bytes);
    try {
        return json::parse(bytes);
    } catch (const json::exception& e) {
        throw InputError("invalid JSON in '" + opt.input + "': " + e.what());
    }
}

CheckResult from_report(std::string id, const LawReport& r, json data = json::object()) {
    CheckResult c;
    c.id = std::move(id);
    c.report = r;
    c.pass = r.pass();
    c.data = std::move(data);
    return c;
}

void suite_validate(const json& doc, RunReport& rep) {
    if (doc.contains("elements")) {
        auto q = quantale_from_json(doc);
        rep.results.push_back(from_report("quantale", validate_quantale(*q)));
    } else if (doc.contains("dagger")) {
        auto md = monad_from_json(doc);
        LawReport r;
        r.merge(validate_category(*md.a));
        r.merge(validate_category(*md.e));
        r.merge(validate_functor(md.monad.j));
        if (r.pass()) {
            auto mr = check_relative_monad(md.monad);
            r.merge(mr.laws);
            r.merge(carrier_functor(md.monad).naturality);
        }
        rep.results.push_back(from_report("relative-monad", r));
    } else {
        auto c = category_from_json(doc);
        rep.results.push_back(from_report("category", validate_category(*c)));
    }
}

void suite_kleisli(const json& doc, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto kl = build_kleisli(md.monad);
    json data;
    data["category"] = category_to_json(*kl.kl);
    data["objects"] = kl.kl->n_ob();
    data["morphisms"] = kl.kl->n_mor();
    rep.results.push_back(
        from_report("kleisli", kl.resolution.certificate, std::move(data)));
}

void suite_algebras(const json& doc, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto em = enumerate_algebras(md.monad);
    json data;
    data["category"] = category_to_json(*em.alg_cat);
    data["algebras"] = em.algebras.size();
    rep.results.push_back(
        from_report("algebras", em.resolution.certificate, std::move(data)));
}

void suite_compare(const json& doc, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto kl = build_kleisli(md.monad);
    auto em = enumerate_algebras(md.monad);
    auto cmp = comparison_functor(md.monad, kl, em);
    json data;
    data["fully_faithful"] = cmp.ff.ok;
    data["iso"] = is_strict_isomorphism(cmp.i);
    rep.results.push_back(from_report("compare", cmp.report, std::move(data)));
}

void suite_nerve_check(const json& doc, const SuiteOptions& opt, RunReport& rep) {
    auto md = monad_from_json(doc);
    json data;
    if (opt.dual) {
        auto r = check_conerve_theorem(md.monad);
        data["codense"] = r.codense;
        data["comparison_iso"] = r.comparison_iso;
        data["conerve_of_comparison_ok"] = r.conerve_of_comparison_ok;
        data["codense_witness"] = r.codense_witness;
        rep.results.push_back(
            from_report("conerve-check", r.consistency, std::move(data)));
    } else {
        auto r = check_nerve_theorem(md.monad);
        data["dense"] = r.dense;
        data["comparison_iso"] = r.comparison_iso;
        data["nerve_of_comparison_ok"] = r.nerve_of_comparison_ok;
        data["dense_witness"] = r.dense_witness;
        rep.results.push_back(
            from_report("nerve-check", r.consistency, std::move(data)));
    }
}

void suite_collapse(const json& doc, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto kl = build_kleisli(md.monad);
    auto assoc = associated_loose_monad(md.monad);
    auto col = collapse(assoc.lm);
    LawReport r;
    r.merge(assoc.certificate);
    r.merge(col.certificate);
    if (!(*col.cat == *kl.kl))
        r.fail("collapse-kleisli", "collapse tables differ from the Kleisli category");
    if (!functors_equal(col.pi, kl.k))
        r.fail("collapse-kleisli", "collapse projection differs from k");
    json data;
    data["objects"] = col.cat->n_ob();
    data["morphisms"] = col.cat->n_mor();
    rep.results.push_back(from_report("collapse", r, std::move(data)));
}

void suite_section_roundtrip(const json& doc, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto sd = section_from_monad(md.monad);
    auto back = monad_from_section(sd);
    LawReport r = back.report;
    if (!back.monad || !back.monad->equals(md.monad))
        r.fail("section-roundtrip", "reconstructed monad differs");
    rep.results.push_back(from_report("section-roundtrip", r));
}

void suite_semanticiser(const json& doc, const SuiteOptions& opt, RunReport& rep) {
    auto md = monad_from_json(doc);
    auto kl = build_kleisli(md.monad);
    auto em = enumerate_algebras(md.monad);
    auto sq = em_square(md.monad, kl, em);
    auto cert = check_semanticiser(sq, auto_cones(sq), opt.chain_bound);
    LawReport r;
    r.merge(cert.restriction);
    if (!cert.density.ok) r.fail("density", cert.density.witness);
    r.merge(cert.one_dim);
    r.merge(cert.two_dim);
    json data;
    data["restriction"] = cert.restriction.pass();
    data["density"] = cert.density.ok;
    data["one_dim"] = cert.one_dim.pass();
    data["two_dim"] = cert.two_dim.pass();
    rep.results.push_back(from_report("semanticiser", r, std::move(data)));
}

void suite_quantale_validate(const json& doc, RunReport& rep) {
    auto q = quantale_from_json(doc.contains("quantale") ? doc["quantale"] : doc);
    rep.results.push_back(from_report("quantale-validate", validate_quantale(*q)));
}

void suite_v_nerve_check(const json& doc, RunReport& rep) {
    auto vd = v_monad_from_json(doc);
    LawReport pre;
    pre.merge(validate_quantale(*vd.q));
    pre.merge(validate_vcat(*vd.a));
    pre.merge(validate_vcat(*vd.e));
    if (!pre.pass()) {
        rep.results.push_back(from_report("v-nerve-check", pre));
        return;
    }
    auto r = v_check_nerve_theorem(vd.monad);
    json data;
    data["monad_ok"] = r.monad_ok;
    data["dense"] = r.dense;
    data["dense_witness"] = r.dense_witness;
    data["comparison_iso"] = r.comparison_iso;
    data["semanticiser_match"] = r.semanticiser_match;
    rep.results.push_back(from_report("v-nerve-check", r.consistency, std::move(data)));
}

void suite_yo_bijection(const json& doc, RunReport& rep) {
    auto q = quantale_from_json(doc.at("quantale"));
    auto a = vcat_from_json(doc.at("A"), q);
    LawReport pre;
    pre.merge(validate_quantale(*q));
    pre.merge(validate_vcat(*a));
    if (!pre.pass()) {
        rep.results.push_back(from_report("yo-bijection", pre));
        return;
    }
    auto r = v_yo_monad_bijection(a);
    json data;
    data["loose_monads"] = r.loose_count;
    data["yo_monads"] = r.monad_count;
    data["bijection"] = r.bijection_ok;
    data["roundtrip"] = r.roundtrip_ok;
    data["collapse"] = r.collapse_ok;
    data["algebras"] = r.alg_presheaf_ok;
    rep.results.push_back(from_report("yo-bijection", r.report, std::move(data)));
}

void suite_corpus(const SuiteOptions& opt, RunReport& rep) {
    CorpusSpec spec;
    spec.seed = opt.seed;
    spec.count = opt.count;
    spec.max_objects = opt.max_objects;
    spec.max_hom = opt.max_hom;
    spec.density_required = opt.dense;
    auto instances = generate_corpus(spec);
    for (const auto& inst : instances) {
        LawReport r = check_relative_monad(inst.monad).laws;
        json data;
        if (r.pass()) {
            auto nr = check_nerve_theorem(inst.monad, Caps{64, 512, 32});
            r.merge(nr.consistency);
            data["dense"] = nr.dense;
            data["comparison_iso"] = nr.comparison_iso;
            data["nerve_of_comparison_ok"] = nr.nerve_of_comparison_ok;
        }
        rep.results.push_back(from_report(inst.id, r, std::move(data)));
    }
}

}  // namespace

bool RunReport::pass() const {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& c) { return c.pass; });
}

json RunReport::to_json() const {
    json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["input_digest"] = input_digest;
    doc["seed"] = seed;
    doc["pass"] = pass();
    json rs = json::array();
    for (const auto& c : results) {
        json entry;
        entry["id"] = c.id;
        entry["pass"] = c.pass;
        entry["violations"] = report_to_json(c.report)["violations"];
        entry["data"] = c.data;
        rs.push_back(entry);
    }
    doc["results"] = rs;
    return doc;
}

std::string RunReport::to_text() const {
    std::ostringstream os;
    os << "command: " << command << "\n";
    os << "input_digest: " << input_digest << "\n";
    os << "seed: " << seed << "\n";
    for (const auto& c : results) {
        os << (c.pass ? "PASS" : "FAIL") << " " << c.id;
        if (!c.data.empty()) os << " " << c.data.dump();
        os << "\n";
        for (const auto& v : c.report.violations)
            os << "  violation: " << v.law << " [" << v.witness << "]\n";
    }
    os << "wall_ms: " << wall_ms << "\n";
    os << (pass() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return os.str();
}

RunReport run_suite(const std::string& name, const SuiteOptions& opt) {
    RunReport rep;
    rep.command = name;
    rep.seed = opt.seed;
    auto start = std::chrono::steady_clock::now();
    if (name == "validate") {
        suite_validate(require_input(opt, rep), rep);
    } else if (name == "kleisli") {
        suite_kleisli(require_input(opt, rep), rep);
    } else if (name == "algebras") {
        suite_algebras(require_input(opt, rep), rep);
    } else if (name == "compare") {
        suite_compare(require_input(opt, rep), rep);
    } else if (name == "nerve-check") {
        suite_nerve_check(require_input(opt, rep), opt, rep);
    } else if (name == "collapse") {
        suite_collapse(require_input(opt, rep), rep);
    } else if (name == "section-roundtrip") {
        suite_section_roundtrip(require_input(opt, rep), rep);
    } else if (name == "semanticiser") {
        suite_semanticiser(require_input(opt, rep), opt, rep);
    } else if (name == "quantale" || name == "quantale-validate") {
        suite_quantale_validate(require_input(opt, rep), rep);
    } else if (name == "v-nerve-check") {
        suite_v_nerve_check(require_input(opt, rep), rep);
    } else if (name == "yo-bijection") {
        suite_yo_bijection(require_input(opt, rep), rep);
    } else if (name == "corpus") {
        suite_corpus(opt, rep);
    } else {
        throw InputError("unknown suite '" + name + "'");
    }
    std::sort(rep.results.begin(), rep.results.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    return rep;
}

}  // namespace rml
