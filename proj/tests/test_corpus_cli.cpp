#include <cstdlib>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "rml/corpus.hpp"
#include "rml/json_io.hpp"
#include "rml/nervepullback.hpp"
#include "rml/suites.hpp"

using namespace rml;
using namespace rmltest;

namespace {

std::string fixture(const std::string& name) {
    const char* dir = std::getenv("RML_FIXTURES");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("JSON round trips") {
    SUBCASE("categories") {
        auto s = span_cat();
        auto back = category_from_json(category_to_json(*s.cat));
        CHECK(*back == *s.cat);
        auto fs = fat_span();
        CHECK(*category_from_json(category_to_json(*fs.cat)) == *fs.cat);
    }

    SUBCASE("monads") {
        auto one = terminal_cat();
        auto fs = fat_span();
        auto T = fat_span_monad(fs, one);
        auto md = monad_from_json(monad_to_json(T));
        CHECK(md.monad.equals(T));
        CHECK(check_relative_monad(md.monad).laws.pass());
    }

    SUBCASE("quantales and v-categories") {
        auto q = chain_quantale(3);
        auto back = quantale_from_json(quantale_to_json(*q));
        CHECK(*back == *q);
        auto doc = load_json_file(fixture("chain2_base.json"));
        auto q2 = quantale_from_json(doc.at("quantale"));
        auto a = vcat_from_json(doc.at("A"), q2);
        CHECK(validate_vcat(*a).pass());
        CHECK(*vcat_from_json(vcat_to_json(*a), q2) == *a);
    }

    SUBCASE("malformed documents raise input errors") {
        CHECK_THROWS_AS(category_from_json(nlohmann::json::object()), InputError);
        CHECK_THROWS_AS(load_json_file("/nonexistent/file.json"), InputError);
        nlohmann::json bad = {{"objects", {"x", "x"}},
                              {"morphisms", nlohmann::json::array()},
                              {"identities", nlohmann::json::object()}};
        CHECK_THROWS_AS(category_from_json(bad), InputError);
    }
}

TEST_CASE("bundled fixtures parse and behave as documented") {
    SUBCASE("the span monad fixture matches the in-memory fixture") {
        auto one = terminal_cat();
        auto s = span_cat();
        auto md = monad_from_json(load_json_file(fixture("span_monad.json")));
        CHECK(md.monad.equals(span_constant_monad(s, one)));
    }

    SUBCASE("broken fixtures are rejected with the expected laws") {
        auto cat = category_from_json(load_json_file(fixture("broken_unit_category.json")));
        auto r = validate_category(*cat);
        CHECK_FALSE(r.pass());
        CHECK(r.violations[0].law == "left-unit");

        auto cat2 =
            category_from_json(load_json_file(fixture("broken_assoc_category.json")));
        auto r2 = validate_category(*cat2);
        CHECK_FALSE(r2.pass());
        bool assoc = false;
        for (const auto& v : r2.violations) assoc |= v.law == "associativity";
        CHECK(assoc);
    }
}

TEST_CASE("corpus generation") {
    SUBCASE("seed determinism") {
        CorpusSpec spec;
        spec.seed = 11;
        spec.count = 20;
        auto a = generate_corpus(spec);
        auto b = generate_corpus(spec);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].id == b[i].id);
            CHECK(a[i].monad.equals(b[i].monad));
        }
    }

    SUBCASE("all generated instances are lawful") {
        CorpusSpec spec;
        spec.seed = 5;
        spec.count = 60;
        for (const auto& inst : generate_corpus(spec))
            CHECK(check_relative_monad(inst.monad).laws.pass());
    }

    SUBCASE("density filter is honoured") {
        CorpusSpec spec;
        spec.seed = 3;
        spec.count = 25;
        spec.density_required = true;
        for (const auto& inst : generate_corpus(spec))
            CHECK(is_dense(inst.monad.j).ok);
    }

    SUBCASE("nonsensical caps are input errors") {
        CorpusSpec spec;
        spec.seed = 1;
        spec.count = 1;
        spec.max_objects = 0;
        spec.max_hom = 0;
        CHECK_THROWS_AS(generate_corpus(spec), InputError);
        spec.max_objects = 4;
        spec.max_hom = 3;
        spec.count = 0;
        CHECK_THROWS_AS(generate_corpus(spec), InputError);
    }

    SUBCASE("quantale corpus instances validate") {
        auto insts = generate_v_corpus(bool_quantale(), 2, false);
        CHECK(!insts.empty());
        for (const auto& inst : insts)
            CHECK(validate_vrel_monad(inst.monad).pass());
    }
}

TEST_CASE("suite dispatch and exit codes") {
    SUBCASE("unknown suites are input errors") {
        SuiteOptions opt;
        CHECK_THROWS_AS(run_suite("no-such-suite", opt), InputError);
        CHECK_THROWS_AS(run_suite("validate", opt), InputError);  // no input
    }

    SUBCASE("validate on the broken-unit fixture exits 1 with a witness") {
        SuiteOptions opt;
        opt.input = fixture("broken_unit_category.json");
        auto rep = run_suite("validate", opt);
        CHECK(rep.exit_code() == 1);
        REQUIRE(rep.results.size() == 1);
        CHECK_FALSE(rep.results[0].report.violations.empty());
    }

    SUBCASE("nerve-check on the span fixture exits 0 and reports the verdicts") {
        SuiteOptions opt;
        opt.input = fixture("span_monad.json");
        auto rep = run_suite("nerve-check", opt);
        CHECK(rep.exit_code() == 0);
        REQUIRE(rep.results.size() == 1);
        CHECK(rep.results[0].data["dense"] == false);
        CHECK(rep.results[0].data["comparison_iso"] == false);
    }

    SUBCASE("reports are byte-identical across runs") {
        SuiteOptions opt;
        opt.seed = 7;
        opt.count = 10;
        opt.dense = true;
        auto a = run_suite("corpus", opt).to_json().dump();
        auto b = run_suite("corpus", opt).to_json().dump();
        CHECK(a == b);
    }

    SUBCASE("dense corpus suite passes with comparison_iso everywhere") {
        SuiteOptions opt;
        opt.seed = 7;
        opt.count = 25;
        opt.dense = true;
        auto rep = run_suite("corpus", opt);
        CHECK(rep.exit_code() == 0);
        CHECK(rep.results.size() == 25);
        for (const auto& c : rep.results) CHECK(c.data["comparison_iso"] == true);
    }

    SUBCASE("quantale suites run from fixtures") {
        SuiteOptions opt;
        opt.input = fixture("chain2_base.json");
        auto rep = run_suite("yo-bijection", opt);
        CHECK(rep.exit_code() == 0);
        CHECK(rep.results[0].data["loose_monads"] == 2);
        CHECK(rep.results[0].data["yo_monads"] == 2);

        opt.input = fixture("chain3_vmonad.json");
        auto rep2 = run_suite("v-nerve-check", opt);
        CHECK(rep2.exit_code() == 0);
        CHECK(rep2.results[0].data["dense"] == false);

        opt.input = fixture("broken_quantale.json");
        auto rep3 = run_suite("quantale-validate", opt);
        CHECK(rep3.exit_code() == 1);
    }

    SUBCASE("the dual flag checks the conerve theorem") {
        SuiteOptions opt;
        opt.input = fixture("identity_monad.json");
        opt.dual = true;
        auto rep = run_suite("nerve-check", opt);
        CHECK(rep.exit_code() == 0);
        CHECK(rep.results[0].data["codense"] == true);
    }
}
