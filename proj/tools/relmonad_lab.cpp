#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "rml/report.hpp"
#include "rml/suites.hpp"

int main(int argc, char** argv) {
    CLI::App app{"relmonad-lab: finite verification suites for relative monads"};
    std::string suite;
    rml::SuiteOptions opt;
    std::string format = "text";
    app.add_option("suite", suite,
                   "validate | kleisli | algebras | compare | nerve-check | "
                   "collapse | section-roundtrip | semanticiser | "
                   "quantale-validate | v-nerve-check | yo-bijection | corpus")
        ->required();
    app.add_option("--input", opt.input, "path to a JSON input document");
    app.add_option("--seed", opt.seed, "corpus generation seed");
    app.add_option("--count", opt.count, "number of corpus instances");
    app.add_option("--max-objects", opt.max_objects, "corpus object cap");
    app.add_option("--max-hom", opt.max_hom, "corpus hom-size cap");
    app.add_flag("--dense", opt.dense, "require dense roots in the corpus");
    app.add_flag("--dual", opt.dual, "check the conerve theorem instead");
    app.add_option("--chain-bound", opt.chain_bound,
                   "chain length bound for the semanticiser suite");
    app.add_option("--format", format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    CLI11_PARSE(app, argc, argv);

    try {
        rml::RunReport rep = rml::run_suite(suite, opt);
        if (format == "json")
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cout << rep.to_text();
        return rep.exit_code();
    } catch (const rml::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const rml::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    }
}
