#ifndef RML_JSON_IO_HPP
#define RML_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "rml/fincat.hpp"
#include "rml/quantale.hpp"
#include "rml/relmonad.hpp"

namespace rml {

/// Parses a JSON document from disk; throws InputError on I/O or syntax
/// problems.
nlohmann::json load_json_file(const std::string& path);

/// category = {objects, morphisms: [{id, src, tgt}], identities: {obj: id},
/// compose: [[f, g, fg]] diagrammatic}. Identity composites are filled in
/// automatically; explicit entries override them. Unknown names and
/// duplicate ids throw InputError; law violations are left to the validator.
CatPtr category_from_json(const nlohmann::json& doc);
nlohmann::json category_to_json(const FinCat& c);

/// functor = {obj_map: {src obj: dst obj}, mor_map: {src mor: dst mor}}.
Functor functor_from_json(const nlohmann::json& doc, const CatPtr& src,
                          const CatPtr& dst);

/// relative_monad = {A, E, j, t_ob: {a: e}, eta: {a: mor},
/// dagger: [[x, y, f, fdag]]}.
struct MonadDocument {
    CatPtr a, e;
    RelativeMonad monad;
};

MonadDocument monad_from_json(const nlohmann::json& doc);
nlohmann::json monad_to_json(const RelativeMonad& t);

/// quantale = {elements, leq: [[a, b]] pairs (reflexivity implied),
/// tensor: n*n table of names, unit}; residual tables are derived unless
/// given explicitly as lres / rres.
QuantalePtr quantale_from_json(const nlohmann::json& doc);
nlohmann::json quantale_to_json(const Quantale& q);

/// vcat = {objects, hom: n*n table of element names}.
VCatPtr vcat_from_json(const nlohmann::json& doc, const QuantalePtr& q);
nlohmann::json vcat_to_json(const VCat& a);

/// v_monad = {quantale, A, E, j: {obj_map}, t_ob: {a: e}}.
struct VMonadDocument {
    QuantalePtr q;
    VCatPtr a, e;
    VRelMonad monad;
};

VMonadDocument v_monad_from_json(const nlohmann::json& doc);

nlohmann::json report_to_json(const LawReport& r);

}  // namespace rml

#endif
