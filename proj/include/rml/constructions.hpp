#ifndef RML_CONSTRUCTIONS_HPP
#define RML_CONSTRUCTIONS_HPP

#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "rml/fincat.hpp"
#include "rml/loosemonad.hpp"
#include "rml/relmonad.hpp"
#include "rml/report.hpp"

namespace rml {

/// A resolution of T: a j-adjunction ell -| r together with the certificate
/// that it induces T bit-exactly.
struct Resolution {
    RelativeAdjunction adj;
    LawReport certificate;
};

/// The Kleisli category of T: objects of A, hom(x, y) = E(j x, t y).
/// Morphisms are enumerated in hom-block order (x, y, underlying E-morphism
/// id), recorded in mor_data.
struct KleisliResult {
    CatPtr kl;
    Functor k;  // A -> Kl, identity on objects, u |-> j u ; eta
    Functor v;  // Kl -> E, x |-> t x, f |-> f-dagger
    std::vector<std::tuple<int, int, int>> mor_data;  // (x, y, E morphism)
    Resolution resolution;
};

KleisliResult build_kleisli(const RelativeMonad& T);

/// A T-algebra: a carrier object of E with an extension family
/// aop(x, f : j x -> e) = f-alpha : t x -> e.
struct Algebra {
    int carrier = -1;
    std::map<std::pair<int, int>, int> aop;  // (x, f in E(jx, e)) -> E(tx, e)

    bool operator==(const Algebra&) const = default;
    int ext(int x, int f) const {
        auto it = aop.find({x, f});
        if (it == aop.end()) throw InputError("aop not defined");
        return it->second;
    }
};

LawReport check_algebra(const RelativeMonad& T, const Algebra& alg);

/// The free algebra on x: carrier t x, extension by dagger.
Algebra free_algebra(const RelativeMonad& T, int x);

/// The Eilenberg-Moore category: all algebras (carriers in E-object order,
/// then aop tables lexicographically), morphisms the E-morphisms commuting
/// with the extensions. Morphisms are in hom-block order; mor_parent maps
/// each to its underlying E-morphism.
struct EMResult {
    CatPtr alg_cat;
    std::vector<Algebra> algebras;  // per object of alg_cat
    std::vector<int> mor_parent;    // per morphism of alg_cat
    Functor u;  // Alg -> E, forgetful
    Functor f;  // A -> Alg, free
    Resolution resolution;
};

EMResult enumerate_algebras(const RelativeMonad& T, const Caps& caps = {});

/// The comparison functor i_T : Kl(T) -> Alg(T), x |-> free algebra,
/// f |-> f-dagger, with the expected coherences checked.
struct ComparisonResult {
    Functor i;
    FullyFaithfulReport ff;
    LawReport report;  // functor validity, k;i = f and i;u = v
};

ComparisonResult comparison_functor(const RelativeMonad& T, const KleisliResult& kl,
                                    const EMResult& em);

/// A T-opalgebra: a functor a : A -> B with an action of Kleisli morphisms
/// oop(x, y, f : j x -> t y) in B(a x, a y).
struct Opalgebra {
    Functor a;
    std::map<std::tuple<int, int, int>, int> oop;

    int act(int x, int y, int f) const {
        auto it = oop.find({x, y, f});
        if (it == oop.end()) throw InputError("oop not defined");
        return it->second;
    }
};

/// The universal opalgebra (k_T, Kleisli composition).
Opalgebra universal_opalgebra(const RelativeMonad& T, const KleisliResult& kl);

/// The extension opalgebra (t, dagger) into E.
Opalgebra dagger_opalgebra(const RelativeMonad& T);

/// Checks the opalgebra laws, and cross-checks that the induced 2-cell
/// E(j, T) => B(a, a) is a loose-monad morphism exactly when they hold.
LawReport check_opalgebra(const RelativeMonad& T, const Opalgebra& o);

/// The unique functor Kl(T) -> B with k ; h = a carrying the universal
/// structure to oop; uniqueness verified by exhaustive functor search.
struct OpalgebraFactorization {
    Functor h;
    LawReport report;
    bool uniqueness_attempted = true;
    int candidates = 0;
};

OpalgebraFactorization opalgebra_factorization(const RelativeMonad& T,
                                               const KleisliResult& kl,
                                               const Opalgebra& o,
                                               long budget = 1'000'000);

// ---- modules vs algebras (Lemma level) ----

/// The left E(j,T)-module with carrier E(j, e) induced by an algebra:
/// lambda(f, m) = f ; m-alpha. The right monad is the loose identity of the
/// terminal category.
struct AlgebraModuleResult {
    LooseMonadModule mod;
    LooseMonad right;  // loose identity of the terminal base
    LawReport report;  // module laws
};

AlgebraModuleResult algebra_module(const RelativeMonad& T, const Algebra& alg);

/// Recovers an algebra from such a module: m-alpha is the unique g with
/// lambda(f, m) = f ; g for all f. Fails (with report) when no unique g
/// exists; uniqueness holds whenever j is dense.
struct ModuleToAlgebraResult {
    std::optional<Algebra> alg;
    LawReport report;
};

ModuleToAlgebraResult module_to_algebra(const RelativeMonad& T,
                                        const LooseMonadModule& mod);

/// The Eilenberg-Moore semanticiser square of T: n = E(j, 1),
/// pi2(x, b) = E(j x, carrier b) with left action through the algebra
/// extensions, pi1 = u_T, k = k_T.
SemanticiserSquare em_square(const RelativeMonad& T, const KleisliResult& kl,
                             const EMResult& em);

}  // namespace rml

#endif
