#ifndef RML_NERVEPULLBACK_HPP
#define RML_NERVEPULLBACK_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rml/constructions.hpp"
#include "rml/fincat.hpp"
#include "rml/relmonad.hpp"
#include "rml/report.hpp"

namespace rml {

/// The nerve presheaf of e along j: a |-> E(j a, e), acting by
/// precomposition with j-images.
Presheaf nerve_presheaf(const Functor& j, int e);

/// All presheaf morphisms p -> q over the same base: natural families of
/// functions value_p(a) -> value_q(a), in lexicographic order.
std::vector<std::vector<std::vector<int>>> presheaf_morphisms(const Presheaf& p,
                                                              const Presheaf& q);

struct DenseReport {
    bool ok = true;
    std::string witness;  // offending pair (e, e') with counts
};

/// Density of j: the nerve is fully faithful, i.e. for all e, e' the
/// canonical map E(e, e') -> Nat(nerve e, nerve e') is a bijection.
DenseReport is_dense(const Functor& j);

/// An object of the nerve-theorem pullback: a carrier e with a presheaf
/// structure on Kl(T) whose object part is forced to E(j -, e) and whose
/// action on k_T-images is forced to precomposition.
struct PullbackObject {
    int carrier = -1;
    std::map<std::pair<int, int>, int> act;  // (Kleisli morphism, g) -> E morphism

    bool operator==(const PullbackObject&) const = default;
    int apply(int m, int g) const {
        auto it = act.find({m, g});
        if (it == act.end()) throw InputError("pullback action not defined");
        return it->second;
    }
};

struct NervePullbackResult {
    CatPtr p;
    std::vector<PullbackObject> objects;  // per object of p
    std::vector<int> mor_parent;          // per morphism of p, an E morphism
    Functor leg_e;                        // p -> E, forgets
    LawReport report;
};

NervePullbackResult build_nerve_pullback(const RelativeMonad& T,
                                         const KleisliResult& kl,
                                         const Caps& caps = {});

/// The comparison Alg(T) -> P, sending (e, alpha) to the pullback object
/// with action f |-> (g |-> f ; g-alpha).
Functor comparison_to_pullback(const RelativeMonad& T, const KleisliResult& kl,
                               const EMResult& em, const NervePullbackResult& np);

struct NerveTheoremReport {
    bool dense = false;
    bool comparison_iso = false;
    bool nerve_of_comparison_ok = false;
    std::string dense_witness;
    LawReport consistency;  // dense must imply comparison_iso; builds validate
};

NerveTheoremReport check_nerve_theorem(const RelativeMonad& T, const Caps& caps = {});

/// Comonad data is stored in the RelativeMonad shape and exchanged with
/// monads by strict op-dualization; dualize_monad is a bit-exact involution.
RelativeMonad dualize_monad(const RelativeMonad& T);

struct ConerveTheoremReport {
    bool codense = false;
    bool comparison_iso = false;
    bool conerve_of_comparison_ok = false;
    std::string codense_witness;
    LawReport consistency;
};

ConerveTheoremReport check_conerve_theorem(const RelativeMonad& comonad,
                                           const Caps& caps = {});

}  // namespace rml

#endif
