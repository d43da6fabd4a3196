#ifndef RML_LOOSEMONAD_HPP
#define RML_LOOSEMONAD_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rml/distributor.hpp"
#include "rml/fincat.hpp"
#include "rml/relmonad.hpp"
#include "rml/report.hpp"

namespace rml {

/// A loose monad (promonad) on a finite category: an endo-distributor with
/// a unital, associative multiplication. mult is stored diagrammatically:
/// mult(f, g) is "f then g" for f in het(x, y), g in het(y, z).
struct LooseMonad {
    CatPtr base;
    Distributor carrier;  // base -|-> base
    std::map<std::pair<int, int>, int> mu;  // (f, g) -> elem of het(x, z)
    std::vector<int> eta;                   // per base morphism u, elem of het(src u, tgt u)

    int mult(int f, int g) const {
        auto it = mu.find({f, g});
        if (it == mu.end())
            throw InputError("mu not defined at (" + std::to_string(f) + "," +
                             std::to_string(g) + ")");
        return it->second;
    }
};

LawReport check_loose_monad(const LooseMonad& lm, const Caps& caps = {});

/// The loose-identity of c: hom-distributor with composition and identities.
LooseMonad loose_identity(const CatPtr& c);

/// The loose monad B(t, t) on the domain of t : A -> B: carrier
/// restrict(hom_B, t, t), multiplication by composition in B, unit eta(u) =
/// the element over t(u).
LooseMonad restricted_hom_loose_monad(const Functor& t);

/// A morphism of loose monads over a change of base f: an elementwise map of
/// carriers preserving actions, unit and multiplication.
struct LooseMonadMorphism {
    Functor f;             // src base -> tgt base
    std::vector<int> phi;  // per src carrier elem, a tgt carrier elem
};

LawReport check_loose_monad_morphism(const LooseMonad& src, const LooseMonad& tgt,
                                     const LooseMonadMorphism& m);

/// The associated loose monad E(j, T) of a relative monad, together with the
/// extension 2-cell dagger certified as a loose-monad morphism into the
/// loose identity of E over the carrier functor t, i.e. with components
/// landing in E(t, t).
struct AssociatedLooseMonad {
    LooseMonad lm;                // E(j, T)
    LooseMonad tt;                // loose identity of E
    LooseMonadMorphism dagger;    // lm -> tt over the carrier functor
    LawReport certificate;        // lm laws + dagger morphism laws
};

AssociatedLooseMonad associated_loose_monad(const RelativeMonad& T);

/// The collapse of a loose monad: same objects, hom(x, y) = het(x, y),
/// composition mu, identities eta(id). pi acts by eta. The certificate is
/// the cartesianness equation restrict(hom_collapse, pi, pi) = carrier,
/// compared bit-exactly (carriers are expected in hom-block element order).
struct CollapseResult {
    CatPtr cat;
    Functor pi;  // base -> collapse
    LawReport certificate;
};

CollapseResult collapse(const LooseMonad& lm);

/// Factorization of a loose-monad morphism m : lm -> loose_identity(B)
/// through the collapse, with uniqueness verified by exhaustive search over
/// functors collapse(lm) -> B (skipped past `budget`, reported not unique
/// verified rather than assumed).
struct FactorizationResult {
    Functor h;  // collapse(lm) -> B
    LawReport report;
    bool uniqueness_attempted = true;
    int candidates = 0;  // functors satisfying both factorization equations
};

FactorizationResult factor_through_collapse(const LooseMonad& lm,
                                            const CollapseResult& col,
                                            const LooseMonadMorphism& m,
                                            long budget = 1'000'000);

/// A left module over a loose monad L, together with a right action of a
/// second loose monad R on the other side. p has left = base(L),
/// right = base(R). lambda is keyed (f in carrier(L), m in p) with the
/// right boundary of f matching the left boundary of m; rho is keyed
/// (m, g in carrier(R)).
struct LooseMonadModule {
    Distributor p;
    std::map<std::pair<int, int>, int> lambda;
    std::map<std::pair<int, int>, int> rho;

    int lact_of(int f, int m) const {
        auto it = lambda.find({f, m});
        if (it == lambda.end()) throw InputError("lambda not defined");
        return it->second;
    }
    int ract_of(int m, int g) const {
        auto it = rho.find({m, g});
        if (it == rho.end()) throw InputError("rho not defined");
        return it->second;
    }
};

LawReport check_loose_monad_module(const LooseMonad& L, const LooseMonad& R,
                                   const LooseMonadModule& mod);

// ---- semanticiser ----

/// The square data of a semanticiser of k relative to n: n a loose-cell
/// A -|-> E (left = A, right = E), k : A -> K tight, pi1 : D -> E tight,
/// pi2 a loose-cell K -|-> D (left = K, right = D).
struct SemanticiserSquare {
    Distributor n;
    Functor k;    // A -> K
    Functor pi1;  // D -> E
    Distributor pi2;
};

/// A cone over the square with terminal apex: an object e of E and a
/// loose-cell p : K -|-> 1 satisfying the restriction equation
/// p(k, 1) = n(1, e).
struct SemanticiserCone {
    int e;          // object of E
    Distributor p;  // left = K, right = terminal
};

struct SemanticiserCertificate {
    LawReport restriction;  // pi2(k, 1) = n(1, pi1), bit-exact
    DensityReport density;  // pi2 is dense
    LawReport one_dim;      // each cone has exactly one mediating object
    LawReport two_dim;      // chain 2-cells factor uniquely, chains <= bound
    bool pass() const {
        return restriction.pass() && density.ok && one_dim.pass() && two_dim.pass();
    }
};

/// The column of pi2 at object d of D, as a loose-cell K -|-> 1.
SemanticiserCone column_cone(const SemanticiserSquare& sq, int d);

/// The default test universe: one cone per object of D.
std::vector<SemanticiserCone> auto_cones(const SemanticiserSquare& sq);

SemanticiserCertificate check_semanticiser(const SemanticiserSquare& sq,
                                           const std::vector<SemanticiserCone>& cones,
                                           int chain_bound = 2);

}  // namespace rml

#endif
