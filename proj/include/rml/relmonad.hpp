#ifndef RML_RELMONAD_HPP
#define RML_RELMONAD_HPP

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "rml/fincat.hpp"
#include "rml/report.hpp"

namespace rml {

/// A relative monad: root j : A -> E, carrier object map t, unit family
/// eta_x : j x -> t x, and extension operator sending f : j x -> t y to
/// f-dagger : t x -> t y, stored as an explicit finite map keyed by
/// (x, y, morphism id).
struct RelativeMonad {
    Functor j;
    std::vector<int> t_ob;  // per A-object, an E-object
    std::vector<int> eta;   // per A-object, an E-morphism j x -> t x
    std::map<std::tuple<int, int, int>, int> dagger;

    const FinCat& A() const { return *j.src; }
    const FinCat& E() const { return *j.dst; }

    int dag(int x, int y, int f) const {
        auto it = dagger.find({x, y, f});
        if (it == dagger.end())
            throw InputError("dagger not defined at (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(f) + ")");
        return it->second;
    }

    bool equals(const RelativeMonad& o) const {
        return *j.src == *o.j.src && *j.dst == *o.j.dst && j.ob == o.j.ob &&
               j.mor == o.j.mor && t_ob == o.t_ob && eta == o.eta &&
               dagger == o.dagger;
    }
};

struct MonadLawReport {
    LawReport laws;       // shape + laws 1-3
    LawReport alt_assoc;  // the alternative associativity formulation
    bool pass() const { return laws.pass(); }
    bool law3_pass() const;
    bool verdicts_agree() const { return law3_pass() == alt_assoc.pass(); }
};

MonadLawReport check_relative_monad(const RelativeMonad& T);

/// The identity monad on A (root and carrier the identity functor).
RelativeMonad identity_monad(const CatPtr& a);

struct CarrierFunctorResult {
    Functor t;
    LawReport naturality;  // eta natural j => t, dagger natural in both slots
};

/// Extends t_ob to a functor via t(f) = (j f ; eta)-dagger and certifies
/// naturality of eta and dagger.
CarrierFunctorResult carrier_functor(const RelativeMonad& T);

/// A j-relative adjunction ell -| r with its hom isomorphism, stored per
/// triple (x in A, y in C, f in C(ell x, y)) -> E(j x, r y).
struct RelativeAdjunction {
    Functor j;    // A -> E
    Functor ell;  // A -> C
    Functor r;    // C -> E

    std::map<std::tuple<int, int, int>, int> phi;

    int apply(int x, int y, int f) const {
        auto it = phi.find({x, y, f});
        if (it == phi.end()) throw InputError("phi not defined");
        return it->second;
    }
    int apply_inv(int x, int y, int g) const;
};

LawReport validate_adjunction(const RelativeAdjunction& adj);

RelativeMonad monad_from_adjunction(const RelativeAdjunction& adj);

/// Restriction of a (non-relative) monad S on E, given as a relative monad
/// with identity root, along j : A -> E.
RelativeMonad restrict_monad(const RelativeMonad& S, const Functor& j);

/// Finite search for a left j-adjoint of r. Returns solutions in
/// deterministic order; by default stops at the first.
std::vector<RelativeAdjunction> find_left_relative_adjoint(
    const Functor& r, const Functor& j, bool all_solutions = false,
    long budget = 2'000'000);

/// Section-retraction presentation of a relative monad: s is the candidate
/// section E(j x, t y) -> E(t x, t y) and r the retraction, which must be
/// post-restriction by eta.
struct SectionData {
    Functor j;
    Functor t;                                   // full carrier functor
    std::map<std::tuple<int, int, int>, int> s;  // (x, y, f in E(jx,ty)) -> E(tx,ty)
    std::map<std::tuple<int, int, int>, int> r;  // (x, y, g in E(tx,ty)) -> E(jx,ty)

    bool equals(const SectionData& o) const {
        return j.ob == o.j.ob && j.mor == o.j.mor && t.ob == o.t.ob &&
               t.mor == o.t.mor && s == o.s && r == o.r;
    }
};

SectionData section_from_monad(const RelativeMonad& T);

struct SectionCheck {
    LawReport report;  // retraction identity, canonical r, both section squares
    std::optional<RelativeMonad> monad;
};

SectionCheck monad_from_section(const SectionData& sd);

}  // namespace rml

#endif
