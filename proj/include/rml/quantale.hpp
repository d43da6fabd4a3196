#ifndef RML_QUANTALE_HPP
#define RML_QUANTALE_HPP

#include <memory>
#include <string>
#include <vector>

#include "rml/report.hpp"

namespace rml {

/// A finite quantale: a complete lattice with a monotone monoid structure
/// that is closed on both sides. Residual tables may be supplied or derived.
struct Quantale {
    std::vector<std::string> elements;
    std::vector<char> leq_table;    // n*n, leq_table[a*n+b] iff a <= b
    std::vector<int> tensor_table;  // n*n
    int unit = -1;
    std::vector<int> lres_table;  // a <= lres(b, c) iff a (x) b <= c
    std::vector<int> rres_table;  // b <= rres(a, c) iff a (x) b <= c

    bool operator==(const Quantale&) const = default;
    int n() const { return static_cast<int>(elements.size()); }
    bool leq(int a, int b) const { return leq_table[static_cast<size_t>(a) * n() + b]; }
    int tensor(int a, int b) const { return tensor_table[static_cast<size_t>(a) * n() + b]; }
    int lres(int b, int c) const { return lres_table[static_cast<size_t>(b) * n() + c]; }
    int rres(int a, int c) const { return rres_table[static_cast<size_t>(a) * n() + c]; }

    /// Join / meet of an arbitrary subset given by a membership mask;
    /// returns -1 when the bound does not exist.
    int join(const std::vector<char>& mask) const;
    int meet(const std::vector<char>& mask) const;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

/// Fills lres/rres from order and tensor (joins of the defining sets).
void derive_residuals(Quantale& q);

LawReport validate_quantale(const Quantale& q);

/// The n-chain 0 <= ... <= n-1 with tensor = min and unit = top.
QuantalePtr chain_quantale(int n);
/// The two-element quantale of truth values.
QuantalePtr bool_quantale();
/// The powerset of {0, ..., nbits-1} under union-as-join, tensor =
/// intersection, unit = full set.
QuantalePtr powerset_quantale(int nbits);

/// A category enriched in a quantale (thin V-Cat): hom(x, y) is a lattice
/// element; composition is the inequality hom(x,y) (x) hom(y,z) <= hom(x,z)
/// in diagrammatic tensor order.
struct VCat {
    QuantalePtr q;
    std::vector<std::string> objects;
    std::vector<int> hom_table;  // n*n element ids

    int n_ob() const { return static_cast<int>(objects.size()); }
    int hom(int x, int y) const { return hom_table[static_cast<size_t>(x) * n_ob() + y]; }
    bool operator==(const VCat& o) const {
        return objects == o.objects && hom_table == o.hom_table;
    }
};

using VCatPtr = std::shared_ptr<const VCat>;

LawReport validate_vcat(const VCat& a);

/// A V-functor between thin V-categories: an object map with
/// hom(x, y) <= hom(f x, f y).
struct VFunctor {
    VCatPtr src, dst;
    std::vector<int> ob;
};

LawReport validate_vfunctor(const VFunctor& f);

/// A preorder presented as a V-category over the two-element quantale.
VCatPtr preorder_vcat(const std::vector<std::string>& objects,
                      const std::vector<char>& leq);

/// All preorders on n points up to isomorphism (V-categories over bool);
/// counts for n = 1..5 are 1, 3, 9, 33, 139.
std::vector<VCatPtr> enumerate_preorders(int n);

/// The presheaf object P A: objects are the down-closed value maps
/// p : ob(A) -> V with A(a', a) (x) p(a) <= p(a'), in lexicographic order;
/// hom(p, q) = meet over a of rres(p(a), q(a)); pi(a, p) = p(a).
struct PresheafObjectResult {
    VCatPtr pa;
    std::vector<std::vector<int>> presheaves;  // per object of pa, the value map
    std::vector<int> yo;                       // per object of A, its representable
    LawReport certificate;  // P A valid, Yoneda, right-lift law
};

PresheafObjectResult v_presheaf_object(const VCatPtr& a, const Caps& caps = {});

/// A V-distributor X -|-> A: a value map d(a, x) with both module
/// inequalities. Classification counts these against V-functors X -> P A
/// and checks the canonical correspondence is a bijection.
struct ClassificationReport {
    long distributors = 0;
    long functors = 0;
    LawReport report;
};

ClassificationReport v_classify(const VCatPtr& x, const VCatPtr& a,
                                const PresheafObjectResult& pa);

/// The nerve of a V-functor j : A -> E, landing in P A:
/// n(e)(a) = E(j a, e), with the relative-adjunction certificate
/// E(j a, e) = P A(yo a, n e).
struct VNerveResult {
    VFunctor n;
    LawReport certificate;
};

VNerveResult v_nerve(const VFunctor& j, const PresheafObjectResult& pa);

struct VDenseReport {
    bool ok = true;
    std::string witness;
};

/// Density of j: the nerve is hom-equal, E(e, e') = P A(n e, n e').
VDenseReport v_dense(const VFunctor& j);

/// A j-relative monad in the thin setting: the data reduces to the two
/// inequality families (unit and extension witnesses).
struct VRelMonad {
    VFunctor j;
    std::vector<int> t_ob;
};

LawReport validate_vrel_monad(const VRelMonad& t);

/// A loose monad on a thin base: a carrier with A(x,y) <= c(x,y),
/// c(x,y) (x) c(y,z) <= c(x,z), and the bimodule compatibilities.
struct VLooseMonad {
    VCatPtr base;
    std::vector<int> carrier;  // n*n element ids

    int c(int x, int y) const {
        return carrier[static_cast<size_t>(x) * base->n_ob() + y];
    }
};

LawReport check_v_loose_monad(const VLooseMonad& lm);

struct VNerveTheoremReport {
    bool monad_ok = false;
    bool dense = false;
    std::string dense_witness;
    bool comparison_iso = false;
    bool semanticiser_match = false;
    VCatPtr alg;   // full sub-V-category of E on the algebra objects
    VCatPtr apex;  // pullback of the nerve against the restriction functor
    LawReport consistency;
};

/// The enriched nerve theorem: builds Kl(T), Alg(T), P A, P(Kl(T)), the
/// restriction functor and the pullback, and compares the comparison
/// Alg(T) -> pullback for isomorphy; cross-checks the directly built
/// semanticiser apex against the presheaf pullback.
VNerveTheoremReport v_check_nerve_theorem(const VRelMonad& t, const Caps& caps = {});

struct YoBijectionReport {
    long loose_count = 0;
    long monad_count = 0;
    bool bijection_ok = false;
    bool roundtrip_ok = false;
    bool collapse_ok = false;       // Kl of each yo-monad equals the collapse
    bool alg_presheaf_ok = false;   // Alg(T) equals P(collapse) objectwise
    LawReport report;
};

/// Enumerates all yo_A-relative monads and all loose monads on A and
/// verifies the bijection T |-> P A(yo, T), its inverse, and the collapse
/// corollaries.
YoBijectionReport v_yo_monad_bijection(const VCatPtr& a, const Caps& caps = {});

}  // namespace rml

#endif
