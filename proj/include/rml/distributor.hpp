#ifndef RML_DISTRIBUTOR_HPP
#define RML_DISTRIBUTOR_HPP

#include <map>
#include <string>
#include <vector>

#include "rml/fincat.hpp"
#include "rml/report.hpp"

namespace rml {

/// A finite two-sided action (profunctor). het(l, r) reads like a hom-set
/// "from l to r": the left action precomposes (contravariant in l), the
/// right action postcomposes (covariant in r). The paper's loose-cell
/// B -|-> A drawn right-to-left is stored with left = A, right = B.
struct Distributor {
    struct Elem {
        std::string name;
        int l = -1;
        int r = -1;
        bool operator==(const Elem&) const = default;
    };

    CatPtr left, right;
    std::vector<Elem> elems;
    std::vector<std::vector<std::vector<int>>> het;  // [l][r] -> elem ids
    // lact[m * n_mor(left) + u] for u : l' -> l with tgt(u) == elems[m].l,
    // result in het(l', r); -1 where not applicable.
    std::vector<int> lact_table;
    // ract[m * n_mor(right) + v] for v : r -> r' with src(v) == elems[m].r,
    // result in het(l, r'); -1 where not applicable.
    std::vector<int> ract_table;
    // For distributors derived from hom-distributors by restriction: the
    // underlying morphism id of the root category. Empty otherwise.
    std::vector<int> parent;

    int n_elems() const { return static_cast<int>(elems.size()); }
    int lact(int u, int m) const { return lact_table[static_cast<size_t>(m) * left->n_mor() + u]; }
    int ract(int m, int v) const { return ract_table[static_cast<size_t>(m) * right->n_mor() + v]; }

    bool same_tables(const Distributor& other) const {
        return *left == *other.left && *right == *other.right &&
               elems == other.elems && het == other.het &&
               lact_table == other.lact_table && ract_table == other.ract_table;
    }
};

LawReport validate_distributor(const Distributor& d, const Caps& caps = {});

/// The hom-distributor of c: het(x, y) = hom(x, y), actions by composition.
Distributor hom_distributor(const CatPtr& c);

/// Restriction p(f, g): het'(x, y) = het(f x, g y), actions by pre-applying
/// f and g. Strictly functorial: restricting by identities is the identity
/// and iterated restrictions compose, bit-exactly.
Distributor restrict_distributor(const Distributor& p, const Functor& f,
                                 const Functor& g);

/// The conjoint E(j, 1) of j : A -> E: het(a, e) = E(j a, e).
Distributor conjoint(const Functor& j);

/// All morphisms of left modules from column r to column r': families
/// het(l, r) -> het(l, r') commuting with the left action. Each result maps
/// elem id -> elem id.
std::vector<std::map<int, int>> left_module_morphisms(const Distributor& p,
                                                      int r, int r_prime);

struct DensityReport {
    bool ok = true;
    std::string witness;
};

/// Density of a loose-cell, concretely: for all objects r, r' of the right
/// category, the canonical map right(r, r') -> {left-module morphisms
/// het(-, r) -> het(-, r')} is a bijection.
DensityReport distributor_dense(const Distributor& p);

// ---- multi-ary 2-cells between distributor chains ----

/// A 2-cell from a composable chain s1 : X0 -|-> X1, ..., sn : X(n-1) -|-> Xn
/// to a target q : X0 -|-> Xn. For n = 0 the source is the empty chain at
/// X0 = Xn and the cell is a component family over objects.
struct ChainTwoCell {
    std::vector<const Distributor*> chain;
    const Distributor* target = nullptr;
    std::vector<int> comp0;                 // n == 0: per object, elem of q(x, x)
    std::map<std::vector<int>, int> table;  // n >= 1: composable tuple -> q elem
};

LawReport validate_two_cell(const ChainTwoCell& c);

/// All valid 2-cells chain => target, deterministic order. Throws
/// CapacityError past `budget` results.
std::vector<ChainTwoCell> enumerate_two_cells(
    const std::vector<const Distributor*>& chain, const Distributor& target,
    long budget = 200'000);

/// All composable element tuples of a chain, lexicographic.
std::vector<std::vector<int>> chain_tuples(
    const std::vector<const Distributor*>& chain);

// ---- pullback 2-cell property ----

struct TwoCellPropertyReport {
    bool ok = true;
    std::string detail;
};

/// Checks the 2-dimensional universal property of a pullback of categories
/// over a finite test universe: for each ordered pair of cones over a common
/// domain and each chain of endo-distributors on that domain, every
/// compatible pair of leg 2-cells factors through the apex uniquely.
TwoCellPropertyReport pullback_two_cell_property(
    const PullbackResult& pb, const Functor& f, const Functor& g,
    const std::vector<std::pair<Functor, Functor>>& cones,
    const std::vector<std::vector<const Distributor*>>& chains);

}  // namespace rml

#endif
