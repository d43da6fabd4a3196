#ifndef RML_FINCAT_HPP
#define RML_FINCAT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rml/report.hpp"

namespace rml {

/// A finite category as explicit tables. Morphisms carry global integer
/// ids; hom-sets are derived views. The composition table is stored in
/// diagrammatic reading: then(f, g) is "f then g", defined exactly when
/// tgt(f) == src(g).
struct FinCat {
    struct Mor {
        std::string name;
        int src = -1;
        int tgt = -1;
        bool operator==(const Mor&) const = default;
    };

    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity;       // object -> morphism id
    std::vector<int> compose_table;  // flat [f * n_mor + g], -1 when undefined

    int n_ob() const { return static_cast<int>(objects.size()); }
    int n_mor() const { return static_cast<int>(morphisms.size()); }

    int then(int f, int g) const { return compose_table[f * n_mor() + g]; }
    void set_then(int f, int g, int fg) { compose_table[f * n_mor() + g] = fg; }

    /// Morphism ids in hom(a, b), in increasing id order.
    std::vector<int> hom(int a, int b) const;

    bool operator==(const FinCat&) const = default;
};

using CatPtr = std::shared_ptr<const FinCat>;

/// Builder that assigns ids in insertion order and fills the composition
/// table at the end.
struct CatBuilder {
    FinCat cat;
    int add_object(std::string name);
    int add_morphism(std::string name, int src, int tgt);
    void set_identity(int obj, int mor);
    void finish_morphisms();  // allocates the composition table
    void set_compose(int f, int g, int fg) { cat.set_then(f, g, fg); }
    CatPtr build() { return std::make_shared<const FinCat>(std::move(cat)); }
};

struct Functor {
    CatPtr src, dst;
    std::vector<int> ob;   // per src object
    std::vector<int> mor;  // per src morphism

    int on_ob(int a) const { return ob[a]; }
    int on_mor(int f) const { return mor[f]; }
    bool same_maps(const Functor& other) const {
        return ob == other.ob && mor == other.mor;
    }
};

struct NatTransformation {
    Functor f, g;                 // parallel functors
    std::vector<int> components;  // per object of f.src, morphism of f.dst
};

/// A finite presheaf on `base`: a contravariant functor to finite sets.
/// action[f][i] gives the index of value(src f) hit by element i of
/// value(tgt f).
struct Presheaf {
    CatPtr base;
    std::vector<std::vector<std::string>> value;  // per object
    std::vector<std::vector<int>> action;         // per morphism, per element

    int size(int a) const { return static_cast<int>(value[a].size()); }
};

// ---- validation ----

LawReport validate_category(const FinCat& c, const Caps& caps = {});
LawReport validate_functor(const Functor& f);
LawReport validate_presheaf(const Presheaf& p);

// ---- functor algebra ----

Functor identity_functor(const CatPtr& c);
/// Diagrammatic composite: f then g.
Functor compose_functors(const Functor& f, const Functor& g);
bool functors_equal(const Functor& f, const Functor& g);

/// All functors src -> dst, in lexicographic (object map, morphism map)
/// order. Throws CapacityError past `budget` results.
std::vector<Functor> enumerate_functors(const CatPtr& src, const CatPtr& dst,
                                        long budget = 1'000'000);

/// All natural transformations f => g, components chosen in lexicographic
/// object-index order (morphism ids increasing per slot).
std::vector<NatTransformation> enumerate_nat_transformations(const Functor& f,
                                                             const Functor& g);

// ---- duality ----

CatPtr opposite_cat(const CatPtr& c);
Functor opposite_functor(const Functor& f, const CatPtr& src_op,
                         const CatPtr& dst_op);

// ---- pullbacks ----

struct PullbackResult {
    CatPtr apex;
    Functor proj1;  // apex -> src(f)
    Functor proj2;  // apex -> src(g)
    // apex object i corresponds to the pair (pair_ob[i].first in src(f),
    // pair_ob[i].second in src(g)); same for morphisms.
    std::vector<std::pair<int, int>> pair_ob;
    std::vector<std::pair<int, int>> pair_mor;
};

PullbackResult pullback_category(const Functor& f, const Functor& g,
                                 const Caps& caps = {});

/// The mediating functor for a cone (c1, c2) with f.c1 == g.c2.
Functor pullback_mediate(const PullbackResult& pb, const Functor& c1,
                         const Functor& c2);

// ---- recognition ----

struct FullyFaithfulReport {
    bool ok = true;
    std::string witness;  // offending hom pair when !ok
};

FullyFaithfulReport is_fully_faithful(const Functor& f);
bool is_strict_isomorphism(const Functor& f);

}  // namespace rml

#endif
