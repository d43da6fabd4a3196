#ifndef RML_CORPUS_HPP
#define RML_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rml/quantale.hpp"
#include "rml/relmonad.hpp"
#include "rml/report.hpp"

namespace rml {

struct CorpusSpec {
    std::uint64_t seed = 0;
    int count = 0;
    int max_objects = 4;  // objects of the ambient category
    int max_hom = 3;      // elements per nonempty hom
    bool density_required = false;
};

struct CorpusInstance {
    std::string id;
    RelativeMonad monad;
};

/// Seed-deterministic rejection sampling of relative monads. Ambient
/// categories are group-enriched preorders (hom(x, y) is a cyclic group of
/// size <= max_hom when x <= y, empty otherwise), roots are full-subcategory
/// inclusions, units are sampled and extensions solved for; instances whose
/// extension operator violates a law are skipped. Throws InputError on a
/// nonsensical spec and CapacityError when the retry budget is exhausted
/// before `count` instances are produced.
std::vector<CorpusInstance> generate_corpus(const CorpusSpec& spec);

struct VCorpusInstance {
    std::string id;
    VRelMonad monad;
};

/// Exhaustive quantale-instance corpus: every preorder base with at most
/// max_points objects (up to isomorphism) embedded into q at unit/bottom,
/// every full sub-preorder root (dense ones only when dense_only), and
/// every valid carrier map. Deterministic by construction.
std::vector<VCorpusInstance> generate_v_corpus(const QuantalePtr& q,
                                               int max_points, bool dense_only);

}  // namespace rml

#endif
