#ifndef GBPA_REPS_HPP
#define GBPA_REPS_HPP

#include <optional>

#include "gbpa/gbpcore.hpp"

namespace gbpa {

// A representation of Lambda: one vertex-algebra module per gamma vertex
// and one k-linear map per gamma arrow. Arrow maps act on the right of row
// vectors: a map M_s -> M_e is a (dim M_s x dim M_e) matrix.
struct Representation {
    GbpAlgebraPtr lambda;
    std::vector<VertexModule> modules;   // per gamma vertex
    std::vector<Matrix> arrow_maps;      // per gamma arrow

    std::size_t total_dim() const;
};

// A right Lambda-module: one action matrix per quotient-basis class.
struct LambdaModule {
    GbpAlgebraPtr lambda;
    std::size_t space_dim = 0;
    std::vector<Matrix> action;

    Matrix act(const std::vector<Scalar>& coords) const;
    bool action_is_consistent() const;
};

struct RepMorphism {
    std::vector<Matrix> components; // per gamma vertex, (dim M_i x dim N_i)
};

struct RelationWitness {
    std::size_t relation_index;
    std::vector<std::size_t> choice; // intercalation basis classes, slot order
};

// Definition of a representation, condition (iii): every intercalated
// composite of every relation vanishes. Returns the first violation found.
std::optional<RelationWitness> relation_violation(const Representation& r);
bool satisfies_relations(const Representation& r);

// Structural well-formedness (module consistency + map shapes).
void validate_representation(const Representation& r);

// Direct sum with the quasi-inverse pair below.
LambdaModule functor_F(const Representation& r);
Representation functor_G(const LambdaModule& m);

Representation direct_sum(const Representation& m, const Representation& n);
std::vector<std::size_t> dimension_vector(const Representation& m);

Representation zero_representation(GbpAlgebraPtr lambda);

// Basis of Hom(M, N) as representations (A_i-linear components commuting
// with all arrow maps).
std::vector<RepMorphism> hom_space(const Representation& m, const Representation& n);

bool is_identity_morphism(const Representation& m, const RepMorphism& f);
RepMorphism compose(const RepMorphism& f, const RepMorphism& g);
bool morphism_in_span(const std::vector<RepMorphism>& basis, const RepMorphism& f,
                      const FieldSpec& field);

struct IsoResult {
    std::optional<RepMorphism> iso;
    // True when the absence of an isomorphism is certified (dimension
    // vectors differ); false absence is inconclusive (retry budget spent).
    bool certified = false;
};

IsoResult find_isomorphism(const Representation& m, const Representation& n,
                           unsigned retry_budget = 64);

// Morphism of Lambda-modules converted to a morphism of representations
// through the block decomposition that functor_G uses.
RepMorphism module_map_to_rep_morphism(const LambdaModule& src, const LambdaModule& dst,
                                       const Matrix& map);

} // namespace gbpa

#endif
