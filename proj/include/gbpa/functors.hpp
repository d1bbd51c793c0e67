#ifndef GBPA_FUNCTORS_HPP
#define GBPA_FUNCTORS_HPP

#include "gbpa/reps.hpp"

namespace gbpa {

// Place an A_i-module at gamma vertex i, zero everywhere else.
Representation inclusion(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m);

// Extension of scalars M (x)_{A_i} 1_i Lambda, as a representation. Computed
// as the quotient of the plain tensor space M (x)_k (1_i Lambda) by the span
// of { m*a (x) x  -  m (x) a*x }, with the inherited right action.
Representation cone(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m);

// Intermediate data of the cone, exposed so that maps can be pushed through
// the same quotient coordinates.
struct ConeModule {
    std::vector<std::size_t> slice_basis; // algebra basis classes spanning 1_i Lambda
    QuotientBasis tensor_quotient;        // over module_dim * slice_basis.size()
    LambdaModule module;
};

ConeModule cone_module(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m);

// f (x) id on tensor representatives, descended to the cone quotients.
// f is a (dim m x dim n) A_i-module map.
RepMorphism cone_map(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m,
                     const VertexModule& n, const Matrix& f);

// The opposite algebra together with the monomial-reversal anti-isomorphism,
// given on the quotient bases as invertible matrices (reversal permutes the
// vertex-algebra classes but mixes the deterministic basis order, so the
// transport is a linear map rather than an index bijection).
struct OppositeData {
    GbpAlgebraPtr original;
    GbpAlgebraPtr op;
    std::vector<Matrix> vertex_phi;     // basis of A_i -> coords in A_i^op
    std::vector<Matrix> vertex_phi_inv; // basis of A_i^op -> coords in A_i
    Matrix phi;                         // basis of Lambda -> coords in Lambda^op
    Matrix phi_inv;
};

OppositeData opposite_algebra(GbpAlgebraPtr lambda);

// Vector-space dual of a module over A_i (or A_i^op), as a module over the
// other side: the action of b is the transpose of the action of phi^{-1}(b).
VertexModule dual_vertex_module(const OppositeData& opp, std::size_t i, const VertexModule& m);

// Dual of a representation: spaces dualized in coordinates, arrow maps
// transposed and attached to the reversed arrows. Works in both directions
// (the side is read off r.lambda).
Representation dual_representation(const OppositeData& opp, const Representation& r);

// Dual cone: the dual of the cone of the dual module, taken over the
// opposite algebra; spreads M backward along the paths into i.
Representation dual_cone(const OppositeData& opp, std::size_t i, const VertexModule& m);
Representation dual_cone(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m);

} // namespace gbpa

#endif
