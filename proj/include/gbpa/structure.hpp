#ifndef GBPA_STRUCTURE_HPP
#define GBPA_STRUCTURE_HPP

#include "gbpa/functors.hpp"

namespace gbpa {

// The simple representation supported at gamma vertex i, sigma_i vertex j.
Representation simple_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

// Indecomposable projective P(i,j), computed as the cone over the
// indecomposable projective A_i-module at j.
Representation projective_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

// The same module computed directly as the submodule e_{ij} * Lambda of the
// right regular module; independent of the cone construction.
Representation projective_direct(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

// rad P(i,j): the vertex-i block shrinks to the radical of P_i^j, all other
// blocks are untouched.
Representation radical_of_projective(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

// Indecomposable injective I(i,j), as the dual cone over the indecomposable
// injective A_i-module at j.
Representation injective_rep(const OppositeData& opp, std::size_t i, std::size_t j);
Representation injective_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

// The same module computed as the dual of e_{ij} * Lambda^op.
Representation injective_direct(const OppositeData& opp, std::size_t i, std::size_t j);
Representation injective_direct(GbpAlgebraPtr lambda, std::size_t i, std::size_t j);

} // namespace gbpa

#endif
