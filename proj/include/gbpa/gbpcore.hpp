#ifndef GBPA_GBPCORE_HPP
#define GBPA_GBPCORE_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbpa/vertexalg.hpp"

namespace gbpa {

// A basis monomial of the free generalized path space: a path of gamma with
// one vertex-algebra basis index per visited vertex (length + 1 of them).
// Length 0 is a single basis element of the algebra at `gpath.source`.
struct APathMonomial {
    Path gpath;
    std::vector<std::size_t> coeffs;

    bool operator==(const APathMonomial&) const = default;
    bool operator<(const APathMonomial& rhs) const {
        if (gpath == rhs.gpath) return coeffs < rhs.coeffs;
        return gpath < rhs.gpath;
    }
};

class GbpAlgebra;
using GbpAlgebraPtr = std::shared_ptr<const GbpAlgebra>;

// The generalized bound path algebra over (gamma, algebras, relations).
class GbpAlgebra {
public:
    const Quiver& gamma() const { return gamma_; }
    const std::vector<VertexAlgebraPtr>& vertex_algebras() const { return algebras_; }
    VertexAlgebraPtr vertex_algebra(std::size_t i) const { return algebras_[i]; }
    const std::vector<RelationCombo>& relations() const { return relations_; }
    const FieldSpec& field() const { return field_; }
    bool has_multi_term_relation() const { return multi_term_relation_; }

    std::size_t free_dim() const { return free_basis_.size(); }
    const std::vector<APathMonomial>& free_basis() const { return free_basis_; }
    // Reduced rows spanning the relation ideal inside the free space.
    const Matrix& ideal_rows() const { return ideal_rows_; }

    std::size_t dim() const { return basis_.size(); }
    const APathMonomial& basis_monomial(std::size_t b) const { return basis_[b]; }
    std::string basis_name(std::size_t b) const { return monomial_to_string(basis_[b]); }
    std::string monomial_to_string(const APathMonomial& m) const;

    // Quotient coordinates of the class of a free-space vector / monomial.
    std::vector<Scalar> reduce_free(const std::vector<Scalar>& free_vec) const;
    std::vector<Scalar> monomial_class(const APathMonomial& m) const;

    const std::vector<Scalar>& mult(std::size_t x, std::size_t y) const {
        return mult_table_[x * dim() + y];
    }
    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;
    std::vector<Scalar> identity_coords() const;

    // Quotient coordinate of the idempotent class e_{ij} (gamma vertex i,
    // sigma_i vertex j).
    std::size_t idempotent_coord(std::size_t i, std::size_t j) const;
    // Coordinates of 1_i = sum_j e_{ij}.
    std::vector<Scalar> vertex_identity_coords(std::size_t i) const;

    // Free-space product of two monomials (bilinear pieces with nonzero
    // coefficients).
    std::vector<std::pair<Scalar, std::size_t>> free_product(std::size_t x, std::size_t y) const;

    std::size_t free_index(const APathMonomial& m) const;

    friend GbpAlgebra build_gbp_algebra(const Quiver& gamma,
                                        std::vector<VertexAlgebraPtr> algebras,
                                        std::vector<RelationCombo> relations, FieldSpec field);

private:
    Quiver gamma_;
    std::vector<VertexAlgebraPtr> algebras_;
    std::vector<RelationCombo> relations_;
    FieldSpec field_;
    bool multi_term_relation_ = false;
    std::vector<APathMonomial> free_basis_;
    std::map<APathMonomial, std::size_t> free_index_;
    Matrix ideal_rows_;
    QuotientBasis quotient_;
    std::vector<APathMonomial> basis_;
    std::vector<std::vector<Scalar>> mult_table_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> idempotent_coord_;
};

// All free basis monomials in deterministic order (gamma-path order, then
// coefficient tuples lexicographically). Throws CyclicGammaError.
std::vector<APathMonomial> enumerate_free_basis(const Quiver& gamma,
                                                const std::vector<VertexAlgebraPtr>& algebras);

// One free-coordinate vector per independent intercalation choice, boundary
// identities expanded on the basis. Requires an algebra with the free basis
// already enumerated; exposed separately for testing via the builder.
std::vector<std::vector<Scalar>> relation_ideal_generators(const GbpAlgebra& lambda);

GbpAlgebra build_gbp_algebra(const Quiver& gamma, std::vector<VertexAlgebraPtr> algebras,
                             std::vector<RelationCombo> relations,
                             FieldSpec field = FieldSpec());

} // namespace gbpa

#endif
