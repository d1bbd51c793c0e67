#ifndef GBPA_VERTEXALG_HPP
#define GBPA_VERTEXALG_HPP

#include <map>
#include <memory>
#include <vector>

#include "gbpa/linalg.hpp"
#include "gbpa/quiver.hpp"

namespace gbpa {

constexpr std::size_t kDefaultMaxPathLen = 64;

// A basic finite-dimensional algebra presented as a bound quiver algebra
// k(sigma)/(omega). The basis consists of path residue classes, ordered by
// representative path length then lexicographically.
class VertexAlgebra {
public:
    VertexAlgebra() = default;

    const Quiver& sigma() const { return sigma_; }
    const std::vector<RelationCombo>& omega() const { return omega_; }
    const FieldSpec& field() const { return field_; }

    std::size_t dim() const { return basis_paths_.size(); }
    // Representative path of basis class b.
    const Path& basis_path(std::size_t b) const { return basis_paths_[b]; }
    // Coordinates of class(x) * class(y) on the basis.
    const std::vector<Scalar>& mult(std::size_t x, std::size_t y) const {
        return mult_table_[x * dim() + y];
    }
    // Basis index of the trivial-path class at sigma-vertex j.
    std::size_t idempotent_index(std::size_t j) const { return idempotent_index_[j]; }
    std::size_t vertex_count() const { return sigma_.vertex_count(); }

    std::vector<Scalar> identity_coords() const;
    std::vector<Scalar> multiply(const std::vector<Scalar>& x, const std::vector<Scalar>& y) const;

    // Reduce the class of an arbitrary path of sigma to basis coordinates
    // (zero when the path lies in the ideal).
    std::vector<Scalar> path_class(const Path& p) const;

    std::string basis_name(std::size_t b) const;

    friend VertexAlgebra build_vertex_algebra(const Quiver& sigma,
                                              const std::vector<RelationCombo>& omega,
                                              FieldSpec field, std::size_t max_len);

private:
    Quiver sigma_;
    std::vector<RelationCombo> omega_;
    FieldSpec field_;
    std::vector<Path> basis_paths_;
    std::vector<std::vector<Scalar>> mult_table_;
    std::vector<std::size_t> idempotent_index_;
    // Paths enumerated up to the effective cutoff, with the quotient map.
    std::vector<Path> ambient_paths_;
    std::map<Path, std::size_t> ambient_index_;
    QuotientBasis quotient_;
    // Paths of length >= zero_len_ are in the ideal (ambient cutoff).
    std::size_t zero_len_ = 0;
};

using VertexAlgebraPtr = std::shared_ptr<const VertexAlgebra>;

// Throws NotFiniteDimensionalError if paths survive at max_len in a cyclic
// sigma.
VertexAlgebra build_vertex_algebra(const Quiver& sigma, const std::vector<RelationCombo>& omega,
                                   FieldSpec field = FieldSpec(),
                                   std::size_t max_len = kDefaultMaxPathLen);

// A finite-dimensional right module given by one action matrix per algebra
// basis class; coordinates are row vectors, action multiplies on the right.
struct VertexModule {
    VertexAlgebraPtr algebra;
    std::size_t space_dim = 0;
    std::vector<Matrix> action; // one (space_dim x space_dim) matrix per basis class

    Matrix act(const std::vector<Scalar>& algebra_coords) const;
    bool action_is_consistent() const;
};

VertexModule zero_module(VertexAlgebraPtr a);
VertexModule regular_module(VertexAlgebraPtr a);
VertexModule direct_sum(const VertexModule& m, const VertexModule& n);

// The right module e_{j}A (classes of paths starting at j).
VertexModule projective(VertexAlgebraPtr a, std::size_t j);
// The dual of the left module A e_{j} (classes of paths ending at j).
VertexModule injective(VertexAlgebraPtr a, std::size_t j);
// One-dimensional top of projective(a, j).
VertexModule simple(VertexAlgebraPtr a, std::size_t j);

// Submodule m * rad(A), with the inclusion into m (rows = basis of the
// radical subspace in m's coordinates).
struct Submodule {
    VertexModule module;
    Matrix inclusion; // (module.space_dim x m.space_dim)
};

Submodule radical(const VertexModule& m);

// Restrict m's action to an invariant row space (rows independent).
VertexModule restrict_module(const VertexModule& m, const Matrix& rows);

// Build a module from a representation of sigma: one dimension per sigma
// vertex and one matrix per sigma arrow (row convention). Throws
// RelationViolationError when the matrices do not satisfy omega.
VertexModule module_from_sigma_rep(VertexAlgebraPtr a, const std::vector<std::size_t>& dims,
                                   const std::vector<Matrix>& arrow_maps);

} // namespace gbpa

#endif
