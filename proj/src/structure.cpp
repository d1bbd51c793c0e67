#include "gbpa/structure.hpp"

namespace gbpa {

namespace {

void check_indices(const GbpAlgebra& lam, std::size_t i, std::size_t j) {
    if (i >= lam.gamma().vertex_count())
        throw UnknownVertexError("no gamma vertex with index " + std::to_string(i));
    if (j >= lam.vertex_algebra(i)->vertex_count())
        throw UnknownVertexError("no sigma vertex with index " + std::to_string(j) +
                                 " at gamma vertex " + lam.gamma().vertex_name(i));
}

} // namespace

Representation simple_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    check_indices(*lambda, i, j);
    return inclusion(lambda, i, simple(lambda->vertex_algebra(i), j));
}

Representation projective_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    check_indices(*lambda, i, j);
    return cone(lambda, i, projective(lambda->vertex_algebra(i), j));
}

Representation projective_direct(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    check_indices(*lambda, i, j);
    const GbpAlgebra& lam = *lambda;
    const FieldSpec& field = lam.field();
    const std::size_t e = lam.idempotent_coord(i, j);

    // Rows spanning e_{ij} * Lambda inside the regular module.
    Matrix span(0, lam.dim(), field);
    for (std::size_t x = 0; x < lam.dim(); ++x) span.append_row(lam.mult(e, x));
    Matrix rows = rref(span).reduced;

    LambdaModule sub;
    sub.lambda = lambda;
    sub.space_dim = rows.rows();
    sub.action.reserve(lam.dim());
    for (std::size_t g = 0; g < lam.dim(); ++g) {
        std::vector<Scalar> eg(lam.dim(), Scalar(0));
        eg[g] = 1;
        Matrix act(sub.space_dim, sub.space_dim, field);
        for (std::size_t r = 0; r < sub.space_dim; ++r)
            act.set_row(r, coords_in_rowspace(rows, lam.multiply(rows.row(r), eg)));
        sub.action.push_back(std::move(act));
    }
    return functor_G(sub);
}

Representation radical_of_projective(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    Representation p = projective_rep(lambda, i, j);
    Submodule rad = radical(p.modules[i]);
    Representation out = p;
    out.modules[i] = rad.module;
    const Quiver& gamma = lambda->gamma();
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        if (ar.source == i) out.arrow_maps[a] = rad.inclusion * p.arrow_maps[a];
        if (ar.target == i) {
            Matrix cor(p.arrow_maps[a].rows(), rad.module.space_dim, lambda->field());
            for (std::size_t r = 0; r < cor.rows(); ++r)
                cor.set_row(r, coords_in_rowspace(rad.inclusion, p.arrow_maps[a].row(r)));
            out.arrow_maps[a] = std::move(cor);
        }
    }
    return out;
}

Representation injective_rep(const OppositeData& opp, std::size_t i, std::size_t j) {
    check_indices(*opp.original, i, j);
    return dual_cone(opp, i, injective(opp.original->vertex_algebra(i), j));
}

Representation injective_rep(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    return injective_rep(opposite_algebra(lambda), i, j);
}

Representation injective_direct(const OppositeData& opp, std::size_t i, std::size_t j) {
    check_indices(*opp.original, i, j);
    // Lambda * e_{ij} is e_{ij} * Lambda^op; dualizing it back gives the
    // injective envelope of the simple at (i, j).
    return dual_representation(opp, projective_direct(opp.op, i, j));
}

Representation injective_direct(GbpAlgebraPtr lambda, std::size_t i, std::size_t j) {
    return injective_direct(opposite_algebra(lambda), i, j);
}

} // namespace gbpa
