#include "gbpa/functors.hpp"

#include <map>

namespace gbpa {

namespace {

void check_vertex_module(const GbpAlgebra& lam, std::size_t i, const VertexModule& m) {
    if (i >= lam.gamma().vertex_count())
        throw UnknownVertexError("no gamma vertex with index " + std::to_string(i));
    if (m.algebra != lam.vertex_algebra(i))
        throw AlgebraMismatchError("module is not over the algebra at gamma vertex " +
                                   lam.gamma().vertex_name(i));
}

} // namespace

Representation inclusion(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m) {
    check_vertex_module(*lambda, i, m);
    Representation out = zero_representation(lambda);
    out.modules[i] = m;
    const Quiver& gamma = lambda->gamma();
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a)
        out.arrow_maps[a] = Matrix(out.modules[gamma.arrow(a).source].space_dim,
                                   out.modules[gamma.arrow(a).target].space_dim, lambda->field());
    return out;
}

ConeModule cone_module(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m) {
    check_vertex_module(*lambda, i, m);
    const GbpAlgebra& lam = *lambda;
    const FieldSpec& field = lam.field();

    ConeModule out;
    // The slice 1_i Lambda is spanned by the basis classes whose gamma path
    // starts at i (the quotient respects the (source, target) grading).
    for (std::size_t b = 0; b < lam.dim(); ++b)
        if (lam.basis_monomial(b).gpath.source == i) out.slice_basis.push_back(b);
    const std::size_t nx = out.slice_basis.size();
    const std::size_t dm = m.space_dim;
    const std::size_t tensor_dim = dm * nx;

    auto slice_coords = [&](const std::vector<Scalar>& lam_coords) {
        std::vector<Scalar> v(nx);
        for (std::size_t k = 0; k < nx; ++k) v[k] = lam_coords[out.slice_basis[k]];
        return v;
    };
    auto unit = [&](std::size_t b) {
        std::vector<Scalar> v(lam.dim(), Scalar(0));
        v[b] = 1;
        return v;
    };

    // Balancing relations over the base ring: m*a (x) x - m (x) a*x for all
    // basis triples. Only A_i contributes; the other components annihilate
    // both tensor factors.
    Matrix span(0, tensor_dim, field);
    const VertexAlgebra& ai = *m.algebra;
    for (std::size_t a = 0; a < ai.dim(); ++a) {
        std::vector<Scalar> abar = lam.monomial_class(APathMonomial{Path::trivial(i), {a}});
        for (std::size_t x = 0; x < nx; ++x) {
            std::vector<Scalar> ax = slice_coords(lam.multiply(abar, unit(out.slice_basis[x])));
            for (std::size_t mi = 0; mi < dm; ++mi) {
                std::vector<Scalar> row(tensor_dim, Scalar(0));
                std::vector<Scalar> ma = m.action[a].row(mi);
                for (std::size_t mj = 0; mj < dm; ++mj) row[mj * nx + x] = ma[mj];
                for (std::size_t k = 0; k < nx; ++k)
                    row[mi * nx + k] = field.sub(row[mi * nx + k], ax[k]);
                span.append_row(row);
            }
        }
    }
    out.tensor_quotient = quotient_basis(span, tensor_dim);

    LambdaModule mod;
    mod.lambda = lambda;
    mod.space_dim = out.tensor_quotient.free_coords.size();
    mod.action.reserve(lam.dim());
    for (std::size_t g = 0; g < lam.dim(); ++g) {
        // Right action on the second tensor factor.
        Matrix xact(nx, nx, field);
        for (std::size_t x = 0; x < nx; ++x)
            xact.set_row(x, slice_coords(lam.multiply(unit(out.slice_basis[x]), unit(g))));
        Matrix act(mod.space_dim, mod.space_dim, field);
        for (std::size_t r = 0; r < mod.space_dim; ++r) {
            std::size_t t = out.tensor_quotient.free_coords[r];
            std::size_t mi = t / nx, x = t % nx;
            std::vector<Scalar> tv(tensor_dim, Scalar(0));
            for (std::size_t k = 0; k < nx; ++k) tv[mi * nx + k] = xact.at(x, k);
            act.set_row(r, out.tensor_quotient.reduce.apply_col(tv));
        }
        mod.action.push_back(std::move(act));
    }
    out.module = std::move(mod);
    return out;
}

Representation cone(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m) {
    return functor_G(cone_module(lambda, i, m).module);
}

RepMorphism cone_map(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m,
                     const VertexModule& n, const Matrix& f) {
    check_vertex_module(*lambda, i, m);
    check_vertex_module(*lambda, i, n);
    if (f.rows() != m.space_dim || f.cols() != n.space_dim)
        throw Error("module map has the wrong shape");
    ConeModule cm = cone_module(lambda, i, m);
    ConeModule cn = cone_module(lambda, i, n);
    const std::size_t nx = cm.slice_basis.size();
    Matrix map(cm.module.space_dim, cn.module.space_dim, lambda->field());
    for (std::size_t r = 0; r < cm.module.space_dim; ++r) {
        std::size_t t = cm.tensor_quotient.free_coords[r];
        std::size_t mi = t / nx, x = t % nx;
        // f (x) id on the representative, reduced in the target quotient.
        std::vector<Scalar> tv(n.space_dim * nx, Scalar(0));
        for (std::size_t nj = 0; nj < n.space_dim; ++nj) tv[nj * nx + x] = f.at(mi, nj);
        map.set_row(r, cn.tensor_quotient.reduce.apply_col(tv));
    }
    return module_map_to_rep_morphism(cm.module, cn.module, map);
}

OppositeData opposite_algebra(GbpAlgebraPtr lambda) {
    const GbpAlgebra& lam = *lambda;
    const FieldSpec& field = lam.field();
    OppositeData out;
    out.original = lambda;

    std::vector<VertexAlgebraPtr> opalgs;
    std::map<const VertexAlgebra*, VertexAlgebraPtr> seen;
    for (std::size_t i = 0; i < lam.gamma().vertex_count(); ++i) {
        VertexAlgebraPtr a = lam.vertex_algebra(i);
        auto it = seen.find(a.get());
        if (it == seen.end()) {
            OppositeQuiver oq = opposite(a->sigma(), a->omega());
            it = seen.emplace(a.get(), std::make_shared<VertexAlgebra>(build_vertex_algebra(
                                           oq.quiver, oq.relations, field)))
                     .first;
        }
        opalgs.push_back(it->second);
    }
    OppositeQuiver gop = opposite(lam.gamma(), lam.relations());
    out.op = std::make_shared<GbpAlgebra>(
        build_gbp_algebra(gop.quiver, opalgs, gop.relations, field));

    for (std::size_t i = 0; i < opalgs.size(); ++i) {
        const VertexAlgebra& a = *lam.vertex_algebra(i);
        Matrix p(a.dim(), a.dim(), field);
        for (std::size_t b = 0; b < a.dim(); ++b)
            p.set_row(b, opalgs[i]->path_class(reverse_path(a.basis_path(b), a.sigma())));
        out.vertex_phi_inv.push_back(inverse(p));
        out.vertex_phi.push_back(std::move(p));
    }

    // Class-wise monomial reversal: every intercalated element is sent
    // through its vertex transport and the products are expanded on the
    // opposite basis.
    if (lam.dim() != out.op->dim()) throw Error("opposite algebra dimension mismatch");
    Matrix phi(lam.dim(), lam.dim(), field);
    for (std::size_t b = 0; b < lam.dim(); ++b) {
        const APathMonomial& mono = lam.basis_monomial(b);
        const std::size_t r = mono.gpath.length();
        std::vector<std::size_t> visited(r + 1);
        visited[0] = mono.gpath.source;
        for (std::size_t k = 0; k < r; ++k)
            visited[k + 1] = lam.gamma().arrow(mono.gpath.arrows[k]).target;
        Path rp = reverse_path(mono.gpath, lam.gamma());
        std::vector<Scalar> row(lam.dim(), Scalar(0));
        std::vector<std::size_t> d(r + 1, 0);
        while (true) {
            Scalar coeff(1);
            for (std::size_t s = 0; s <= r; ++s)
                coeff = field.mul(coeff, out.vertex_phi[visited[r - s]].at(mono.coeffs[r - s], d[s]));
            if (!field.is_zero(coeff)) {
                std::vector<Scalar> cls = out.op->monomial_class(APathMonomial{rp, d});
                for (std::size_t k = 0; k < row.size(); ++k)
                    row[k] = field.add(row[k], field.mul(coeff, cls[k]));
            }
            std::size_t s = d.size();
            while (s > 0) {
                --s;
                if (++d[s] < opalgs[visited[r - s]]->dim()) break;
                d[s] = 0;
                if (s == 0) {
                    s = d.size() + 1;
                    break;
                }
            }
            if (s == d.size() + 1) break;
        }
        phi.set_row(b, row);
    }
    out.phi_inv = inverse(phi);
    out.phi = std::move(phi);
    return out;
}

VertexModule dual_vertex_module(const OppositeData& opp, std::size_t i, const VertexModule& m) {
    bool forward;
    if (m.algebra == opp.original->vertex_algebra(i))
        forward = true;
    else if (m.algebra == opp.op->vertex_algebra(i))
        forward = false;
    else
        throw AlgebraMismatchError("module is not over either side of gamma vertex " +
                                   std::to_string(i));
    const Matrix& back = forward ? opp.vertex_phi_inv[i] : opp.vertex_phi[i];
    VertexModule out;
    out.algebra = forward ? opp.op->vertex_algebra(i) : opp.original->vertex_algebra(i);
    out.space_dim = m.space_dim;
    out.action.reserve(out.algebra->dim());
    for (std::size_t b = 0; b < out.algebra->dim(); ++b)
        out.action.push_back(m.act(back.row(b)).transposed());
    return out;
}

Representation dual_representation(const OppositeData& opp, const Representation& r) {
    bool forward;
    if (r.lambda == opp.original)
        forward = true;
    else if (r.lambda == opp.op)
        forward = false;
    else
        throw AlgebraMismatchError("representation is not over either side of the duality");
    Representation out;
    out.lambda = forward ? opp.op : opp.original;
    for (std::size_t i = 0; i < r.modules.size(); ++i)
        out.modules.push_back(dual_vertex_module(opp, i, r.modules[i]));
    for (const Matrix& a : r.arrow_maps) out.arrow_maps.push_back(a.transposed());
    return out;
}

Representation dual_cone(const OppositeData& opp, std::size_t i, const VertexModule& m) {
    VertexModule dm = dual_vertex_module(opp, i, m);
    return dual_representation(opp, cone(opp.op, i, dm));
}

Representation dual_cone(GbpAlgebraPtr lambda, std::size_t i, const VertexModule& m) {
    return dual_cone(opposite_algebra(lambda), i, m);
}

} // namespace gbpa
