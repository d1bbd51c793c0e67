#include "gbpa/gbpcore.hpp"

#include <algorithm>

namespace gbpa {

std::vector<APathMonomial> enumerate_free_basis(const Quiver& gamma,
                                                const std::vector<VertexAlgebraPtr>& algebras) {
    if (!is_acyclic(gamma)) throw CyclicGammaError("gamma has a directed cycle");
    std::vector<APathMonomial> out;
    // Acyclic: every path has length < vertex count.
    for (const Path& p : enumerate_all_paths(gamma, gamma.vertex_count())) {
        // One coefficient slot per visited vertex.
        std::vector<std::size_t> dims;
        dims.push_back(algebras[p.source]->dim());
        std::size_t at = p.source;
        for (std::size_t a : p.arrows) {
            at = gamma.arrow(a).target;
            dims.push_back(algebras[at]->dim());
        }
        std::vector<std::size_t> tuple(dims.size(), 0);
        while (true) {
            out.push_back({p, tuple});
            // lexicographic increment
            std::size_t k = tuple.size();
            while (k > 0) {
                --k;
                if (++tuple[k] < dims[k]) break;
                tuple[k] = 0;
                if (k == 0) {
                    k = tuple.size() + 1;
                    break;
                }
            }
            if (k == tuple.size() + 1) break;
        }
    }
    return out;
}

std::size_t GbpAlgebra::free_index(const APathMonomial& m) const {
    auto it = free_index_.find(m);
    if (it == free_index_.end()) throw Error("monomial outside the free basis");
    return it->second;
}

std::vector<std::pair<Scalar, std::size_t>> GbpAlgebra::free_product(std::size_t x,
                                                                     std::size_t y) const {
    const APathMonomial& a = free_basis_[x];
    const APathMonomial& b = free_basis_[y];
    std::size_t junction = a.gpath.target(gamma_);
    if (junction != b.gpath.source) return {};
    const VertexAlgebra& alg = *algebras_[junction];
    const auto& coeff = alg.mult(a.coeffs.back(), b.coeffs.front());
    std::vector<std::pair<Scalar, std::size_t>> out;
    APathMonomial prod;
    prod.gpath = a.gpath;
    prod.gpath.arrows.insert(prod.gpath.arrows.end(), b.gpath.arrows.begin(),
                             b.gpath.arrows.end());
    prod.coeffs.assign(a.coeffs.begin(), a.coeffs.end() - 1);
    prod.coeffs.push_back(0); // junction slot, filled per term
    prod.coeffs.insert(prod.coeffs.end(), b.coeffs.begin() + 1, b.coeffs.end());
    const std::size_t slot = a.coeffs.size() - 1;
    for (std::size_t t = 0; t < coeff.size(); ++t) {
        if (field_.is_zero(coeff[t])) continue;
        prod.coeffs[slot] = t;
        out.emplace_back(coeff[t], free_index(prod));
    }
    return out;
}

std::vector<std::vector<Scalar>> relation_ideal_generators(const GbpAlgebra& lambda) {
    const Quiver& gamma = lambda.gamma();
    std::vector<std::vector<Scalar>> out;
    for (const RelationCombo& rel : lambda.relations()) {
        validate_relation(gamma, rel);
        // Mixed-radix enumeration over one intercalation slot per internal
        // junction of every term; choices across terms are independent.
        struct Slot {
            std::size_t term;
            std::size_t pos;   // coefficient slot within the monomial
            std::size_t dim;
        };
        std::vector<Slot> slots;
        for (std::size_t r = 0; r < rel.terms.size(); ++r) {
            const Path& p = rel.terms[r].second;
            std::size_t at = p.source;
            for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k) {
                at = gamma.arrow(p.arrows[k]).target;
                slots.push_back({r, k + 1, lambda.vertex_algebra(at)->dim()});
            }
        }
        std::vector<std::size_t> choice(slots.size(), 0);
        const std::size_t src = rel.terms.front().second.source;
        const std::size_t dst = rel.terms.front().second.target(gamma);
        const VertexAlgebra& asrc = *lambda.vertex_algebra(src);
        const VertexAlgebra& adst = *lambda.vertex_algebra(dst);
        while (true) {
            std::vector<Scalar> gen(lambda.free_dim(), Scalar(0));
            for (std::size_t r = 0; r < rel.terms.size(); ++r) {
                const auto& [coeff, p] = rel.terms[r];
                APathMonomial m;
                m.gpath = p;
                m.coeffs.assign(p.arrows.size() + 1, 0);
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s].term == r) m.coeffs[slots[s].pos] = choice[s];
                // Boundary identities expanded on the trivial-path classes.
                for (std::size_t js = 0; js < asrc.vertex_count(); ++js) {
                    m.coeffs.front() = asrc.idempotent_index(js);
                    for (std::size_t jd = 0; jd < adst.vertex_count(); ++jd) {
                        m.coeffs.back() = adst.idempotent_index(jd);
                        std::size_t idx = lambda.free_index(m);
                        gen[idx] = lambda.field().add(gen[idx], coeff);
                    }
                }
            }
            out.push_back(std::move(gen));
            std::size_t k = choice.size();
            while (k > 0) {
                --k;
                if (++choice[k] < slots[k].dim) break;
                choice[k] = 0;
                if (k == 0) {
                    k = choice.size() + 1;
                    break;
                }
            }
            if (choice.empty() || k == choice.size() + 1) break;
        }
    }
    return out;
}

GbpAlgebra build_gbp_algebra(const Quiver& gamma, std::vector<VertexAlgebraPtr> algebras,
                             std::vector<RelationCombo> relations, FieldSpec field) {
    if (!is_acyclic(gamma)) throw CyclicGammaError("gamma has a directed cycle");
    if (algebras.size() != gamma.vertex_count())
        throw Error("one vertex algebra required per gamma vertex");

    GbpAlgebra lam;
    lam.gamma_ = gamma;
    lam.algebras_ = std::move(algebras);
    lam.relations_ = std::move(relations);
    lam.field_ = field;
    for (const RelationCombo& rel : lam.relations_)
        if (rel.terms.size() > 1) lam.multi_term_relation_ = true;

    lam.free_basis_ = enumerate_free_basis(gamma, lam.algebras_);
    for (std::size_t i = 0; i < lam.free_basis_.size(); ++i)
        lam.free_index_[lam.free_basis_[i]] = i;
    const std::size_t N = lam.free_dim();

    // Span of { u * g * v } over basis monomials u, v and the implicit
    // identity; the span is already two-sided.
    std::vector<std::vector<Scalar>> gens = relation_ideal_generators(lam);
    RowSpan span(N, field);
    auto left_mul = [&](std::size_t u, const std::vector<Scalar>& v) {
        std::vector<Scalar> out(N, Scalar(0));
        for (std::size_t i = 0; i < N; ++i) {
            if (field.is_zero(v[i])) continue;
            for (const auto& [c, idx] : lam.free_product(u, i))
                out[idx] = field.add(out[idx], field.mul(v[i], c));
        }
        return out;
    };
    auto right_mul = [&](const std::vector<Scalar>& v, std::size_t u) {
        std::vector<Scalar> out(N, Scalar(0));
        for (std::size_t i = 0; i < N; ++i) {
            if (field.is_zero(v[i])) continue;
            for (const auto& [c, idx] : lam.free_product(i, u))
                out[idx] = field.add(out[idx], field.mul(v[i], c));
        }
        return out;
    };
    for (const auto& g : gens) {
        for (std::size_t u = 0; u <= N; ++u) {
            std::vector<Scalar> ug = (u == N) ? g : left_mul(u, g);
            bool zero = true;
            for (const auto& x : ug) zero = zero && field.is_zero(x);
            if (zero) continue;
            for (std::size_t v = 0; v <= N; ++v)
                span.add(v == N ? ug : right_mul(ug, v));
        }
    }
    lam.ideal_rows_ = span.rows();
    lam.quotient_ = quotient_basis(lam.ideal_rows_, N);
    for (std::size_t c : lam.quotient_.free_coords) lam.basis_.push_back(lam.free_basis_[c]);

    const std::size_t dim = lam.basis_.size();
    lam.mult_table_.assign(dim * dim, std::vector<Scalar>(dim, Scalar(0)));
    for (std::size_t x = 0; x < dim; ++x) {
        std::size_t fx = lam.quotient_.free_coords[x];
        for (std::size_t y = 0; y < dim; ++y) {
            std::size_t fy = lam.quotient_.free_coords[y];
            auto& cell = lam.mult_table_[x * dim + y];
            for (const auto& [c, idx] : lam.free_product(fx, fy))
                for (std::size_t r = 0; r < dim; ++r)
                    cell[r] = field.add(cell[r], field.mul(c, lam.quotient_.reduce.at(r, idx)));
        }
    }

    // Relation terms have gamma-path length >= 2, so every length-0 monomial
    // survives and idempotent classes are genuine basis elements.
    for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
        const VertexAlgebra& a = *lam.algebras_[i];
        for (std::size_t j = 0; j < a.vertex_count(); ++j) {
            APathMonomial m{Path::trivial(i), {a.idempotent_index(j)}};
            std::size_t fidx = lam.free_index(m);
            auto it = std::find(lam.quotient_.free_coords.begin(),
                                lam.quotient_.free_coords.end(), fidx);
            if (it == lam.quotient_.free_coords.end())
                throw Error("idempotent class died in the quotient");
            lam.idempotent_coord_[{i, j}] =
                static_cast<std::size_t>(it - lam.quotient_.free_coords.begin());
        }
    }
    return lam;
}

std::vector<Scalar> GbpAlgebra::reduce_free(const std::vector<Scalar>& free_vec) const {
    return quotient_.reduce.apply_col(free_vec);
}

std::vector<Scalar> GbpAlgebra::monomial_class(const APathMonomial& m) const {
    std::vector<Scalar> out(dim(), Scalar(0));
    std::size_t idx = free_index(m);
    for (std::size_t r = 0; r < dim(); ++r) out[r] = quotient_.reduce.at(r, idx);
    return out;
}

std::vector<Scalar> GbpAlgebra::multiply(const std::vector<Scalar>& x,
                                         const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim(), Scalar(0));
    for (std::size_t a = 0; a < dim(); ++a) {
        if (field_.is_zero(x[a])) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (field_.is_zero(y[b])) continue;
            Scalar c = field_.mul(x[a], y[b]);
            const auto& cell = mult(a, b);
            for (std::size_t k = 0; k < dim(); ++k)
                out[k] = field_.add(out[k], field_.mul(c, cell[k]));
        }
    }
    return out;
}

std::vector<Scalar> GbpAlgebra::identity_coords() const {
    std::vector<Scalar> out(dim(), Scalar(0));
    for (const auto& [key, coord] : idempotent_coord_) out[coord] = 1;
    return out;
}

std::size_t GbpAlgebra::idempotent_coord(std::size_t i, std::size_t j) const {
    auto it = idempotent_coord_.find({i, j});
    if (it == idempotent_coord_.end())
        throw UnknownVertexError("no idempotent for (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
    return it->second;
}

std::vector<Scalar> GbpAlgebra::vertex_identity_coords(std::size_t i) const {
    if (i >= gamma_.vertex_count()) throw UnknownVertexError("no such gamma vertex");
    std::vector<Scalar> out(dim(), Scalar(0));
    for (std::size_t j = 0; j < algebras_[i]->vertex_count(); ++j)
        out[idempotent_coord(i, j)] = 1;
    return out;
}

std::string GbpAlgebra::monomial_to_string(const APathMonomial& m) const {
    std::string out;
    std::size_t at = m.gpath.source;
    out += "[" + algebras_[at]->basis_name(m.coeffs[0]) + "]@" + gamma_.vertex_name(at);
    for (std::size_t k = 0; k < m.gpath.arrows.size(); ++k) {
        const Arrow& a = gamma_.arrow(m.gpath.arrows[k]);
        at = a.target;
        out += " " + a.name + " [" + algebras_[at]->basis_name(m.coeffs[k + 1]) + "]@" +
               gamma_.vertex_name(at);
    }
    return out;
}

} // namespace gbpa
