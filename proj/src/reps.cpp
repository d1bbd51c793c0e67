#include "gbpa/reps.hpp"

#include <random>
#include <sstream>

namespace gbpa {

namespace {

// Composite map of a gamma path with a chosen algebra action at every
// visited vertex: act(c_0) * M_{beta_1} * act(c_1) * ... * M_{beta_r}
// * act(c_r), as a map from the source block to the target block.
Matrix monomial_block_map(const Representation& r, const Path& p,
                          const std::vector<Matrix>& vertex_acts) {
    Matrix out = vertex_acts.front();
    for (std::size_t k = 0; k < p.arrows.size(); ++k)
        out = out * r.arrow_maps[p.arrows[k]] * vertex_acts[k + 1];
    return out;
}

std::vector<std::size_t> block_offsets(const Representation& r) {
    std::vector<std::size_t> off(r.modules.size() + 1, 0);
    for (std::size_t i = 0; i < r.modules.size(); ++i)
        off[i + 1] = off[i] + r.modules[i].space_dim;
    return off;
}

} // namespace

std::size_t Representation::total_dim() const {
    std::size_t d = 0;
    for (const VertexModule& m : modules) d += m.space_dim;
    return d;
}

Matrix LambdaModule::act(const std::vector<Scalar>& coords) const {
    Matrix out(space_dim, space_dim, lambda->field());
    for (std::size_t b = 0; b < coords.size(); ++b)
        if (!lambda->field().is_zero(coords[b])) out = out + action[b].scaled(coords[b]);
    return out;
}

bool LambdaModule::action_is_consistent() const {
    const std::size_t d = lambda->dim();
    if (action.size() != d) return false;
    for (const Matrix& a : action)
        if (a.rows() != space_dim || a.cols() != space_dim) return false;
    if (act(lambda->identity_coords()) != Matrix::identity(space_dim, lambda->field()))
        return false;
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            if (action[x] * action[y] != act(lambda->mult(x, y))) return false;
    return true;
}

void validate_representation(const Representation& r) {
    const Quiver& gamma = r.lambda->gamma();
    if (r.modules.size() != gamma.vertex_count())
        throw Error("representation needs one module per gamma vertex");
    if (r.arrow_maps.size() != gamma.arrow_count())
        throw Error("representation needs one map per gamma arrow");
    for (std::size_t i = 0; i < r.modules.size(); ++i)
        if (r.modules[i].algebra != r.lambda->vertex_algebra(i))
            throw AlgebraMismatchError("module at gamma vertex " + gamma.vertex_name(i) +
                                       " is over the wrong algebra");
    for (std::size_t a = 0; a < r.arrow_maps.size(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        if (r.arrow_maps[a].rows() != r.modules[ar.source].space_dim ||
            r.arrow_maps[a].cols() != r.modules[ar.target].space_dim)
            throw Error("map for arrow " + ar.name + " has the wrong shape");
    }
}

std::optional<RelationWitness> relation_violation(const Representation& r) {
    validate_representation(r);
    const Quiver& gamma = r.lambda->gamma();
    const std::vector<RelationCombo>& rels = r.lambda->relations();
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const RelationCombo& rel = rels[ri];
        // One intercalation slot per internal junction of every term;
        // choices across terms are independent. Boundaries act by the
        // identity of the endpoint algebras.
        struct Slot {
            std::size_t term;
            std::size_t pos;
            std::size_t vertex;
            std::size_t dim;
        };
        std::vector<Slot> slots;
        for (std::size_t t = 0; t < rel.terms.size(); ++t) {
            const Path& p = rel.terms[t].second;
            for (std::size_t k = 0; k + 1 < p.arrows.size(); ++k) {
                std::size_t at = gamma.arrow(p.arrows[k]).target;
                slots.push_back({t, k + 1, at, r.lambda->vertex_algebra(at)->dim()});
            }
        }
        const std::size_t src = rel.terms.front().second.source;
        const std::size_t dst = rel.terms.front().second.target(gamma);
        const Matrix id_src = r.modules[src].act(r.modules[src].algebra->identity_coords());
        const Matrix id_dst = r.modules[dst].act(r.modules[dst].algebra->identity_coords());
        std::vector<std::size_t> choice(slots.size(), 0);
        while (true) {
            Matrix total(r.modules[src].space_dim, r.modules[dst].space_dim, r.lambda->field());
            for (std::size_t t = 0; t < rel.terms.size(); ++t) {
                const auto& [coeff, p] = rel.terms[t];
                std::vector<Matrix> acts(p.arrows.size() + 1);
                acts.front() = id_src;
                acts.back() = id_dst;
                for (std::size_t s = 0; s < slots.size(); ++s)
                    if (slots[s].term == t)
                        acts[slots[s].pos] = r.modules[slots[s].vertex].action[choice[s]];
                total = total + monomial_block_map(r, p, acts).scaled(coeff);
            }
            if (!total.is_zero()) return RelationWitness{ri, choice};
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
    return std::nullopt;
}

bool satisfies_relations(const Representation& r) { return !relation_violation(r).has_value(); }

LambdaModule functor_F(const Representation& r) {
    validate_representation(r);
    if (auto w = relation_violation(r)) {
        std::ostringstream msg;
        msg << "relation " << w->relation_index << " is not satisfied (intercalation";
        for (std::size_t c : w->choice) msg << ' ' << c;
        msg << ')';
        throw RelationViolationError(msg.str());
    }
    const GbpAlgebra& lam = *r.lambda;
    const std::vector<std::size_t> off = block_offsets(r);
    LambdaModule out;
    out.lambda = r.lambda;
    out.space_dim = off.back();
    out.action.reserve(lam.dim());
    for (std::size_t b = 0; b < lam.dim(); ++b) {
        const APathMonomial& m = lam.basis_monomial(b);
        const std::size_t src = m.gpath.source;
        const std::size_t dst = m.gpath.target(lam.gamma());
        std::vector<Matrix> acts(m.coeffs.size());
        for (std::size_t k = 0; k < m.coeffs.size(); ++k) {
            std::size_t v = k == 0 ? src : lam.gamma().arrow(m.gpath.arrows[k - 1]).target;
            acts[k] = r.modules[v].action[m.coeffs[k]];
        }
        Matrix block = monomial_block_map(r, m.gpath, acts);
        Matrix full(out.space_dim, out.space_dim, lam.field());
        for (std::size_t p = 0; p < block.rows(); ++p)
            for (std::size_t q = 0; q < block.cols(); ++q)
                full.at(off[src] + p, off[dst] + q) = block.at(p, q);
        out.action.push_back(std::move(full));
    }
    return out;
}

Representation functor_G(const LambdaModule& m) {
    const GbpAlgebra& lam = *m.lambda;
    const Quiver& gamma = lam.gamma();
    const FieldSpec& field = lam.field();
    Representation out;
    out.lambda = m.lambda;

    // M_i is the row space of the action of 1_i, in reduced echelon
    // coordinates; the blocks are independent because the 1_i are
    // orthogonal idempotents summing to 1.
    std::vector<Matrix> block_rows(gamma.vertex_count());
    for (std::size_t i = 0; i < gamma.vertex_count(); ++i)
        block_rows[i] = rref(m.act(lam.vertex_identity_coords(i))).reduced;

    auto restricted = [&](std::size_t i, std::size_t j, const Matrix& act) {
        Matrix out_map(block_rows[i].rows(), block_rows[j].rows(), field);
        for (std::size_t p = 0; p < block_rows[i].rows(); ++p) {
            std::vector<Scalar> w = act.apply_row(block_rows[i].row(p));
            if (!in_rowspace(block_rows[j], w))
                throw ActionIncompatibleError("action does not preserve the block of vertex " +
                                              gamma.vertex_name(j));
            out_map.set_row(p, coords_in_rowspace(block_rows[j], w));
        }
        return out_map;
    };

    for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
        VertexAlgebraPtr a = lam.vertex_algebra(i);
        VertexModule mod;
        mod.algebra = a;
        mod.space_dim = block_rows[i].rows();
        mod.action.reserve(a->dim());
        for (std::size_t b = 0; b < a->dim(); ++b) {
            APathMonomial mono{Path::trivial(i), {b}};
            mod.action.push_back(restricted(i, i, m.act(lam.monomial_class(mono))));
        }
        out.modules.push_back(std::move(mod));
    }
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        // The class of the bare arrow: 1_src * alpha * 1_dst expanded over
        // the idempotent pairs of the endpoint algebras.
        const VertexAlgebra& asrc = *lam.vertex_algebra(ar.source);
        const VertexAlgebra& adst = *lam.vertex_algebra(ar.target);
        std::vector<Scalar> cls(lam.dim(), Scalar(0));
        for (std::size_t js = 0; js < asrc.vertex_count(); ++js)
            for (std::size_t jd = 0; jd < adst.vertex_count(); ++jd) {
                APathMonomial mono{Path{ar.source, {a}},
                                   {asrc.idempotent_index(js), adst.idempotent_index(jd)}};
                std::vector<Scalar> c = lam.monomial_class(mono);
                for (std::size_t k = 0; k < cls.size(); ++k) cls[k] = field.add(cls[k], c[k]);
            }
        out.arrow_maps.push_back(restricted(ar.source, ar.target, m.act(cls)));
    }
    return out;
}

Representation direct_sum(const Representation& m, const Representation& n) {
    if (m.lambda != n.lambda) throw AlgebraMismatchError("direct sum across different algebras");
    Representation out;
    out.lambda = m.lambda;
    for (std::size_t i = 0; i < m.modules.size(); ++i)
        out.modules.push_back(direct_sum(m.modules[i], n.modules[i]));
    const Quiver& gamma = m.lambda->gamma();
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        const Matrix& x = m.arrow_maps[a];
        const Matrix& y = n.arrow_maps[a];
        Matrix block(out.modules[ar.source].space_dim, out.modules[ar.target].space_dim,
                     m.lambda->field());
        for (std::size_t p = 0; p < x.rows(); ++p)
            for (std::size_t q = 0; q < x.cols(); ++q) block.at(p, q) = x.at(p, q);
        for (std::size_t p = 0; p < y.rows(); ++p)
            for (std::size_t q = 0; q < y.cols(); ++q)
                block.at(x.rows() + p, x.cols() + q) = y.at(p, q);
        out.arrow_maps.push_back(std::move(block));
    }
    return out;
}

std::vector<std::size_t> dimension_vector(const Representation& m) {
    std::vector<std::size_t> out;
    out.reserve(m.modules.size());
    for (const VertexModule& mod : m.modules) out.push_back(mod.space_dim);
    return out;
}

Representation zero_representation(GbpAlgebraPtr lambda) {
    Representation out;
    out.lambda = lambda;
    for (std::size_t i = 0; i < lambda->gamma().vertex_count(); ++i)
        out.modules.push_back(zero_module(lambda->vertex_algebra(i)));
    for (std::size_t a = 0; a < lambda->gamma().arrow_count(); ++a)
        out.arrow_maps.emplace_back(0, 0, lambda->field());
    return out;
}

std::vector<RepMorphism> hom_space(const Representation& m, const Representation& n) {
    if (m.lambda != n.lambda) throw AlgebraMismatchError("hom across different algebras");
    const Quiver& gamma = m.lambda->gamma();
    const FieldSpec& field = m.lambda->field();

    // Variables: the entries of every component f_i, blocked per vertex.
    std::vector<std::size_t> var_off(gamma.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < gamma.vertex_count(); ++i)
        var_off[i + 1] = var_off[i] + m.modules[i].space_dim * n.modules[i].space_dim;
    const std::size_t nvars = var_off.back();
    auto var = [&](std::size_t i, std::size_t r, std::size_t c) {
        return var_off[i] + r * n.modules[i].space_dim + c;
    };

    Matrix eqs(0, nvars, field);
    // act_M(b) f_i = f_i act_N(b) for every algebra basis class b.
    for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
        const std::size_t dm = m.modules[i].space_dim;
        const std::size_t dn = n.modules[i].space_dim;
        for (std::size_t b = 0; b < m.modules[i].algebra->dim(); ++b) {
            const Matrix& am = m.modules[i].action[b];
            const Matrix& an = n.modules[i].action[b];
            for (std::size_t p = 0; p < dm; ++p)
                for (std::size_t q = 0; q < dn; ++q) {
                    std::vector<Scalar> row(nvars, Scalar(0));
                    for (std::size_t s = 0; s < dm; ++s)
                        row[var(i, s, q)] = field.add(row[var(i, s, q)], am.at(p, s));
                    for (std::size_t s = 0; s < dn; ++s)
                        row[var(i, p, s)] = field.sub(row[var(i, p, s)], an.at(s, q));
                    eqs.append_row(row);
                }
        }
    }
    // M_alpha f_j = f_i N_alpha for every arrow alpha: i -> j.
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        const Matrix& ma = m.arrow_maps[a];
        const Matrix& na = n.arrow_maps[a];
        for (std::size_t p = 0; p < m.modules[ar.source].space_dim; ++p)
            for (std::size_t q = 0; q < n.modules[ar.target].space_dim; ++q) {
                std::vector<Scalar> row(nvars, Scalar(0));
                for (std::size_t s = 0; s < m.modules[ar.target].space_dim; ++s)
                    row[var(ar.target, s, q)] = field.add(row[var(ar.target, s, q)], ma.at(p, s));
                for (std::size_t s = 0; s < n.modules[ar.source].space_dim; ++s)
                    row[var(ar.source, p, s)] = field.sub(row[var(ar.source, p, s)], na.at(s, q));
                eqs.append_row(row);
            }
    }

    Matrix sols = kernel_basis(eqs);
    std::vector<RepMorphism> out;
    for (std::size_t k = 0; k < sols.rows(); ++k) {
        RepMorphism f;
        for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
            Matrix comp(m.modules[i].space_dim, n.modules[i].space_dim, field);
            for (std::size_t r = 0; r < comp.rows(); ++r)
                for (std::size_t c = 0; c < comp.cols(); ++c)
                    comp.at(r, c) = sols.at(k, var(i, r, c));
            f.components.push_back(std::move(comp));
        }
        out.push_back(std::move(f));
    }
    return out;
}

bool is_identity_morphism(const Representation& m, const RepMorphism& f) {
    for (std::size_t i = 0; i < f.components.size(); ++i)
        if (f.components[i] != Matrix::identity(m.modules[i].space_dim, m.lambda->field()))
            return false;
    return true;
}

RepMorphism compose(const RepMorphism& f, const RepMorphism& g) {
    RepMorphism out;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        out.components.push_back(f.components[i] * g.components[i]);
    return out;
}

namespace {

std::vector<Scalar> flatten(const RepMorphism& f) {
    std::vector<Scalar> v;
    for (const Matrix& c : f.components)
        for (std::size_t r = 0; r < c.rows(); ++r)
            for (std::size_t q = 0; q < c.cols(); ++q) v.push_back(c.at(r, q));
    return v;
}

} // namespace

bool morphism_in_span(const std::vector<RepMorphism>& basis, const RepMorphism& f,
                      const FieldSpec& field) {
    std::vector<Scalar> fv = flatten(f);
    RowSpan span(fv.size(), field);
    for (const RepMorphism& b : basis) span.add(flatten(b));
    return span.contains(fv);
}

IsoResult find_isomorphism(const Representation& m, const Representation& n,
                           unsigned retry_budget) {
    if (dimension_vector(m) != dimension_vector(n)) return {std::nullopt, true};
    const FieldSpec& field = m.lambda->field();
    std::vector<RepMorphism> basis = hom_space(m, n);

    auto invertible = [&](const RepMorphism& f) {
        for (std::size_t i = 0; i < f.components.size(); ++i)
            if (rank(f.components[i]) != m.modules[i].space_dim) return false;
        return true;
    };

    if (m.total_dim() == 0) {
        RepMorphism f;
        for (const VertexModule& mod : m.modules)
            f.components.emplace_back(mod.space_dim, mod.space_dim, field);
        return {f, true};
    }
    if (basis.empty()) return {std::nullopt, true};
    for (const RepMorphism& f : basis)
        if (invertible(f)) return {f, false};

    std::mt19937_64 rng(0x5eedULL + 31 * m.total_dim() + basis.size());
    for (unsigned attempt = 0; attempt < retry_budget; ++attempt) {
        const long long window = field.kind() == FieldKind::PrimeField
                                     ? field.characteristic() - 1
                                     : 2 + static_cast<long long>(attempt) / 8;
        std::uniform_int_distribution<long long> dist(-window, window);
        RepMorphism f;
        for (const VertexModule& mod : m.modules)
            f.components.emplace_back(mod.space_dim, n.modules[&mod - m.modules.data()].space_dim,
                                      field);
        for (const RepMorphism& b : basis) {
            Scalar c = field.normalize(Scalar(dist(rng)));
            for (std::size_t i = 0; i < f.components.size(); ++i)
                f.components[i] = f.components[i] + b.components[i].scaled(c);
        }
        if (invertible(f)) return {f, false};
    }
    return {std::nullopt, false};
}

RepMorphism module_map_to_rep_morphism(const LambdaModule& src, const LambdaModule& dst,
                                       const Matrix& map) {
    const GbpAlgebra& lam = *src.lambda;
    RepMorphism out;
    for (std::size_t i = 0; i < lam.gamma().vertex_count(); ++i) {
        std::vector<Scalar> one_i = lam.vertex_identity_coords(i);
        Matrix mrows = rref(src.act(one_i)).reduced;
        Matrix nrows = rref(dst.act(one_i)).reduced;
        Matrix comp(mrows.rows(), nrows.rows(), lam.field());
        for (std::size_t p = 0; p < mrows.rows(); ++p)
            comp.set_row(p, coords_in_rowspace(nrows, map.apply_row(mrows.row(p))));
        out.components.push_back(std::move(comp));
    }
    return out;
}

} // namespace gbpa
