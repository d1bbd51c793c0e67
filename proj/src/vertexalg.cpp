#include "gbpa/vertexalg.hpp"

#include <algorithm>
#include <deque>
#include <optional>

namespace gbpa {

namespace {

// Paths explode only on cyclic presentations that are far from admissible;
// cap the ambient enumeration instead of exhausting memory.
constexpr std::size_t kAmbientPathCap = 50000;

} // namespace

VertexAlgebra build_vertex_algebra(const Quiver& sigma, const std::vector<RelationCombo>& omega,
                                   FieldSpec field, std::size_t max_len) {
    for (const RelationCombo& rel : omega) validate_relation(sigma, rel);

    VertexAlgebra alg;
    alg.sigma_ = sigma;
    alg.omega_ = omega;
    alg.field_ = field;

    const bool acyclic = is_acyclic(sigma);
    // Acyclic paths visit distinct vertices, so they never reach max_len at
    // desk scale; enumerate_all_paths stops once no path extends.
    alg.ambient_paths_ = enumerate_all_paths(sigma, max_len);
    if (!acyclic && alg.ambient_paths_.size() > kAmbientPathCap)
        throw NotFiniteDimensionalError("path count exceeds cap before cutoff " +
                                        std::to_string(max_len));
    const std::size_t ambient = alg.ambient_paths_.size();
    for (std::size_t i = 0; i < ambient; ++i) alg.ambient_index_[alg.ambient_paths_[i]] = i;

    std::size_t longest = 0;
    for (const Path& p : alg.ambient_paths_) longest = std::max(longest, p.length());

    auto path_index = [&](const Path& p) -> std::ptrdiff_t {
        auto it = alg.ambient_index_.find(p);
        return it == alg.ambient_index_.end() ? -1 : static_cast<std::ptrdiff_t>(it->second);
    };

    // Generator vectors in ambient coordinates.
    std::vector<std::vector<Scalar>> seeds;
    for (const RelationCombo& rel : omega) {
        std::vector<Scalar> v(ambient, Scalar(0));
        for (const auto& [coeff, p] : rel.terms) {
            std::ptrdiff_t idx = path_index(p);
            if (idx < 0)
                throw InvalidRelationError("relation path exceeds the enumeration cutoff");
            v[idx] = field.add(v[idx], coeff);
        }
        seeds.push_back(std::move(v));
    }

    // Close the generator span under left/right multiplication by arrows.
    // A product is kept only when every extended term stays inside the
    // enumerated ambient space, so the span is a genuine subset of the ideal.
    RowSpan span(ambient, field);
    std::vector<std::vector<Scalar>> kept;
    std::deque<std::size_t> work;
    auto offer = [&](std::vector<Scalar> v) {
        if (span.add(v)) {
            kept.push_back(std::move(v));
            work.push_back(kept.size() - 1);
        }
    };
    for (auto& s : seeds) offer(std::move(s));

    auto shifted = [&](const std::vector<Scalar>& v, std::size_t arrow, bool left)
        -> std::optional<std::vector<Scalar>> {
        std::vector<Scalar> out(ambient, Scalar(0));
        const Arrow& a = sigma.arrow(arrow);
        for (std::size_t i = 0; i < ambient; ++i) {
            if (field.is_zero(v[i])) continue;
            const Path& p = alg.ambient_paths_[i];
            Path ext;
            if (left) {
                if (a.target != p.source) return std::vector<Scalar>(ambient, Scalar(0));
                ext.source = a.source;
                ext.arrows.push_back(arrow);
                ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
            } else {
                if (p.target(sigma) != a.source) return std::vector<Scalar>(ambient, Scalar(0));
                ext = p;
                ext.arrows.push_back(arrow);
            }
            std::ptrdiff_t idx = path_index(ext);
            if (idx < 0) return std::nullopt; // would leave the ambient space
            out[idx] = field.add(out[idx], v[i]);
        }
        return out;
    };

    while (!work.empty()) {
        std::size_t idx = work.front();
        work.pop_front();
        std::vector<Scalar> v = kept[idx];
        for (std::size_t a = 0; a < sigma.arrow_count(); ++a) {
            for (bool left : {true, false}) {
                auto ext = shifted(v, a, left);
                if (ext) offer(std::move(*ext));
            }
        }
    }

    // Per-vertex relations act within one (source, target) sector, so terms
    // of every span row share a single source and target; columns outside
    // the span's sectors are untouched by rref.
    alg.zero_len_ = longest + 1;
    if (!acyclic) {
        QuotientBasis probe = quotient_basis(span.rows(), ambient);
        auto column_is_zero = [&](std::size_t col) {
            for (std::size_t r = 0; r < probe.reduce.rows(); ++r)
                if (!field.is_zero(probe.reduce.at(r, col))) return false;
            return true;
        };
        std::size_t found = 0;
        bool ok = false;
        for (std::size_t len = 2; len <= longest && !ok; ++len) {
            bool all_dead = true;
            bool any = false;
            for (std::size_t i = 0; i < ambient; ++i) {
                if (alg.ambient_paths_[i].length() != len) continue;
                any = true;
                if (!column_is_zero(i)) {
                    all_dead = false;
                    break;
                }
            }
            if (any && all_dead) {
                found = len;
                ok = true;
            }
        }
        if (!ok)
            throw NotFiniteDimensionalError(
                "paths survive at length " + std::to_string(max_len) +
                " in a cyclic presentation; the ideal is not admissible or the "
                "cutoff is too small");
        // Every path of length >= found factors through an ideal member.
        alg.zero_len_ = found;
        for (std::size_t i = 0; i < ambient; ++i) {
            if (alg.ambient_paths_[i].length() > found) {
                std::vector<Scalar> unit(ambient, Scalar(0));
                unit[i] = 1;
                span.add(std::move(unit));
            }
        }
    }

    alg.quotient_ = quotient_basis(span.rows(), ambient);
    for (std::size_t c : alg.quotient_.free_coords)
        alg.basis_paths_.push_back(alg.ambient_paths_[c]);

    const std::size_t dim = alg.basis_paths_.size();

    // Trivial-path classes always survive an admissible quotient.
    alg.idempotent_index_.assign(sigma.vertex_count(), 0);
    for (std::size_t j = 0; j < sigma.vertex_count(); ++j) {
        bool found = false;
        for (std::size_t b = 0; b < dim; ++b) {
            if (alg.basis_paths_[b] == Path::trivial(j)) {
                alg.idempotent_index_[j] = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw InvalidRelationError("trivial path died in the quotient (ideal not admissible)");
    }

    alg.mult_table_.assign(dim * dim, std::vector<Scalar>(dim, Scalar(0)));
    for (std::size_t x = 0; x < dim; ++x) {
        const Path& p = alg.basis_paths_[x];
        for (std::size_t y = 0; y < dim; ++y) {
            const Path& q = alg.basis_paths_[y];
            if (p.target(sigma) != q.source) continue;
            Path prod = p;
            prod.arrows.insert(prod.arrows.end(), q.arrows.begin(), q.arrows.end());
            alg.mult_table_[x * dim + y] = alg.path_class(prod);
        }
    }
    return alg;
}

std::vector<Scalar> VertexAlgebra::path_class(const Path& p) const {
    std::vector<Scalar> out(dim(), Scalar(0));
    if (p.length() >= zero_len_) return out;
    auto it = ambient_index_.find(p);
    if (it == ambient_index_.end()) return out;
    for (std::size_t r = 0; r < quotient_.reduce.rows(); ++r)
        out[r] = quotient_.reduce.at(r, it->second);
    return out;
}

std::vector<Scalar> VertexAlgebra::identity_coords() const {
    std::vector<Scalar> out(dim(), Scalar(0));
    for (std::size_t j = 0; j < sigma_.vertex_count(); ++j) out[idempotent_index_[j]] = 1;
    return out;
}

std::vector<Scalar> VertexAlgebra::multiply(const std::vector<Scalar>& x,
                                            const std::vector<Scalar>& y) const {
    std::vector<Scalar> out(dim(), Scalar(0));
    for (std::size_t a = 0; a < dim(); ++a) {
        if (field_.is_zero(x[a])) continue;
        for (std::size_t b = 0; b < dim(); ++b) {
            if (field_.is_zero(y[b])) continue;
            const auto& t = mult(a, b);
            Scalar c = field_.mul(x[a], y[b]);
            for (std::size_t k = 0; k < dim(); ++k)
                out[k] = field_.add(out[k], field_.mul(c, t[k]));
        }
    }
    return out;
}

std::string VertexAlgebra::basis_name(std::size_t b) const {
    return path_to_string(sigma_, basis_paths_[b]);
}

Matrix VertexModule::act(const std::vector<Scalar>& algebra_coords) const {
    const FieldSpec& f = algebra->field();
    Matrix out(space_dim, space_dim, f);
    for (std::size_t b = 0; b < algebra_coords.size(); ++b) {
        if (f.is_zero(algebra_coords[b])) continue;
        out = out + action[b].scaled(algebra_coords[b]);
    }
    return out;
}

bool VertexModule::action_is_consistent() const {
    const VertexAlgebra& a = *algebra;
    if (!(act(a.identity_coords()) == Matrix::identity(space_dim, a.field()))) return false;
    for (std::size_t x = 0; x < a.dim(); ++x)
        for (std::size_t y = 0; y < a.dim(); ++y)
            if (!(action[x] * action[y] == act(a.mult(x, y)))) return false;
    return true;
}

VertexModule zero_module(VertexAlgebraPtr a) {
    VertexModule m;
    m.algebra = std::move(a);
    m.space_dim = 0;
    m.action.assign(m.algebra->dim(), Matrix(0, 0, m.algebra->field()));
    return m;
}

VertexModule regular_module(VertexAlgebraPtr a) {
    VertexModule m;
    m.algebra = a;
    m.space_dim = a->dim();
    for (std::size_t b = 0; b < a->dim(); ++b) {
        Matrix act(a->dim(), a->dim(), a->field());
        for (std::size_t x = 0; x < a->dim(); ++x) act.set_row(x, a->mult(x, b));
        m.action.push_back(std::move(act));
    }
    return m;
}

VertexModule direct_sum(const VertexModule& m, const VertexModule& n) {
    if (m.algebra.get() != n.algebra.get())
        throw AlgebraMismatchError("direct sum of modules over different algebras");
    VertexModule out;
    out.algebra = m.algebra;
    out.space_dim = m.space_dim + n.space_dim;
    const FieldSpec& f = m.algebra->field();
    for (std::size_t b = 0; b < m.algebra->dim(); ++b) {
        Matrix act(out.space_dim, out.space_dim, f);
        for (std::size_t i = 0; i < m.space_dim; ++i)
            for (std::size_t j = 0; j < m.space_dim; ++j)
                act.at(i, j) = m.action[b].at(i, j);
        for (std::size_t i = 0; i < n.space_dim; ++i)
            for (std::size_t j = 0; j < n.space_dim; ++j)
                act.at(m.space_dim + i, m.space_dim + j) = n.action[b].at(i, j);
        out.action.push_back(std::move(act));
    }
    return out;
}

VertexModule projective(VertexAlgebraPtr a, std::size_t j) {
    if (j >= a->vertex_count()) throw UnknownVertexError("projective: no such vertex");
    const FieldSpec& f = a->field();
    std::vector<std::size_t> rows;
    for (std::size_t b = 0; b < a->dim(); ++b)
        if (a->basis_path(b).source == j) rows.push_back(b);
    VertexModule m;
    m.algebra = a;
    m.space_dim = rows.size();
    for (std::size_t t = 0; t < a->dim(); ++t) {
        Matrix act(rows.size(), rows.size(), f);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto& prod = a->mult(rows[r], t);
            for (std::size_t c = 0; c < rows.size(); ++c) act.at(r, c) = prod[rows[c]];
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

VertexModule injective(VertexAlgebraPtr a, std::size_t j) {
    if (j >= a->vertex_count()) throw UnknownVertexError("injective: no such vertex");
    const FieldSpec& f = a->field();
    std::vector<std::size_t> cols;
    for (std::size_t b = 0; b < a->dim(); ++b)
        if (a->basis_path(b).target(a->sigma()) == j) cols.push_back(b);
    // Dual of the left module A e_j in the coordinate dual basis:
    // act(t)[x][y] = coefficient of basis x in t * basis y.
    VertexModule m;
    m.algebra = a;
    m.space_dim = cols.size();
    for (std::size_t t = 0; t < a->dim(); ++t) {
        Matrix act(cols.size(), cols.size(), f);
        for (std::size_t y = 0; y < cols.size(); ++y) {
            const auto& prod = a->mult(t, cols[y]);
            for (std::size_t x = 0; x < cols.size(); ++x) act.at(x, y) = prod[cols[x]];
        }
        m.action.push_back(std::move(act));
    }
    return m;
}

VertexModule simple(VertexAlgebraPtr a, std::size_t j) {
    if (j >= a->vertex_count()) throw UnknownVertexError("simple: no such vertex");
    VertexModule m;
    m.algebra = a;
    m.space_dim = 1;
    for (std::size_t t = 0; t < a->dim(); ++t) {
        Matrix act(1, 1, a->field());
        if (t == a->idempotent_index(j)) act.at(0, 0) = 1;
        m.action.push_back(std::move(act));
    }
    return m;
}

VertexModule restrict_module(const VertexModule& m, const Matrix& rows) {
    VertexModule out;
    out.algebra = m.algebra;
    out.space_dim = rows.rows();
    for (std::size_t t = 0; t < m.algebra->dim(); ++t) {
        Matrix moved = rows * m.action[t];
        Matrix act(rows.rows(), rows.rows(), m.algebra->field());
        for (std::size_t r = 0; r < rows.rows(); ++r)
            act.set_row(r, coords_in_rowspace(rows, moved.row(r)));
        out.action.push_back(std::move(act));
    }
    return out;
}

VertexModule module_from_sigma_rep(VertexAlgebraPtr a, const std::vector<std::size_t>& dims,
                                   const std::vector<Matrix>& arrow_maps) {
    const Quiver& sigma = a->sigma();
    const FieldSpec& field = a->field();
    if (dims.size() != sigma.vertex_count())
        throw Error("need one dimension per sigma vertex");
    if (arrow_maps.size() != sigma.arrow_count())
        throw Error("need one matrix per sigma arrow");
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t v = 0; v < dims.size(); ++v) off[v + 1] = off[v] + dims[v];
    for (std::size_t t = 0; t < arrow_maps.size(); ++t) {
        const Arrow& ar = sigma.arrow(t);
        if (arrow_maps[t].rows() != dims[ar.source] || arrow_maps[t].cols() != dims[ar.target])
            throw Error("matrix for arrow " + ar.name + " has the wrong shape");
    }

    // Composite map of a path, as a block of the full space.
    auto path_map = [&](const Path& p) {
        Matrix out = Matrix::identity(dims[p.source], field);
        for (std::size_t t : p.arrows) out = out * arrow_maps[t];
        return out;
    };
    for (const RelationCombo& rel : a->omega()) {
        const Path& first = rel.terms.front().second;
        Matrix total(dims[first.source], dims[first.target(sigma)], field);
        for (const auto& [coeff, p] : rel.terms) total = total + path_map(p).scaled(coeff);
        if (!total.is_zero())
            throw RelationViolationError("matrices violate a relation of the vertex algebra");
    }

    VertexModule out;
    out.algebra = a;
    out.space_dim = off.back();
    for (std::size_t b = 0; b < a->dim(); ++b) {
        const Path& p = a->basis_path(b);
        std::size_t src = p.source, dst = p.target(sigma);
        Matrix block = path_map(p);
        Matrix act(out.space_dim, out.space_dim, field);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                act.at(off[src] + r, off[dst] + c) = block.at(r, c);
        out.action.push_back(std::move(act));
    }
    return out;
}

Submodule radical(const VertexModule& m) {
    const VertexAlgebra& a = *m.algebra;
    Matrix rows(0, m.space_dim, a.field());
    for (std::size_t t = 0; t < a.dim(); ++t) {
        if (a.basis_path(t).length() == 0) continue;
        for (std::size_t r = 0; r < m.space_dim; ++r) rows.append_row(m.action[t].row(r));
    }
    Matrix basis = rref(rows).reduced;
    if (basis.cols() == 0) basis = Matrix(0, m.space_dim, a.field());
    Submodule sub;
    sub.module = restrict_module(m, basis);
    sub.inclusion = basis;
    return sub;
}

} // namespace gbpa
