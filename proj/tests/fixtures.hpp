#ifndef GBPA_TESTS_FIXTURES_HPP
#define GBPA_TESTS_FIXTURES_HPP

#include <memory>
#include <vector>

#include "gbpa/gbpcore.hpp"
#include "gbpa/vertexalg.hpp"

namespace gbpa::fixtures {

inline VertexAlgebraPtr field_algebra(FieldSpec f = FieldSpec()) {
    Quiver q;
    q.add_vertex("1");
    return std::make_shared<VertexAlgebra>(build_vertex_algebra(q, {}, f));
}

// k[gamma]/(gamma^n)
inline VertexAlgebraPtr truncated_loop(int n, FieldSpec f = FieldSpec()) {
    Quiver q;
    q.add_vertex("v");
    q.add_arrow("gamma", "v", "v");
    RelationCombo rel;
    rel.terms.emplace_back(Scalar(1), make_path(q, 0, std::vector<std::size_t>(n, 0)));
    return std::make_shared<VertexAlgebra>(build_vertex_algebra(q, {rel}, f));
}

// path algebra of 1 -> 2 (dim 3)
inline VertexAlgebraPtr a2_algebra(FieldSpec f = FieldSpec()) {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("mu", "1", "2");
    return std::make_shared<VertexAlgebra>(build_vertex_algebra(q, {}, f));
}

// path algebra of 1 <- 2 (dim 3)
inline VertexAlgebraPtr a2op_algebra(FieldSpec f = FieldSpec()) {
    Quiver q;
    q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("mu", "2", "1");
    return std::make_shared<VertexAlgebra>(build_vertex_algebra(q, {}, f));
}

// k --alpha--> k[gamma]/(gamma^n) --beta--> k, bound by alpha*beta = 0.
inline GbpAlgebraPtr three_vertex_lambda(int n, FieldSpec f = FieldSpec()) {
    Quiver g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_vertex("3");
    g.add_arrow("alpha", "1", "2");
    g.add_arrow("beta", "2", "3");
    RelationCombo rel;
    rel.terms.emplace_back(Scalar(1), make_path(g, 0, {0, 1}));
    return std::make_shared<GbpAlgebra>(build_gbp_algebra(
        g, {field_algebra(f), truncated_loop(n, f), field_algebra(f)}, {rel}, f));
}

// A --mu--> A with A = k(1->2), no relations (dim 15).
inline GbpAlgebraPtr a_to_a_lambda(FieldSpec f = FieldSpec()) {
    Quiver g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_arrow("mu", "1", "2");
    auto a = a2_algebra(f);
    return std::make_shared<GbpAlgebra>(build_gbp_algebra(g, {a, a}, {}, f));
}

// A <--mu-- A with A = k(1<-2), no relations (the dual-side example).
inline GbpAlgebraPtr a_from_a_lambda(FieldSpec f = FieldSpec()) {
    Quiver g;
    g.add_vertex("1");
    g.add_vertex("2");
    g.add_arrow("mu", "2", "1");
    auto a = a2op_algebra(f);
    return std::make_shared<GbpAlgebra>(build_gbp_algebra(g, {a, a}, {}, f));
}

// Six-vertex algebra with dim-2 A = k[u]/(u^2) and dim-3 B = k(1->2),
// arrows Bleft->x, x->Btop, x->Abot (alpha), Btop->Atr, Abot->Bbr (beta),
// bound by alpha*beta = 0.
struct SixVertex {
    GbpAlgebraPtr lambda;
    std::size_t v_bleft, v_x, v_btop, v_atr, v_abot, v_bbr;
};

inline SixVertex six_vertex_lambda(FieldSpec f = FieldSpec()) {
    Quiver g;
    SixVertex sv;
    sv.v_bleft = g.add_vertex("Bleft");
    sv.v_x = g.add_vertex("x");
    sv.v_btop = g.add_vertex("Btop");
    sv.v_atr = g.add_vertex("Atr");
    sv.v_abot = g.add_vertex("Abot");
    sv.v_bbr = g.add_vertex("Bbr");
    g.add_arrow("l", "Bleft", "x");
    g.add_arrow("t", "x", "Btop");
    std::size_t alpha = g.add_arrow("alpha", "x", "Abot");
    g.add_arrow("u", "Btop", "Atr");
    std::size_t beta = g.add_arrow("beta", "Abot", "Bbr");
    RelationCombo rel;
    rel.terms.emplace_back(Scalar(1), make_path(g, sv.v_x, {alpha, beta}));
    auto A = truncated_loop(2, f);
    auto B = a2_algebra(f);
    sv.lambda = std::make_shared<GbpAlgebra>(
        build_gbp_algebra(g, {B, field_algebra(f), B, A, A, B}, {rel}, f));
    return sv;
}

} // namespace gbpa::fixtures

#endif
