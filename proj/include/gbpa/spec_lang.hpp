#ifndef GBPA_SPEC_LANG_HPP
#define GBPA_SPEC_LANG_HPP

#include <map>
#include <string>
#include <vector>

#include "gbpa/gbpcore.hpp"

namespace gbpa {

// A parsed and fully resolved input document: the (gamma, algebras,
// relations) triple with its built algebra, plus any named modules over the
// declared vertex algebras.
struct SpecDocument {
    FieldSpec field;
    std::vector<std::string> algebra_order;
    std::map<std::string, VertexAlgebraPtr> algebras;
    std::vector<std::string> vertex_algebra_names; // per gamma vertex
    GbpAlgebraPtr lambda;
    std::vector<std::string> module_order;
    std::map<std::string, VertexModule> modules;
    std::map<std::string, std::string> module_algebra; // module name -> algebra name
};

// Parse the textual algebra description. Diagnostics carry line/column;
// building the declared objects can additionally raise the usual domain
// errors (CyclicGamma, NotFiniteDimensional, InvalidRelation, ...).
// max_path_len bounds the vertex-algebra path enumeration.
SpecDocument parse_spec(const std::string& text, std::size_t max_path_len = kDefaultMaxPathLen);

// Serialize an algebra back to the input language (field, one block per
// distinct vertex algebra, the gamma block, and the relations). Re-parsing
// the result reproduces the same dimensions.
std::string render_spec(const GbpAlgebra& lambda);

} // namespace gbpa

#endif
