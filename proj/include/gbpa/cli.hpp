#ifndef GBPA_CLI_HPP
#define GBPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "gbpa/spec_lang.hpp"
#include "gbpa/structure.hpp"

namespace gbpa {

// Render an arrow matrix, collapsing identity-coordinate blocks to the
// mu / D(mu) notation when every cell is such a block or zero.
std::string render_arrow_matrix(const Matrix& m, const VertexAlgebra& src,
                                const VertexAlgebra& tgt);

// Execute one CLI invocation: args are argv[1..]; results go to `out`,
// diagnostics to `err`. Returns the process exit code: 0 on success, 1 on a
// domain error, 2 on a usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gbpa

#endif
