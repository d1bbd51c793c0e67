#include "gbpa/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace gbpa {

namespace {

using nlohmann::json;

constexpr const char* kUsage =
    "usage: gbpa <command> [args] <spec-file> [--json]\n"
    "commands:\n"
    "  check                      validate the spec and report dimensions\n"
    "  basis                      list the quotient basis of the algebra\n"
    "  table                      print the multiplication table\n"
    "  proj <i> <j>               projective representation P(i,j)\n"
    "  inj <i> <j>                injective representation I(i,j)\n"
    "  simple <i> <j>             simple representation S(i,j)\n"
    "  rad-proj <i> <j>           radical of P(i,j)\n"
    "  cone <i> <module>          cone over a declared module\n"
    "  dual-cone <i> <module>     dual cone over a declared module\n"
    "  opposite                   emit the opposite algebra as a spec\n"
    "  dual <rep> <i> <j>         dual of proj|inj|simple|rad-proj\n";

json scalar_json(const FieldSpec& field, const Scalar& s) {
    if (field.kind() == FieldKind::PrimeField) return s.convert_to<long long>();
    return field.to_string(s);
}

json matrix_json(const FieldSpec& field, const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(field, m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Checks whether `slice` (one cell of a block partition) equals the
// identity coordinates of `alg` laid out along the given axis.
bool is_identity_block_row(const Matrix& m, std::size_t r, std::size_t c0,
                           const std::vector<Scalar>& id) {
    for (std::size_t k = 0; k < id.size(); ++k)
        if (m.at(r, c0 + k) != id[k]) return false;
    return true;
}

bool is_zero_block_row(const Matrix& m, std::size_t r, std::size_t c0, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k)
        if (m.at(r, c0 + k) != 0) return false;
    return true;
}

std::string grid_to_string(const std::vector<std::vector<std::string>>& cells) {
    std::ostringstream out;
    out << "[";
    for (std::size_t r = 0; r < cells.size(); ++r) {
        out << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cells[r].size(); ++c) out << (c ? ", " : "") << cells[r][c];
        out << "]";
    }
    out << "]";
    return out.str();
}

} // namespace

std::string render_arrow_matrix(const Matrix& m, const VertexAlgebra& src,
                                const VertexAlgebra& tgt) {
    if (m.rows() > 0 && m.cols() > 0) {
        // mu blocks: every (1 x dim tgt) cell is zero or the identity of tgt.
        std::size_t da = tgt.dim();
        if (da > 1 && m.cols() % da == 0) {
            std::vector<Scalar> id = tgt.identity_coords();
            bool ok = true, seen = false;
            std::vector<std::vector<std::string>> cells(m.rows());
            for (std::size_t r = 0; r < m.rows() && ok; ++r)
                for (std::size_t b = 0; b < m.cols() / da && ok; ++b) {
                    if (is_identity_block_row(m, r, b * da, id)) {
                        cells[r].push_back("μ");
                        seen = true;
                    } else if (is_zero_block_row(m, r, b * da, da)) {
                        cells[r].push_back("0");
                    } else {
                        ok = false;
                    }
                }
            if (ok && seen) return grid_to_string(cells);
        }
        // D(mu) blocks: every (dim src x 1) cell is zero or the identity of
        // src written as a column.
        da = src.dim();
        if (da > 1 && m.rows() % da == 0) {
            std::vector<Scalar> id = src.identity_coords();
            bool ok = true, seen = false;
            std::vector<std::vector<std::string>> cells(m.rows() / da);
            for (std::size_t b = 0; b < m.rows() / da && ok; ++b)
                for (std::size_t c = 0; c < m.cols() && ok; ++c) {
                    bool is_id = true, is_zero = true;
                    for (std::size_t k = 0; k < da; ++k) {
                        if (m.at(b * da + k, c) != id[k]) is_id = false;
                        if (m.at(b * da + k, c) != 0) is_zero = false;
                    }
                    if (is_id) {
                        cells[b].push_back("D(μ)");
                        seen = true;
                    } else if (is_zero) {
                        cells[b].push_back("0");
                    } else {
                        ok = false;
                    }
                }
            if (ok && seen) return grid_to_string(cells);
        }
    }
    return m.to_string();
}

namespace {

struct Invocation {
    std::vector<std::string> pos;
    bool json_mode = false;
};

std::string coords_to_string(const GbpAlgebra& lam, const std::vector<Scalar>& coords) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t b = 0; b < coords.size(); ++b) {
        if (lam.field().is_zero(coords[b])) continue;
        Scalar c = coords[b];
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (c != 1) out << lam.field().to_string(c) << "*";
        out << lam.basis_name(b);
    }
    if (first) out << "0";
    return out.str();
}

void render_representation(const Representation& r, const Invocation& inv, std::ostream& out) {
    const GbpAlgebra& lam = *r.lambda;
    const Quiver& gamma = lam.gamma();
    if (inv.json_mode) {
        json j;
        j["dimension_vector"] = dimension_vector(r);
        j["vertices"] = json::array();
        for (std::size_t i = 0; i < gamma.vertex_count(); ++i) {
            json v;
            v["name"] = gamma.vertex_name(i);
            v["dim"] = r.modules[i].space_dim;
            v["action"] = json::array();
            for (const Matrix& a : r.modules[i].action)
                v["action"].push_back(matrix_json(lam.field(), a));
            j["vertices"].push_back(std::move(v));
        }
        j["arrows"] = json::array();
        for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
            json e;
            e["name"] = gamma.arrow(a).name;
            e["source"] = gamma.vertex_name(gamma.arrow(a).source);
            e["target"] = gamma.vertex_name(gamma.arrow(a).target);
            e["matrix"] = matrix_json(lam.field(), r.arrow_maps[a]);
            j["arrows"].push_back(std::move(e));
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "dim vector: (";
    for (std::size_t i = 0; i < r.modules.size(); ++i)
        out << (i ? ", " : "") << r.modules[i].space_dim;
    out << ")\n";
    for (std::size_t i = 0; i < gamma.vertex_count(); ++i)
        out << "vertex " << gamma.vertex_name(i) << ": dim " << r.modules[i].space_dim << "\n";
    for (std::size_t a = 0; a < gamma.arrow_count(); ++a) {
        const Arrow& ar = gamma.arrow(a);
        out << "arrow " << ar.name << " (" << gamma.vertex_name(ar.source) << " -> "
            << gamma.vertex_name(ar.target) << "): "
            << render_arrow_matrix(r.arrow_maps[a], *lam.vertex_algebra(ar.source),
                                   *lam.vertex_algebra(ar.target))
            << "\n";
    }
}

std::size_t gamma_vertex(const GbpAlgebra& lam, const std::string& name) {
    if (!lam.gamma().has_vertex(name)) throw UnknownVertexError("unknown gamma vertex '" + name + "'");
    return lam.gamma().vertex_index(name);
}

std::size_t sigma_vertex(const GbpAlgebra& lam, std::size_t i, const std::string& name) {
    const Quiver& sigma = lam.vertex_algebra(i)->sigma();
    if (!sigma.has_vertex(name))
        throw UnknownVertexError("unknown vertex '" + name + "' in the algebra at " +
                                 lam.gamma().vertex_name(i));
    return sigma.vertex_index(name);
}

Representation build_named_rep(const GbpAlgebraPtr& lam, const std::string& kind,
                               const std::string& iname, const std::string& jname) {
    std::size_t i = gamma_vertex(*lam, iname);
    std::size_t j = sigma_vertex(*lam, i, jname);
    if (kind == "proj") return projective_rep(lam, i, j);
    if (kind == "inj") return injective_rep(lam, i, j);
    if (kind == "simple") return simple_rep(lam, i, j);
    if (kind == "rad-proj") return radical_of_projective(lam, i, j);
    throw Error("unknown representation kind '" + kind + "'");
}

void cmd_check(const SpecDocument& doc, const Invocation& inv, std::ostream& out) {
    const GbpAlgebra& lam = *doc.lambda;
    if (inv.json_mode) {
        json j;
        j["field"] = lam.field().name();
        j["dim"] = lam.dim();
        j["free_dim"] = lam.free_dim();
        j["relations"] = lam.relations().size();
        j["vertices"] = json::array();
        for (std::size_t i = 0; i < lam.gamma().vertex_count(); ++i)
            j["vertices"].push_back({{"name", lam.gamma().vertex_name(i)},
                                     {"algebra", doc.vertex_algebra_names[i]},
                                     {"algebra_dim", lam.vertex_algebra(i)->dim()}});
        j["modules"] = json::array();
        for (const std::string& m : doc.module_order)
            j["modules"].push_back(
                {{"name", m}, {"dim", doc.modules.at(m).space_dim}});
        out << j.dump(2) << "\n";
        return;
    }
    out << "field: " << lam.field().name() << "\n";
    out << "dim: " << lam.dim() << " (free: " << lam.free_dim() << ")\n";
    for (std::size_t i = 0; i < lam.gamma().vertex_count(); ++i)
        out << "vertex " << lam.gamma().vertex_name(i) << ": algebra "
            << doc.vertex_algebra_names[i] << " (dim " << lam.vertex_algebra(i)->dim() << ")\n";
    out << "relations: " << lam.relations().size() << "\n";
    for (const std::string& m : doc.module_order)
        out << "module " << m << ": dim " << doc.modules.at(m).space_dim << "\n";
    out << "ok\n";
}

void cmd_basis(const SpecDocument& doc, const Invocation& inv, std::ostream& out) {
    const GbpAlgebra& lam = *doc.lambda;
    if (inv.json_mode) {
        json j;
        j["basis"] = json::array();
        for (std::size_t b = 0; b < lam.dim(); ++b) j["basis"].push_back(lam.basis_name(b));
        out << j.dump(2) << "\n";
        return;
    }
    for (std::size_t b = 0; b < lam.dim(); ++b) out << b << ": " << lam.basis_name(b) << "\n";
}

void cmd_table(const SpecDocument& doc, const Invocation& inv, std::ostream& out) {
    const GbpAlgebra& lam = *doc.lambda;
    if (inv.json_mode) {
        json j;
        j["dim"] = lam.dim();
        j["table"] = json::array();
        for (std::size_t x = 0; x < lam.dim(); ++x) {
            json row = json::array();
            for (std::size_t y = 0; y < lam.dim(); ++y) {
                json cell = json::array();
                for (const Scalar& c : lam.mult(x, y)) cell.push_back(scalar_json(lam.field(), c));
                row.push_back(std::move(cell));
            }
            j["table"].push_back(std::move(row));
        }
        out << j.dump(2) << "\n";
        return;
    }
    for (std::size_t x = 0; x < lam.dim(); ++x)
        for (std::size_t y = 0; y < lam.dim(); ++y)
            out << "(" << lam.basis_name(x) << ") * (" << lam.basis_name(y)
                << ") = " << coords_to_string(lam, lam.mult(x, y)) << "\n";
}

int dispatch(const Invocation& inv, std::ostream& out, std::ostream& err) {
    const std::string& cmd = inv.pos[0];
    std::size_t expected_args = 0;
    if (cmd == "check" || cmd == "basis" || cmd == "table" || cmd == "opposite")
        expected_args = 0;
    else if (cmd == "proj" || cmd == "inj" || cmd == "simple" || cmd == "rad-proj" ||
             cmd == "cone" || cmd == "dual-cone")
        expected_args = 2;
    else if (cmd == "dual")
        expected_args = 3;
    else {
        err << "unknown command '" << cmd << "'\n" << kUsage;
        return 2;
    }
    if (inv.pos.size() != expected_args + 2) {
        err << "wrong number of arguments for '" << cmd << "'\n" << kUsage;
        return 2;
    }
    const std::string& path = inv.pos.back();
    std::ifstream in(path);
    if (!in) {
        err << "cannot open '" << path << "'\n";
        return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    std::size_t max_len = kDefaultMaxPathLen;
    if (const char* env = std::getenv("GBPA_MAX_PATH_LEN")) max_len = std::stoul(env);

    SpecDocument doc = parse_spec(buf.str(), max_len);
    if (cmd == "check") {
        cmd_check(doc, inv, out);
    } else if (cmd == "basis") {
        cmd_basis(doc, inv, out);
    } else if (cmd == "table") {
        cmd_table(doc, inv, out);
    } else if (cmd == "opposite") {
        std::string text = render_spec(*opposite_algebra(doc.lambda).op);
        if (inv.json_mode)
            out << json{{"spec", text}}.dump(2) << "\n";
        else
            out << text;
    } else if (cmd == "proj" || cmd == "inj" || cmd == "simple" || cmd == "rad-proj") {
        render_representation(build_named_rep(doc.lambda, cmd, inv.pos[1], inv.pos[2]), inv, out);
    } else if (cmd == "cone" || cmd == "dual-cone") {
        std::size_t i = gamma_vertex(*doc.lambda, inv.pos[1]);
        auto it = doc.modules.find(inv.pos[2]);
        if (it == doc.modules.end())
            throw UnknownNameError("no module named '" + inv.pos[2] + "' declared");
        Representation r = cmd == "cone" ? cone(doc.lambda, i, it->second)
                                         : dual_cone(doc.lambda, i, it->second);
        render_representation(r, inv, out);
    } else { // dual
        Representation r = build_named_rep(doc.lambda, inv.pos[1], inv.pos[2], inv.pos[3]);
        OppositeData opp = opposite_algebra(doc.lambda);
        render_representation(dual_representation(opp, r), inv, out);
    }
    return 0;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Invocation inv;
    for (const std::string& a : args) {
        if (a == "--json")
            inv.json_mode = true;
        else if (a.rfind("--", 0) == 0) {
            err << "unknown flag '" << a << "'\n" << kUsage;
            return 2;
        } else
            inv.pos.push_back(a);
    }
    if (inv.pos.empty()) {
        err << kUsage;
        return 2;
    }
    try {
        return dispatch(inv, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace gbpa
