#include "gbpa/spec_lang.hpp"

#include <cctype>
#include <sstream>

namespace gbpa {

namespace {

struct Token {
    std::string text;
    int line;
    int col;
    bool symbol; // single punctuation character
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    static const std::string symbols = "{};*+-[],/";
    while (i < text.size()) {
        char c = text[i];
        if (c == '#') {
            while (i < text.size() && text[i] != '\n') advance(text[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(c);
            ++i;
            continue;
        }
        if (symbols.find(c) != std::string::npos) {
            out.push_back({std::string(1, c), line, col, true});
            advance(c);
            ++i;
            continue;
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.') {
            Token t{"", line, col, false};
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_' ||
                    text[i] == '.')) {
                t.text += text[i];
                advance(text[i++]);
            }
            out.push_back(std::move(t));
            continue;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", line, col);
    }
    return out;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

class Parser {
public:
    Parser(const std::string& text, std::size_t max_path_len)
        : tokens_(tokenize(text)), max_len_(max_path_len) {
        if (tokens_.empty()) throw SyntaxError("empty input", 1, 1);
    }

    SpecDocument run() {
        while (!at_end()) {
            const Token& t = peek();
            if (t.text == "field")
                parse_field();
            else if (t.text == "algebra")
                parse_algebra();
            else if (t.text == "gamma")
                parse_gamma();
            else if (t.text == "relations")
                parse_relations();
            else if (t.text == "module")
                parse_module();
            else
                fail("expected a top-level declaration, got '" + t.text + "'");
        }
        if (!gamma_seen_) fail_at(tokens_.back(), "missing gamma block");
        build_lambda();
        build_modules();
        return std::move(doc_);
    }

private:
    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = at_end() ? tokens_.back() : peek();
        throw SyntaxError(msg, t.line, t.col);
    }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) {
        throw SyntaxError(msg, t.line, t.col);
    }

    bool at_end() const { return pos_ >= tokens_.size(); }
    const Token& peek() const {
        if (at_end()) throw SyntaxError("unexpected end of input", tokens_.back().line,
                                        tokens_.back().col);
        return tokens_[pos_];
    }
    Token next() {
        const Token& t = peek();
        ++pos_;
        return t;
    }
    bool accept(const std::string& s) {
        if (!at_end() && tokens_[pos_].text == s) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(const std::string& s) {
        if (!accept(s)) fail("expected '" + s + "'");
    }
    std::string name_token(const std::string& what) {
        const Token& t = peek();
        if (t.symbol) fail("expected " + what);
        ++pos_;
        return t.text;
    }

    void parse_field() {
        next(); // field
        std::string kind = name_token("a field name");
        if (kind == "Q") {
            doc_.field = FieldSpec::rationals();
        } else if (kind == "GF") {
            const Token& t = peek();
            std::string p = name_token("a prime");
            if (!is_integer(p)) fail_at(t, "expected a prime");
            doc_.field = FieldSpec::prime_field(std::stoll(p));
        } else {
            fail("unknown field '" + kind + "'");
        }
        accept(";");
    }

    void parse_algebra() {
        next(); // algebra
        Token name_tok = peek();
        std::string name = name_token("an algebra name");
        if (doc_.algebras.count(name)) fail_at(name_tok, "algebra '" + name + "' redeclared");
        Quiver sigma;
        std::vector<RelationCombo> omega;
        if (accept("k")) {
            sigma.add_vertex("1");
            accept(";");
        } else {
            expect("{");
            // Relations are resolved after all arrows are known.
            std::vector<std::size_t> rel_starts;
            while (!accept("}")) {
                std::string item = name_token("an algebra item");
                if (item == "vertices") {
                    while (!accept(";")) {
                        Token vt = peek();
                        std::string v = name_token("a vertex name");
                        if (sigma.has_vertex(v)) fail_at(vt, "vertex '" + v + "' redeclared");
                        sigma.add_vertex(v);
                    }
                } else if (item == "arrow") {
                    parse_arrow_into(sigma);
                } else if (item == "rel") {
                    rel_starts.push_back(pos_);
                    skip_to_semicolon();
                } else {
                    fail("expected 'vertices', 'arrow' or 'rel'");
                }
            }
            std::size_t after = pos_;
            for (std::size_t start : rel_starts) {
                pos_ = start;
                omega.push_back(parse_combo(sigma));
                expect(";");
            }
            pos_ = after;
        }
        doc_.algebra_order.push_back(name);
        doc_.algebras[name] = std::make_shared<VertexAlgebra>(
            build_vertex_algebra(sigma, omega, doc_.field, max_len_));
    }

    void parse_arrow_into(Quiver& q) {
        Token nt = peek();
        std::string aname = name_token("an arrow name");
        if (q.has_arrow(aname)) fail_at(nt, "arrow '" + aname + "' redeclared");
        Token st = peek();
        std::string src = name_token("a source vertex");
        Token dt = peek();
        std::string dst = name_token("a target vertex");
        if (!q.has_vertex(src)) throw UnknownNameError(pos_str(st) + "unknown vertex '" + src + "'");
        if (!q.has_vertex(dst)) throw UnknownNameError(pos_str(dt) + "unknown vertex '" + dst + "'");
        q.add_arrow(aname, src, dst);
        expect(";");
    }

    void skip_to_semicolon() {
        while (!accept(";")) next();
    }

    static std::string pos_str(const Token& t) {
        return std::to_string(t.line) + ":" + std::to_string(t.col) + ": ";
    }

    // combo := term (('+'|'-') term)*, term := [coeff '*'] path,
    // path := arrow ('*' arrow)*, coeff := int | int '/' int
    RelationCombo parse_combo(const Quiver& q) {
        RelationCombo rel;
        bool negative = accept("-");
        while (true) {
            rel.terms.push_back(parse_term(q, negative));
            if (accept("+"))
                negative = false;
            else if (accept("-"))
                negative = true;
            else
                break;
        }
        return rel;
    }

    std::pair<Scalar, Path> parse_term(const Quiver& q, bool negative) {
        Scalar coeff(1);
        if (is_integer(peek().text)) {
            Scalar num(peek().text);
            std::size_t save = pos_;
            next();
            if (accept("/")) {
                const Token& dt = peek();
                std::string den = name_token("a denominator");
                if (!is_integer(den) || Scalar(den) == 0) fail_at(dt, "expected a nonzero integer");
                num /= Scalar(den);
            }
            if (accept("*")) {
                coeff = num;
            } else {
                pos_ = save; // a bare integer is an arrow name after all
            }
        }
        if (negative) coeff = -coeff;
        std::vector<std::size_t> arrows;
        while (true) {
            Token at = peek();
            std::string aname = name_token("an arrow name");
            if (!q.has_arrow(aname))
                throw UnknownNameError(pos_str(at) + "unknown arrow '" + aname + "'");
            arrows.push_back(q.arrow_index(aname));
            if (!accept("*")) break;
        }
        std::size_t source = q.arrow(arrows.front()).source;
        return {coeff, make_path(q, source, std::move(arrows))};
    }

    void parse_gamma() {
        Token gt = next(); // gamma
        if (gamma_seen_) fail_at(gt, "gamma redeclared");
        gamma_seen_ = true;
        expect("{");
        while (!accept("}")) {
            std::string item = name_token("a gamma item");
            if (item == "vertex") {
                Token vt = peek();
                std::string v = name_token("a vertex name");
                if (gamma_.has_vertex(v)) fail_at(vt, "vertex '" + v + "' redeclared");
                Token at = peek();
                std::string alg = name_token("an algebra name");
                if (!doc_.algebras.count(alg))
                    throw UnknownNameError(pos_str(at) + "unknown algebra '" + alg + "'");
                gamma_.add_vertex(v);
                doc_.vertex_algebra_names.push_back(alg);
                expect(";");
            } else if (item == "arrow") {
                parse_arrow_into(gamma_);
            } else {
                fail("expected 'vertex' or 'arrow'");
            }
        }
    }

    void parse_relations() {
        next(); // relations
        expect("{");
        while (!accept("}")) {
            std::string item = name_token("a relation item");
            if (item != "rel") fail("expected 'rel'");
            relations_.push_back(parse_combo(gamma_));
            expect(";");
        }
    }

    void parse_module() {
        next(); // module
        Token name_tok = peek();
        std::string name = name_token("a module name");
        if (doc_.modules.count(name)) fail_at(name_tok, "module '" + name + "' redeclared");
        expect("over");
        Token at = peek();
        std::string alg = name_token("an algebra name");
        if (!doc_.algebras.count(alg))
            throw UnknownNameError(pos_str(at) + "unknown algebra '" + alg + "'");
        expect("{");
        pending_modules_.push_back({name, alg, pos_});
        int depth = 1;
        while (depth > 0) {
            const Token& t = peek();
            if (t.text == "{") ++depth;
            if (t.text == "}") --depth;
            next();
        }
    }

    Matrix parse_matrix(std::size_t rows, std::size_t cols) {
        Matrix out(rows, cols, doc_.field);
        Token open = peek();
        expect("[");
        if (accept("]")) {
            if (rows != 0 && cols != 0) fail_at(open, "empty matrix for a nonzero shape");
            return out;
        }
        std::size_t r = 0;
        do {
            if (r >= rows) fail_at(open, "too many matrix rows");
            expect("[");
            std::size_t c = 0;
            if (!accept("]")) {
                do {
                    if (c >= cols) fail_at(open, "too many matrix entries in a row");
                    out.at(r, c++) = parse_scalar();
                } while (accept(","));
                expect("]");
            }
            if (c != cols) fail_at(open, "expected " + std::to_string(cols) + " entries per row");
            ++r;
        } while (accept(","));
        expect("]");
        if (r != rows) fail_at(open, "expected " + std::to_string(rows) + " rows");
        return out;
    }

    Scalar parse_scalar() {
        bool negative = accept("-");
        const Token& t = peek();
        std::string num = name_token("a number");
        if (!is_integer(num)) fail_at(t, "expected a number");
        Scalar v(num);
        if (accept("/")) {
            const Token& dt = peek();
            std::string den = name_token("a denominator");
            if (!is_integer(den) || Scalar(den) == 0) fail_at(dt, "expected a nonzero integer");
            v /= Scalar(den);
        }
        return doc_.field.normalize(negative ? -v : v);
    }

    void build_lambda() {
        std::vector<VertexAlgebraPtr> algs;
        for (const std::string& n : doc_.vertex_algebra_names) algs.push_back(doc_.algebras[n]);
        doc_.lambda = std::make_shared<GbpAlgebra>(
            build_gbp_algebra(gamma_, std::move(algs), relations_, doc_.field));
    }

    void build_modules() {
        for (const auto& [name, alg, start] : pending_modules_) {
            VertexAlgebraPtr a = doc_.algebras[alg];
            const Quiver& sigma = a->sigma();
            std::vector<std::size_t> dims(sigma.vertex_count(), 0);
            std::vector<Matrix> maps(sigma.arrow_count());
            std::vector<bool> have_map(sigma.arrow_count(), false);
            pos_ = start;
            while (!accept("}")) {
                std::string item = name_token("a module item");
                if (item == "vertex") {
                    Token vt = peek();
                    std::string v = name_token("a vertex name");
                    if (!sigma.has_vertex(v))
                        throw UnknownNameError(pos_str(vt) + "unknown vertex '" + v + "'");
                    expect("dim");
                    const Token& dt = peek();
                    std::string d = name_token("a dimension");
                    if (!is_integer(d)) fail_at(dt, "expected a dimension");
                    dims[sigma.vertex_index(v)] = std::stoul(d);
                    expect(";");
                } else if (item == "arrow") {
                    Token at = peek();
                    std::string aname = name_token("an arrow name");
                    if (!sigma.has_arrow(aname))
                        throw UnknownNameError(pos_str(at) + "unknown arrow '" + aname + "'");
                    std::size_t idx = sigma.arrow_index(aname);
                    maps[idx] = parse_matrix(dims[sigma.arrow(idx).source],
                                             dims[sigma.arrow(idx).target]);
                    have_map[idx] = true;
                    expect(";");
                } else {
                    fail("expected 'vertex' or 'arrow'");
                }
            }
            for (std::size_t t = 0; t < maps.size(); ++t)
                if (!have_map[t])
                    maps[t] = Matrix(dims[sigma.arrow(t).source], dims[sigma.arrow(t).target],
                                     doc_.field);
            doc_.module_order.push_back(name);
            doc_.module_algebra[name] = alg;
            doc_.modules[name] = module_from_sigma_rep(a, dims, maps);
        }
    }

    struct PendingModule {
        std::string name;
        std::string algebra;
        std::size_t start;
    };

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    std::size_t max_len_;
    SpecDocument doc_;
    Quiver gamma_;
    bool gamma_seen_ = false;
    std::vector<RelationCombo> relations_;
    std::vector<PendingModule> pending_modules_;
};

std::string combo_to_string(const Quiver& q, const RelationCombo& rel, const FieldSpec& field) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, p] : rel.terms) {
        Scalar c = coeff;
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
        if (c != 1) out << field.to_string(c) << "*";
        bool first_arrow = true;
        for (std::size_t a : p.arrows) {
            if (!first_arrow) out << "*";
            out << q.arrow(a).name;
            first_arrow = false;
        }
    }
    return out.str();
}

} // namespace

SpecDocument parse_spec(const std::string& text, std::size_t max_path_len) {
    return Parser(text, max_path_len).run();
}

std::string render_spec(const GbpAlgebra& lambda) {
    const FieldSpec& field = lambda.field();
    std::ostringstream out;
    out << "field " << (field.kind() == FieldKind::Rationals
                            ? std::string("Q")
                            : "GF " + std::to_string(field.characteristic()))
        << ";\n\n";

    // One block per distinct vertex algebra, in first-use order.
    std::vector<VertexAlgebraPtr> distinct;
    std::map<const VertexAlgebra*, std::string> alg_name;
    for (VertexAlgebraPtr a : lambda.vertex_algebras())
        if (!alg_name.count(a.get())) {
            alg_name[a.get()] = "A" + std::to_string(distinct.size() + 1);
            distinct.push_back(a);
        }
    for (VertexAlgebraPtr a : distinct) {
        const Quiver& sigma = a->sigma();
        out << "algebra " << alg_name[a.get()];
        if (sigma.vertex_count() == 1 && sigma.arrow_count() == 0) {
            out << " k;\n";
            continue;
        }
        out << " {\n  vertices";
        for (std::size_t v = 0; v < sigma.vertex_count(); ++v)
            out << " " << sigma.vertex_name(v);
        out << ";\n";
        for (const Arrow& ar : sigma.arrows())
            out << "  arrow " << ar.name << " " << sigma.vertex_name(ar.source) << " "
                << sigma.vertex_name(ar.target) << ";\n";
        for (const RelationCombo& rel : a->omega())
            out << "  rel " << combo_to_string(sigma, rel, field) << ";\n";
        out << "}\n";
    }

    const Quiver& gamma = lambda.gamma();
    out << "\ngamma {\n";
    for (std::size_t v = 0; v < gamma.vertex_count(); ++v)
        out << "  vertex " << gamma.vertex_name(v) << " "
            << alg_name[lambda.vertex_algebra(v).get()] << ";\n";
    for (const Arrow& ar : gamma.arrows())
        out << "  arrow " << ar.name << " " << gamma.vertex_name(ar.source) << " "
            << gamma.vertex_name(ar.target) << ";\n";
    out << "}\n";

    if (!lambda.relations().empty()) {
        out << "\nrelations {\n";
        for (const RelationCombo& rel : lambda.relations())
            out << "  rel " << combo_to_string(gamma, rel, field) << ";\n";
        out << "}\n";
    }
    return out.str();
}

} // namespace gbpa
