#include "gbpa/quiver.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gbpa {

std::size_t Quiver::add_vertex(const std::string& name) {
    if (has_vertex(name)) throw Error("duplicate vertex name: " + name);
    vertices_.push_back(name);
    return vertices_.size() - 1;
}

std::size_t Quiver::add_arrow(const std::string& name, const std::string& src,
                              const std::string& dst) {
    return add_arrow_by_index(name, vertex_index(src), vertex_index(dst));
}

std::size_t Quiver::add_arrow_by_index(const std::string& name, std::size_t src, std::size_t dst) {
    if (has_arrow(name)) throw Error("duplicate arrow name: " + name);
    if (src >= vertices_.size() || dst >= vertices_.size())
        throw UnknownVertexError("arrow " + name + " references an undeclared vertex");
    arrows_.push_back({name, src, dst});
    return arrows_.size() - 1;
}

std::size_t Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return i;
    throw UnknownVertexError("unknown vertex: " + name);
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
        if (arrows_[i].name == name) return i;
    throw UnknownNameError("unknown arrow: " + name);
}

bool Quiver::has_vertex(const std::string& name) const {
    return std::any_of(vertices_.begin(), vertices_.end(),
                       [&](const std::string& v) { return v == name; });
}

bool Quiver::has_arrow(const std::string& name) const {
    return std::any_of(arrows_.begin(), arrows_.end(),
                       [&](const Arrow& a) { return a.name == name; });
}

std::size_t Path::target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrow(arrows.back()).target;
}

Path make_path(const Quiver& q, std::size_t source, std::vector<std::size_t> arrows) {
    std::size_t at = source;
    for (std::size_t a : arrows) {
        if (q.arrow(a).source != at)
            throw InvalidRelationError("non-composable arrow sequence in path");
        at = q.arrow(a).target;
    }
    if (!arrows.empty() && q.arrow(arrows.front()).source != source)
        throw InvalidRelationError("path source does not match first arrow");
    return Path{source, std::move(arrows)};
}

std::string path_to_string(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertex_name(p.source);
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += "*";
        out += q.arrow(p.arrows[i]).name;
    }
    return out;
}

void validate_relation(const Quiver& q, const RelationCombo& rel) {
    if (rel.terms.empty()) throw InvalidRelationError("empty relation");
    std::size_t src = rel.terms.front().second.source;
    std::size_t dst = rel.terms.front().second.target(q);
    std::set<Path> seen;
    for (const auto& [coeff, p] : rel.terms) {
        if (coeff == 0) throw InvalidRelationError("zero coefficient in relation");
        if (p.length() < 2)
            throw InvalidRelationError("relation term of length < 2: " + path_to_string(q, p));
        make_path(q, p.source, p.arrows);
        if (p.source != src || p.target(q) != dst)
            throw InvalidRelationError("relation terms are not parallel");
        if (!seen.insert(p).second)
            throw InvalidRelationError("repeated path in relation: " + path_to_string(q, p));
    }
}

bool is_acyclic(const Quiver& q) {
    std::vector<std::size_t> indeg(q.vertex_count(), 0);
    for (const Arrow& a : q.arrows()) ++indeg[a.target];
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < q.vertex_count(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t v = ready.front();
        ready.pop_front();
        ++seen;
        for (const Arrow& a : q.arrows())
            if (a.source == v && --indeg[a.target] == 0) ready.push_back(a.target);
    }
    return seen == q.vertex_count();
}

std::vector<Path> enumerate_paths(const Quiver& q, std::size_t from, std::size_t to,
                                  std::size_t max_len) {
    std::vector<Path> out;
    for (const Path& p : enumerate_all_paths(q, max_len))
        if (p.source == from && p.target(q) == to) out.push_back(p);
    return out;
}

std::vector<Path> enumerate_all_paths(const Quiver& q, std::size_t max_len) {
    std::vector<Path> current;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) current.push_back(Path::trivial(v));
    std::vector<Path> all = current;
    for (std::size_t len = 1; len <= max_len && !current.empty(); ++len) {
        std::vector<Path> next;
        for (const Path& p : current) {
            std::size_t at = p.target(q);
            for (std::size_t a = 0; a < q.arrow_count(); ++a) {
                if (q.arrow(a).source != at) continue;
                Path ext = p;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end());
        all.insert(all.end(), next.begin(), next.end());
        current = std::move(next);
    }
    return all;
}

Path reverse_path(const Path& p, const Quiver& q) {
    Path out;
    out.source = p.target(q);
    out.arrows.assign(p.arrows.rbegin(), p.arrows.rend());
    return out;
}

OppositeQuiver opposite(const Quiver& q, const std::vector<RelationCombo>& rels) {
    OppositeQuiver out;
    for (std::size_t v = 0; v < q.vertex_count(); ++v) out.quiver.add_vertex(q.vertex_name(v));
    for (const Arrow& a : q.arrows())
        out.quiver.add_arrow_by_index(a.name, a.target, a.source);
    for (const RelationCombo& rel : rels) {
        RelationCombo rev;
        for (const auto& [coeff, p] : rel.terms)
            rev.terms.emplace_back(coeff, reverse_path(p, q));
        out.relations.push_back(std::move(rev));
    }
    return out;
}

} // namespace gbpa
