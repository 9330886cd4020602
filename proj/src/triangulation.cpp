#include "anglevol/triangulation.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>

#include "anglevol/errors.hpp"
#include "anglevol/tet_angle.hpp"

namespace anglevol
{

namespace
{

class DisjointSets
{
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int a)
    {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

// Groups elements 0..n-1 by root, classes ordered by smallest member.
std::vector<std::vector<int>> orbits(DisjointSets& ds, int n, std::vector<int>& class_of)
{
    std::map<int, int> root_to_class;
    std::vector<std::vector<int>> out;
    class_of.assign(n, -1);
    for (int e = 0; e < n; ++e) {
        const int r = ds.find(e);
        auto [it, fresh] = root_to_class.try_emplace(r, static_cast<int>(out.size()));
        if (fresh) out.emplace_back();
        out[it->second].push_back(e);
        class_of[e] = it->second;
    }
    return out;
}

struct Token
{
    std::string_view text;
    int column = 0;
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

int parse_int(const Token& tok, int line, const char* what)
{
    int value = 0;
    const auto* first = tok.text.data();
    const auto* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw SyntaxError(std::string("expected integer ") + what + ", got '" +
                              std::string(tok.text) + "'",
                          line, tok.column);
    }
    return value;
}

}  // namespace

Perm4 inverse(const Perm4& p)
{
    Perm4 out{};
    for (int v = 0; v < 4; ++v) out[p[v]] = v;
    return out;
}

bool is_permutation(const Perm4& p)
{
    std::array<bool, 4> seen{};
    for (int v : p) {
        if (v < 0 || v > 3 || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

Triangulation Triangulation::from_gluings(int n_tets, const std::vector<GluingRecord>& records)
{
    if (n_tets < 1) throw GluingInconsistency("a triangulation needs at least one tetrahedron");

    Triangulation t;
    t.n_tets_ = n_tets;
    t.gluings_.assign(4 * n_tets, Gluing{});

    for (const auto& r : records) {
        if (r.tet < 0 || r.tet >= n_tets || r.target < 0 || r.target >= n_tets ||
            r.face < 0 || r.face > 3) {
            throw GluingInconsistency("gluing record refers to a missing tet or face");
        }
        if (!is_permutation(r.perm)) {
            throw GluingInconsistency("gluing of tet " + std::to_string(r.tet) + " face " +
                                      std::to_string(r.face) + " is not a permutation");
        }
        Gluing& g = t.gluings_[4 * r.tet + r.face];
        if (g.target >= 0) {
            throw GluingInconsistency("tet " + std::to_string(r.tet) + " face " +
                                      std::to_string(r.face) + " is glued twice");
        }
        g = Gluing{r.target, r.perm};
    }

    for (int tet = 0; tet < n_tets; ++tet) {
        for (int f = 0; f < 4; ++f) {
            if (t.gluing(tet, f).target < 0) {
                throw UngluedFace("tet " + std::to_string(tet) + " face " + std::to_string(f) +
                                  " is unglued");
            }
        }
    }

    for (int tet = 0; tet < n_tets; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(tet, f);
            const int back_face = g.perm[f];
            if (g.target == tet && back_face == f) {
                throw GluingInconsistency("tet " + std::to_string(tet) + " face " +
                                          std::to_string(f) + " is glued to itself");
            }
            const Gluing& back = t.gluing(g.target, back_face);
            if (back.target != tet || back.perm != inverse(g.perm)) {
                throw GluingInconsistency("gluing of tet " + std::to_string(tet) + " face " +
                                          std::to_string(f) +
                                          " is not matched by the inverse gluing of tet " +
                                          std::to_string(g.target) + " face " +
                                          std::to_string(back_face));
            }
        }
    }

    // Edge orbits: edge {a, b} of tet crosses face f (f not in {a, b}) to
    // edge {perm a, perm b} of the target.
    {
        DisjointSets ds(6 * n_tets);
        for (int tet = 0; tet < n_tets; ++tet) {
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = t.gluing(tet, f);
                for (int s = 0; s < 6; ++s) {
                    const auto [a, b] = kSlotVertices[s];
                    if (a == f || b == f) continue;
                    ds.unite(6 * tet + s, 6 * g.target + edge_slot(g.perm[a], g.perm[b]));
                }
            }
        }
        const auto groups = orbits(ds, 6 * n_tets, t.edge_class_of_);
        for (std::size_t c = 0; c < groups.size(); ++c) {
            EdgeClass ec;
            ec.id = static_cast<int>(c);
            for (int e : groups[c]) ec.members.push_back({e / 6, e % 6});
            t.edge_classes_.push_back(std::move(ec));
        }
    }

    // Vertex orbits, and link vertices as orbits of directed corners
    // (tet, v, w): the end at v of edge vw.
    {
        DisjointSets vs(4 * n_tets);
        DisjointSets corners(16 * n_tets);
        for (int tet = 0; tet < n_tets; ++tet) {
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = t.gluing(tet, f);
                for (int v = 0; v < 4; ++v) {
                    if (v == f) continue;
                    vs.unite(4 * tet + v, 4 * g.target + g.perm[v]);
                    for (int w = 0; w < 4; ++w) {
                        if (w == f || w == v) continue;
                        corners.unite(16 * tet + 4 * v + w,
                                      16 * g.target + 4 * g.perm[v] + g.perm[w]);
                    }
                }
            }
        }
        // An edge glued to itself with reversed orientation has a projective
        // plane as the link of its midpoint.
        for (int tet = 0; tet < n_tets && t.reversed_edge_ < 0; ++tet) {
            for (int s = 0; s < 6; ++s) {
                const auto [a, b] = kSlotVertices[s];
                if (corners.find(16 * tet + 4 * a + b) == corners.find(16 * tet + 4 * b + a)) {
                    t.reversed_edge_ = t.edge_class_of(tet, s);
                    break;
                }
            }
        }

        const auto groups = orbits(vs, 4 * n_tets, t.vertex_class_of_);
        for (std::size_t c = 0; c < groups.size(); ++c) {
            VertexClass vc;
            vc.id = static_cast<int>(c);
            std::vector<int> link_vertices;
            for (int e : groups[c]) {
                const int tet = e / 4, v = e % 4;
                vc.members.push_back({tet, v});
                for (int w = 0; w < 4; ++w) {
                    if (w != v) link_vertices.push_back(corners.find(16 * tet + 4 * v + w));
                }
            }
            std::sort(link_vertices.begin(), link_vertices.end());
            const auto n_link_vertices = std::unique(link_vertices.begin(), link_vertices.end()) -
                                         link_vertices.begin();
            const int faces = static_cast<int>(vc.members.size());
            // Each link triangle has three sides, each glued to exactly one other.
            const int edges = 3 * faces / 2;
            vc.link_euler = static_cast<int>(n_link_vertices) - edges + faces;
            t.vertex_classes_.push_back(std::move(vc));
        }
    }
    return t;
}

bool Triangulation::is_closed_manifold() const
{
    return reversed_edge_ < 0 && std::all_of(vertex_classes_.begin(), vertex_classes_.end(),
                       [](const VertexClass& v) { return v.link_euler == 2; });
}

Triangulation Triangulation::parse(std::string_view text)
{
    int line_no = 0;
    int stage = 0;  // 0: expect header, 1: expect tets, 2: records
    int n_tets = 0;
    std::vector<GluingRecord> records;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = tokenize(line);
        if (tokens.empty()) {
            if (end == text.size()) break;
            continue;
        }

        if (stage == 0) {
            if (tokens.size() != 2 || tokens[0].text != "anglevol-tri" || tokens[1].text != "v1") {
                throw SyntaxError("expected header 'anglevol-tri v1'", line_no, tokens[0].column);
            }
            stage = 1;
        } else if (stage == 1) {
            if (tokens[0].text != "tets") {
                throw SyntaxError("expected 'tets <n>'", line_no, tokens[0].column);
            }
            if (tokens.size() != 2) {
                throw SyntaxError("expected 'tets <n>'", line_no,
                                  tokens.size() > 2 ? tokens[2].column : tokens[0].column);
            }
            n_tets = parse_int(tokens[1], line_no, "tetrahedron count");
            if (n_tets < 1) {
                throw SyntaxError("tetrahedron count must be positive", line_no, tokens[1].column);
            }
            stage = 2;
        } else {
            if (tokens[0].text != "g") {
                throw SyntaxError("expected gluing record 'g <t> <f> <t'> <perm>'", line_no,
                                  tokens[0].column);
            }
            if (tokens.size() != 5) {
                throw SyntaxError("gluing record needs 4 fields", line_no,
                                  tokens.size() > 5 ? tokens[5].column : tokens.back().column);
            }
            GluingRecord r;
            r.tet = parse_int(tokens[1], line_no, "tet index");
            r.face = parse_int(tokens[2], line_no, "face index");
            r.target = parse_int(tokens[3], line_no, "target tet index");
            if (r.tet < 0 || r.tet >= n_tets) {
                throw SyntaxError("tet index out of range", line_no, tokens[1].column);
            }
            if (r.face < 0 || r.face > 3) {
                throw SyntaxError("face index must be 0..3", line_no, tokens[2].column);
            }
            if (r.target < 0 || r.target >= n_tets) {
                throw SyntaxError("target tet index out of range", line_no, tokens[3].column);
            }
            const auto& p = tokens[4];
            if (p.text.size() != 4) {
                throw SyntaxError("permutation must be four digits", line_no, p.column);
            }
            for (int v = 0; v < 4; ++v) {
                const char ch = p.text[v];
                if (ch < '0' || ch > '3') {
                    throw SyntaxError("permutation digit must be 0..3", line_no, p.column + v);
                }
                r.perm[v] = ch - '0';
            }
            if (!is_permutation(r.perm)) {
                throw SyntaxError("'" + std::string(p.text) + "' is not a permutation", line_no,
                                  p.column);
            }
            records.push_back(r);
        }
        if (end == text.size()) break;
    }

    if (stage == 0) throw SyntaxError("missing header 'anglevol-tri v1'", std::max(line_no, 1), 1);
    if (stage == 1) throw SyntaxError("missing 'tets <n>' line", line_no, 1);

    Triangulation t = from_gluings(n_tets, records);
    vertex_classes_and_links(t);
    return t;
}

std::string Triangulation::serialize() const
{
    std::ostringstream out;
    out << "anglevol-tri v1\n";
    out << "tets " << n_tets_ << "\n";
    for (int tet = 0; tet < n_tets_; ++tet) {
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = gluing(tet, f);
            out << "g " << tet << " " << f << " " << g.target << " ";
            for (int v : g.perm) out << v;
            out << "\n";
        }
    }
    return out.str();
}

const std::vector<EdgeClass>& edge_classes(const Triangulation& t) { return t.edge_classes(); }

const std::vector<VertexClass>& vertex_classes_and_links(const Triangulation& t)
{
    if (t.reversed_edge_class() >= 0) {
        throw BadLink("edge class " + std::to_string(t.reversed_edge_class()) +
                      " is glued to itself with reversed orientation");
    }
    for (const auto& vc : t.vertex_classes()) {
        if (vc.link_euler != 2) {
            throw BadLink("vertex class " + std::to_string(vc.id) + " has link Euler characteristic " +
                          std::to_string(vc.link_euler) + " (expected 2)");
        }
    }
    return t.vertex_classes();
}

Triangulation five_cell()
{
    // Tet t spans simplex vertices {0..4} \ {t} in ascending order.
    auto verts = [](int t) {
        std::array<int, 4> out{};
        int n = 0;
        for (int g = 0; g < 5; ++g) {
            if (g != t) out[n++] = g;
        }
        return out;
    };
    auto local = [&](int t, int global) {
        const auto v = verts(t);
        return static_cast<int>(std::find(v.begin(), v.end(), global) - v.begin());
    };

    std::vector<GluingRecord> records;
    for (int t = 0; t < 5; ++t) {
        const auto vt = verts(t);
        for (int f = 0; f < 4; ++f) {
            // The face opposite global vertex g is shared with tet g, where
            // it sits opposite the local index of t.
            const int g = vt[f];
            GluingRecord r{t, f, g, {}};
            for (int v = 0; v < 4; ++v) r.perm[v] = v == f ? local(g, t) : local(g, vt[v]);
            records.push_back(r);
        }
    }
    return Triangulation::from_gluings(5, records);
}

}  // namespace anglevol
