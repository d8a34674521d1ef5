#include "regenum/species.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "regenum/symfunc.hpp"

namespace regenum {

namespace {

// Letter used in the canonical bracket form.
char atom_letter(const SpeciesAtom& a, IndexMode mode) {
    switch (a.kind) {
        case AtomKind::SetK:
            return mode == IndexMode::Asymmetry ? 'e' : 'h';
        case AtomKind::MultisetK:
            return 'h';
        case AtomKind::CycleK:
            return 'c';
        case AtomKind::ListK:
            return 'l';
        case AtomKind::Singleton:
            return 'x';
    }
    return '?';
}

}  // namespace

std::string SpeciesExpr::canonical() const {
    // Normalize: sort atoms by (letter, k), merge multiplicities.
    std::map<std::pair<char, int>, long> merged;
    for (const auto& [atom, mult] : inner) merged[{atom_letter(atom, mode), atom.k}] += mult;
    std::ostringstream os;
    os << (outer == OuterKind::SetOuter ? "E[" : "H[");
    bool first = true;
    for (const auto& [key, mult] : merged) {
        if (!first) os << "+";
        if (mult != 1) os << mult << "*";
        if (key.first == 'x')
            os << "x";
        else
            os << key.first << key.second;
        first = false;
    }
    os << "]";
    return os.str();
}

PowerSumPoly atom_index_poly(const SpeciesAtom& atom, IndexMode mode) {
    switch (atom.kind) {
        case AtomKind::SetK:
            return mode == IndexMode::Asymmetry ? e_poly(atom.k) : h_poly(atom.k);
        case AtomKind::MultisetK:
            return h_poly(atom.k);
        case AtomKind::CycleK:
            if (mode == IndexMode::Asymmetry)
                throw std::invalid_argument(
                    "atom_index_poly: asymmetry index of a cycle is unsupported");
            return cycle_z_poly(atom.k);
        case AtomKind::ListK:
            return power_poly(atom.k);
        case AtomKind::Singleton:
            return power_poly(1);
    }
    throw std::logic_error("atom_index_poly: unreachable");
}

PowerSumPoly compile_exponent(const SpeciesExpr& expr, int m, long W) {
    if (expr.inner.empty()) throw std::invalid_argument("compile_exponent: empty inner species");
    if (m < 1) throw std::invalid_argument("compile_exponent: need at least one variable");
    if (W < 0) throw std::invalid_argument("compile_exponent: negative weight bound");

    PowerSumPoly inner_poly;
    for (const auto& [atom, mult] : expr.inner) {
        if (atom.k < 1) throw std::invalid_argument("compile_exponent: atom index must be >= 1");
        if (mult < 1) throw std::invalid_argument("compile_exponent: multiplicity must be >= 1");
        inner_poly = add(inner_poly, scale(atom_index_poly(atom, expr.mode), Rat(mult)));
    }
    if (inner_poly.constant_term() != 0)
        throw std::logic_error("compile_exponent: inner polynomial has a constant term");

    PowerSumPoly g(W);
    for (int k = 1; k <= m; ++k) {
        // Layer k of exp(sum p_k/k)[P]; beyond k = m every variable index
        // exceeds the truncation.
        PowerSumPoly layer = plethysm_pn(inner_poly, k).restricted_vars(m).truncated(W);
        if (layer.is_zero()) continue;
        int sigma = (expr.outer == OuterKind::MultisetOuter || k % 2 == 1) ? 1 : -1;
        g = add(g, scale(layer, make_rat(sigma, k)));
    }
    return g;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("species parse error: expected '" + std::string(1, c) +
                                        "' in \"" + s + "\"");
    }
    int parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("species parse error: expected integer");
        return std::stoi(s.substr(start, pos - start));
    }

    // One atom term in bracket form: [<mult>*] letter [k]
    std::pair<SpeciesAtom, int> parse_bracket_atom() {
        skip_ws();
        int mult = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mult = parse_int();
            expect('*');
            skip_ws();
        }
        if (pos >= s.size()) throw std::invalid_argument("species parse error: missing atom");
        char letter = s[pos++];
        SpeciesAtom atom{};
        switch (letter) {
            case 'e':
                atom.kind = AtomKind::SetK;
                break;
            case 'h':
                atom.kind = AtomKind::MultisetK;
                break;
            case 'c':
                atom.kind = AtomKind::CycleK;
                break;
            case 'l':
                atom.kind = AtomKind::ListK;
                break;
            case 'x':
                atom.kind = AtomKind::Singleton;
                atom.k = 1;
                return {atom, mult};
            default:
                throw std::invalid_argument(std::string("species parse error: unknown atom '") +
                                            letter + "'");
        }
        atom.k = parse_int();
        if (atom.k < 1) throw std::invalid_argument("species parse error: atom index must be >= 1");
        return {atom, mult};
    }

    // Composition-form atom: E<k>, L<k>, C<k>, X
    std::pair<SpeciesAtom, int> parse_species_atom() {
        skip_ws();
        int mult = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            mult = parse_int();
            expect('*');
            skip_ws();
        }
        if (pos >= s.size()) throw std::invalid_argument("species parse error: missing species");
        char letter = s[pos++];
        SpeciesAtom atom{};
        switch (letter) {
            case 'E':
                atom.kind = AtomKind::SetK;
                break;
            case 'L':
                atom.kind = AtomKind::ListK;
                break;
            case 'C':
                atom.kind = AtomKind::CycleK;
                break;
            case 'X':
                atom.kind = AtomKind::Singleton;
                atom.k = 1;
                return {atom, mult};
            default:
                throw std::invalid_argument(std::string("species parse error: unknown species '") +
                                            letter + "'");
        }
        atom.k = parse_int();
        if (atom.k < 1) throw std::invalid_argument("species parse error: species index must be >= 1");
        return {atom, mult};
    }
};

void check_expr(const SpeciesExpr& expr) {
    if (expr.inner.empty()) throw std::invalid_argument("species parse error: empty inner sum");
    for (const auto& [atom, mult] : expr.inner) {
        (void)mult;
        if (atom.kind == AtomKind::CycleK && expr.mode == IndexMode::Asymmetry)
            throw std::invalid_argument(
                "species parse error: cycles have no asymmetry index series; use H[...] or Z(E o ...)");
    }
}

}  // namespace

SpeciesExpr parse_species(const std::string& text) {
    if (auto preset = lookup_preset(text)) return *preset;

    Parser p(text);
    p.skip_ws();
    SpeciesExpr expr;

    // Composition forms: Z(E o ...), G(E o ...), Gamma(E o ...)
    if (p.s.compare(p.pos, 2, "Z(") == 0 || p.s.compare(p.pos, 2, "G(") == 0 ||
        p.s.compare(p.pos, 6, "Gamma(") == 0) {
        bool cycle_mode = p.s[p.pos] == 'Z';
        expr.mode = cycle_mode ? IndexMode::CycleIndex : IndexMode::Asymmetry;
        // Z of a set-of-structures has the plus-sign layer pattern of H[..];
        // the asymmetry series alternates.
        expr.outer = cycle_mode ? OuterKind::MultisetOuter : OuterKind::SetOuter;
        while (p.pos < p.s.size() && p.s[p.pos] != '(') ++p.pos;
        p.expect('(');
        p.skip_ws();
        if (!p.eat('E'))
            throw std::invalid_argument("species parse error: outer species must be E");
        p.skip_ws();
        if (p.pos < p.s.size() && p.s[p.pos] == 'o') {
            ++p.pos;
        } else {
            throw std::invalid_argument("species parse error: expected 'o' composition");
        }
        expr.inner.push_back(p.parse_species_atom());
        while (p.eat('+')) expr.inner.push_back(p.parse_species_atom());
        p.expect(')');
        p.skip_ws();
        if (p.pos != p.s.size())
            throw std::invalid_argument("species parse error: trailing input in \"" + text + "\"");
        check_expr(expr);
        return expr;
    }

    // Bracket forms: E[...] / H[...]
    p.skip_ws();
    if (p.pos >= p.s.size() || (p.s[p.pos] != 'E' && p.s[p.pos] != 'H'))
        throw std::invalid_argument("species parse error: expected E[...], H[...], Z(E o ...) or a preset name in \"" +
                                    text + "\"");
    expr.outer = p.s[p.pos] == 'E' ? OuterKind::SetOuter : OuterKind::MultisetOuter;
    // In bracket form the atoms are symmetric functions; letters e/h/c/l/x
    // already pin the series, with 'e' the asymmetry atom.
    expr.mode = IndexMode::Asymmetry;
    ++p.pos;
    p.expect('[');
    expr.inner.push_back(p.parse_bracket_atom());
    while (p.eat('+')) expr.inner.push_back(p.parse_bracket_atom());
    p.expect(']');
    p.skip_ws();
    if (p.pos != p.s.size())
        throw std::invalid_argument("species parse error: trailing input in \"" + text + "\"");
    bool has_cycle = false, has_set = false;
    for (const auto& [atom, mult] : expr.inner) {
        (void)mult;
        has_cycle |= atom.kind == AtomKind::CycleK;
        has_set |= atom.kind == AtomKind::SetK;
    }
    if (has_cycle) {
        // c_k is the k-cycle index: only meaningful in a plus-sign outer
        // layer, and mixing with e_k would cross series conventions.
        if (expr.outer != OuterKind::MultisetOuter || has_set)
            throw std::invalid_argument(
                "species parse error: cycle atoms require H[...] and do not mix with e atoms");
        expr.mode = IndexMode::CycleIndex;
    }
    check_expr(expr);
    return expr;
}

namespace {

SpeciesExpr bracket(OuterKind outer, std::vector<std::pair<char, int>> atoms) {
    SpeciesExpr e;
    e.outer = outer;
    e.mode = IndexMode::Asymmetry;
    for (auto [letter, k] : atoms) {
        SpeciesAtom a{};
        switch (letter) {
            case 'e':
                a.kind = AtomKind::SetK;
                break;
            case 'h':
                a.kind = AtomKind::MultisetK;
                break;
            case 'l':
                a.kind = AtomKind::ListK;
                break;
            default:
                throw std::logic_error("bad preset atom");
        }
        a.k = k;
        e.inner.push_back({a, 1});
    }
    return e;
}

std::vector<ClassPreset> build_presets() {
    std::vector<ClassPreset> v;
    v.push_back({"simple_graphs", bracket(OuterKind::SetOuter, {{'e', 2}}),
                 "simple graphs: sets of 2-sets, no loops, no multiple edges"});
    v.push_back({"graphs_loops", bracket(OuterKind::SetOuter, {{'h', 2}}),
                 "graphs with loops allowed, no multiple edges"});
    v.push_back({"multigraphs", bracket(OuterKind::MultisetOuter, {{'e', 2}}),
                 "multigraphs: repeated edges allowed, no loops"});
    v.push_back({"multigraphs_loops", bracket(OuterKind::MultisetOuter, {{'h', 2}}),
                 "multigraphs with loops: repeated edges and loops allowed"});
    v.push_back({"hypergraphs_3", bracket(OuterKind::SetOuter, {{'e', 3}}),
                 "loopless 3-uniform hypergraphs without multiplicities"});
    v.push_back({"hypergraphs_4", bracket(OuterKind::SetOuter, {{'e', 4}}),
                 "loopless 4-uniform hypergraphs without multiplicities"});
    v.push_back({"hypergraphs_3_loops", bracket(OuterKind::SetOuter, {{'h', 3}}),
                 "3-uniform hypergraphs with loops (edges are 3-multisets)"});
    v.push_back({"hypergraphs_3_multi", bracket(OuterKind::MultisetOuter, {{'e', 3}}),
                 "3-uniform hypergraphs with repeated edges"});
    v.push_back({"covers_le4", bracket(OuterKind::SetOuter, {{'e', 1}, {'e', 2}, {'e', 3}, {'e', 4}}),
                 "restrictive set covers by distinct blocks of size at most 4"});
    v.push_back({"digraphs", bracket(OuterKind::MultisetOuter, {{'l', 2}}),
                 "directed graphs, loops and repeated arcs allowed, degree = in + out"});
    v.push_back({"young_tableaux", bracket(OuterKind::MultisetOuter, {{'e', 1}, {'e', 2}}),
                 "k-uniform Young tableaux via sets of cells and dominoes"});
    return v;
}

}  // namespace

const std::vector<ClassPreset>& presets() {
    static const std::vector<ClassPreset> v = build_presets();
    return v;
}

std::optional<SpeciesExpr> lookup_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p.expr;
    return std::nullopt;
}

std::string preset_catalog_hash() {
    uint64_t h = 1469598103934665603ull;
    auto feed = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
    };
    for (const auto& p : presets()) {
        feed(p.name);
        feed("=");
        feed(p.expr.canonical());
        feed(";");
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace regenum
