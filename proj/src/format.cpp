#include "malg/format.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "malg/error.hpp"

namespace malg {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == '#') break;
        if (ch == ' ' || ch == '\t' || ch == '\r') {
            if (!cur.empty()) { out.push_back(cur); cur.clear(); }
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ExtRational need_ext_rational(const std::string& tok, std::size_t line) {
    auto v = parse_ext_rational(tok);
    if (!v) fail(line, "expected a nonnegative rational or 'inf', got '" + tok + "'");
    return *v;
}

Rational need_rational(const std::string& tok, std::size_t line) {
    auto v = parse_rational(tok);
    if (!v) fail(line, "expected a rational number, got '" + tok + "'");
    return *v;
}

std::uint64_t need_nat(const std::string& tok, std::size_t line) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        fail(line, "expected a natural number, got '" + tok + "'");
    try {
        return std::stoull(tok);
    } catch (const std::exception&) {
        fail(line, "natural number out of range: '" + tok + "'");
    }
}

const ParsedFile::Line* find_key(const ParsedFile& f, const std::string& key) {
    for (const auto& ln : f.lines)
        if (ln.tokens.front() == key) return &ln;
    return nullptr;
}

ParsedFile parse_as(const std::string& content, const std::string& kind) {
    ParsedFile f = parse_file(content);
    if (f.kind != kind)
        throw ParseError("expected kind '" + kind + "', file declares '" + f.kind + "'");
    return f;
}

} // namespace

ParsedFile parse_file(const std::string& content) {
    ParsedFile out;
    std::istringstream in(content);
    std::string line;
    std::size_t number = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++number;
        auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        if (!saw_header) {
            if (tokens.size() != 3 || tokens[0] != "malg" || tokens[1] != "v1")
                fail(number, "expected header 'malg v1 <kind>'");
            out.kind = tokens[2];
            saw_header = true;
            continue;
        }
        out.lines.push_back({number, std::move(tokens)});
    }
    if (!saw_header) throw ParseError("empty input: expected header 'malg v1 <kind>'");
    return out;
}

AlgebraInput parse_algebra(const std::string& content) {
    ParsedFile f = parse_as(content, "algebra");
    AlgebraInput out;
    bool saw_atoms = false;
    for (const auto& ln : f.lines) {
        if (ln.tokens[0] == "atoms") {
            if (saw_atoms) fail(ln.number, "duplicate 'atoms' line");
            saw_atoms = true;
            out.atom_labels.assign(ln.tokens.begin() + 1, ln.tokens.end());
        } else {
            fail(ln.number, "unknown key '" + ln.tokens[0] + "' for kind algebra");
        }
    }
    if (!saw_atoms) throw ParseError("kind algebra requires an 'atoms' line");
    std::set<std::string> seen(out.atom_labels.begin(), out.atom_labels.end());
    if (seen.size() != out.atom_labels.size())
        throw ParseError("atom labels must be distinct");
    return out;
}

std::string serialize_algebra(const AlgebraInput& a) {
    std::ostringstream out;
    out << "malg v1 algebra\n";
    out << "atoms";
    for (const auto& l : a.atom_labels) out << ' ' << l;
    out << '\n';
    return out.str();
}

MeasurePairInput parse_measure_pair(const std::string& content) {
    ParsedFile f = parse_as(content, "measure_pair");
    MeasurePairInput out;
    bool saw_atoms = false, saw_mu = false, saw_nu = false;
    for (const auto& ln : f.lines) {
        const auto& key = ln.tokens[0];
        if (key == "atoms") {
            if (saw_atoms) fail(ln.number, "duplicate 'atoms' line");
            saw_atoms = true;
            out.atom_labels.assign(ln.tokens.begin() + 1, ln.tokens.end());
        } else if (key == "mu" || key == "nu") {
            bool& flag = key == "mu" ? saw_mu : saw_nu;
            if (flag) fail(ln.number, "duplicate '" + key + "' line");
            flag = true;
            auto& dst = key == "mu" ? out.mu : out.nu;
            for (std::size_t i = 1; i < ln.tokens.size(); ++i)
                dst.push_back(need_ext_rational(ln.tokens[i], ln.number));
        } else {
            fail(ln.number, "unknown key '" + key + "' for kind measure_pair");
        }
    }
    if (!saw_atoms || !saw_mu || !saw_nu)
        throw ParseError("kind measure_pair requires 'atoms', 'mu' and 'nu' lines");
    std::set<std::string> seen(out.atom_labels.begin(), out.atom_labels.end());
    if (seen.size() != out.atom_labels.size())
        throw ParseError("atom labels must be distinct");
    if (out.mu.size() != out.atom_labels.size() || out.nu.size() != out.atom_labels.size())
        throw ParseError("'mu' and 'nu' must list one value per atom");
    return out;
}

std::string serialize_measure_pair(const MeasurePairInput& m) {
    std::ostringstream out;
    out << "malg v1 measure_pair\n";
    out << "atoms";
    for (const auto& l : m.atom_labels) out << ' ' << l;
    out << "\nmu";
    for (const auto& v : m.mu) out << ' ' << v.str();
    out << "\nnu";
    for (const auto& v : m.nu) out << ' ' << v.str();
    out << '\n';
    return out.str();
}

namespace {

CardinalSymbol need_cardinal(const std::string& tok, std::size_t line) {
    if (tok.rfind("aleph", 0) == 0)
        return CardinalSymbol::aleph(need_nat(tok.substr(5), line));
    return CardinalSymbol::finite(need_nat(tok, line));
}

} // namespace

VNMADescription parse_description(const std::string& content) {
    ParsedFile f = parse_as(content, "description");
    std::vector<Summand> summands;
    std::optional<CardinalSymbol> replication;
    for (const auto& ln : f.lines) {
        const auto& key = ln.tokens[0];
        if (key == "atom") {
            if (ln.tokens.size() != 2) fail(ln.number, "'atom' takes one mass");
            Rational gamma = need_rational(ln.tokens[1], ln.number);
            if (gamma <= 0) fail(ln.number, "atom mass must be positive");
            summands.push_back(AtomSummand{gamma});
        } else if (key == "homogeneous") {
            if (ln.tokens.size() != 3)
                fail(ln.number, "'homogeneous' takes a cardinal and a mass");
            CardinalSymbol kappa = need_cardinal(ln.tokens[1], ln.number);
            if (!kappa.is_infinite())
                fail(ln.number, "homogeneous summands need an infinite cardinal");
            Rational gamma = need_rational(ln.tokens[2], ln.number);
            if (gamma <= 0) fail(ln.number, "homogeneous mass must be positive");
            summands.push_back(HomogeneousSummand{kappa, gamma});
        } else if (key == "replicate") {
            if (ln.tokens.size() != 2) fail(ln.number, "'replicate' takes one cardinal");
            if (replication) fail(ln.number, "duplicate 'replicate' line");
            replication = need_cardinal(ln.tokens[1], ln.number);
            if (!replication->is_infinite())
                fail(ln.number, "replication needs an infinite cardinal");
        } else {
            fail(ln.number, "unknown key '" + key + "' for kind description");
        }
    }
    return make_description(std::move(summands), replication);
}

std::string serialize_description(const VNMADescription& d) {
    std::ostringstream out;
    out << "malg v1 description\n";
    for (const auto& s : d.summands) {
        if (const auto* a = std::get_if<AtomSummand>(&s))
            out << "atom " << rat_str(a->gamma) << '\n';
        else {
            const auto& h = std::get<HomogeneousSummand>(s);
            out << "homogeneous " << h.kappa.str() << ' ' << rat_str(h.gamma) << '\n';
        }
    }
    if (d.infinite_replication)
        out << "replicate " << d.infinite_replication->str() << '\n';
    return out.str();
}

CayleyTable parse_group(const std::string& content) {
    ParsedFile f = parse_as(content, "group");
    std::string name;
    std::optional<std::size_t> order;
    std::vector<std::vector<std::size_t>> rows;
    for (const auto& ln : f.lines) {
        const auto& key = ln.tokens[0];
        if (key == "name") {
            if (ln.tokens.size() != 2) fail(ln.number, "'name' takes one token");
            name = ln.tokens[1];
        } else if (key == "order") {
            if (ln.tokens.size() != 2) fail(ln.number, "'order' takes one number");
            if (order) fail(ln.number, "duplicate 'order' line");
            order = static_cast<std::size_t>(need_nat(ln.tokens[1], ln.number));
            if (*order == 0) fail(ln.number, "group order must be positive");
        } else if (key == "row") {
            if (!order) fail(ln.number, "'order' must precede 'row' lines");
            if (ln.tokens.size() != *order + 1)
                fail(ln.number, "'row' needs exactly " + std::to_string(*order) + " entries");
            std::vector<std::size_t> row;
            for (std::size_t i = 1; i < ln.tokens.size(); ++i) {
                auto v = static_cast<std::size_t>(need_nat(ln.tokens[i], ln.number));
                if (v >= *order) fail(ln.number, "row entry out of range");
                row.push_back(v);
            }
            rows.push_back(std::move(row));
        } else {
            fail(ln.number, "unknown key '" + key + "' for kind group");
        }
    }
    if (!order) throw ParseError("kind group requires an 'order' line");
    if (rows.size() != *order)
        throw ParseError("kind group requires exactly " + std::to_string(*order) + " 'row' lines");
    CayleyTable g;
    g.order = *order;
    g.table = std::move(rows);
    g.name = name.empty() ? "G" + std::to_string(*order) : name;
    return g;
}

std::string serialize_group(const CayleyTable& g) {
    std::ostringstream out;
    out << "malg v1 group\n";
    if (!g.name.empty()) out << "name " << g.name << '\n';
    out << "order " << g.order << '\n';
    for (const auto& row : g.table) {
        out << "row";
        for (auto v : row) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

std::vector<Rational> parse_candidate(const std::string& content) {
    ParsedFile f = parse_as(content, "candidate");
    const auto* ln = find_key(f, "values");
    if (!ln) throw ParseError("kind candidate requires a 'values' line");
    if (f.lines.size() != 1) throw ParseError("kind candidate takes only a 'values' line");
    std::vector<Rational> out;
    for (std::size_t i = 1; i < ln->tokens.size(); ++i)
        out.push_back(need_rational(ln->tokens[i], ln->number));
    return out;
}

std::string serialize_candidate(const std::vector<Rational>& v) {
    std::ostringstream out;
    out << "malg v1 candidate\nvalues";
    for (const auto& x : v) out << ' ' << rat_str(x);
    out << '\n';
    return out.str();
}

CylinderInput parse_cylinder_input(const std::string& content) {
    ParsedFile f = parse_as(content, "cylinder");
    CylinderInput out;
    std::optional<std::uint32_t> depth;
    std::optional<std::vector<std::string>> words;
    std::size_t forms = 0;
    for (const auto& ln : f.lines) {
        const auto& key = ln.tokens[0];
        if (key == "expr") {
            if (out.expr) fail(ln.number, "duplicate 'expr' line");
            std::string joined;
            for (std::size_t i = 1; i < ln.tokens.size(); ++i) {
                if (i > 1) joined += ' ';
                joined += ln.tokens[i];
            }
            out.expr = joined;
            ++forms;
        } else if (key == "project") {
            if (ln.tokens.size() != 2) fail(ln.number, "'project' takes one rational");
            if (out.project) fail(ln.number, "duplicate 'project' line");
            out.project = need_rational(ln.tokens[1], ln.number);
            ++forms;
        } else if (key == "depth") {
            if (ln.tokens.size() != 2) fail(ln.number, "'depth' takes one number");
            if (depth) fail(ln.number, "duplicate 'depth' line");
            auto d = need_nat(ln.tokens[1], ln.number);
            if (d > 63) fail(ln.number, "depth too large");
            depth = static_cast<std::uint32_t>(d);
        } else if (key == "words") {
            if (words) fail(ln.number, "duplicate 'words' line");
            words.emplace(ln.tokens.begin() + 1, ln.tokens.end());
        } else {
            fail(ln.number, "unknown key '" + key + "' for kind cylinder");
        }
    }
    if (depth || words) {
        if (!depth || !words)
            throw ParseError("explicit cylinders need both 'depth' and 'words' lines");
        std::set<std::uint64_t> ws;
        for (const auto& w : *words) {
            if (*depth == 0) {
                if (w != "e") throw ParseError("at depth 0 the only word is 'e'");
                ws.insert(0);
                continue;
            }
            if (w.size() != *depth)
                throw ParseError("word '" + w + "' does not have length " + std::to_string(*depth));
            std::uint64_t bits = 0;
            for (char ch : w) {
                if (ch != '0' && ch != '1')
                    throw ParseError("word '" + w + "' must be binary");
                bits = bits << 1 | static_cast<std::uint64_t>(ch == '1');
            }
            ws.insert(bits);
        }
        out.explicit_set = make_cylinder(*depth, std::move(ws));
        ++forms;
    }
    if (forms != 1)
        throw ParseError("kind cylinder needs exactly one of: 'expr', 'project', or 'depth'+'words'");
    return out;
}

std::string serialize_cylinder(const CylinderSet& c) {
    std::ostringstream out;
    out << "malg v1 cylinder\n";
    out << "depth " << c.depth << '\n';
    out << "words";
    if (c.depth == 0) {
        if (!c.words.empty()) out << " e";
    } else {
        for (auto w : c.words) {
            out << ' ';
            for (std::uint32_t b = c.depth; b-- > 0;)
                out << (w >> b & 1 ? '1' : '0');
        }
    }
    out << '\n';
    return out.str();
}

FinCofElement parse_fincof(const std::string& content) {
    ParsedFile f = parse_as(content, "fincof");
    std::optional<bool> cofinite;
    std::set<std::uint64_t> support;
    bool saw_support = false;
    for (const auto& ln : f.lines) {
        const auto& key = ln.tokens[0];
        if (key == "kind") {
            if (ln.tokens.size() != 2) fail(ln.number, "'kind' takes one token");
            if (cofinite) fail(ln.number, "duplicate 'kind' line");
            if (ln.tokens[1] == "finite") cofinite = false;
            else if (ln.tokens[1] == "cofinite") cofinite = true;
            else fail(ln.number, "'kind' must be 'finite' or 'cofinite'");
        } else if (key == "support") {
            if (saw_support) fail(ln.number, "duplicate 'support' line");
            saw_support = true;
            for (std::size_t i = 1; i < ln.tokens.size(); ++i)
                support.insert(need_nat(ln.tokens[i], ln.number));
        } else {
            fail(ln.number, "unknown key '" + key + "' for kind fincof");
        }
    }
    if (!cofinite) throw ParseError("kind fincof requires a 'kind' line");
    return *cofinite ? FinCofElement::cofinite(std::move(support))
                     : FinCofElement::finite(std::move(support));
}

std::string serialize_fincof(const FinCofElement& e) {
    std::ostringstream out;
    out << "malg v1 fincof\n";
    out << "kind " << (e.is_cofinite() ? "cofinite" : "finite") << '\n';
    out << "support";
    for (auto n : e.support()) out << ' ' << n;
    out << '\n';
    return out.str();
}

// --- cylinder expressions ---------------------------------------------------

namespace {

struct ExprParser {
    std::string text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }

    bool eat(char ch) {
        skip_ws();
        if (pos < text.size() && text[pos] == ch) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("cylinder expression, position " + std::to_string(pos) + ": " + what);
    }

    CylinderSet parse_or() {
        CylinderSet v = parse_xor();
        while (eat('|')) v = cylinder_join(v, parse_xor());
        return v;
    }

    CylinderSet parse_xor() {
        CylinderSet v = parse_and();
        while (eat('^')) v = cylinder_symdiff(v, parse_and());
        return v;
    }

    CylinderSet parse_and() {
        CylinderSet v = parse_unary();
        while (eat('&')) v = cylinder_meet(v, parse_unary());
        return v;
    }

    CylinderSet parse_unary() {
        if (eat('~')) return cylinder_complement(parse_unary());
        return parse_atom();
    }

    CylinderSet parse_atom() {
        skip_ws();
        if (eat('(')) {
            CylinderSet v = parse_or();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        std::size_t start = pos;
        while (pos < text.size() && std::isalnum(static_cast<unsigned char>(text[pos]))) ++pos;
        std::string word = text.substr(start, pos - start);
        if (word == "full") return cylinder_full();
        if (word == "empty") return cylinder_empty();
        if (word == "gen") {
            if (!eat('(')) fail("expected '(' after gen");
            skip_ws();
            std::size_t nstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (nstart == pos) fail("expected a coordinate index");
            std::uint64_t k = 0;
            try {
                k = std::stoull(text.substr(nstart, pos - nstart));
            } catch (const std::exception&) {
                fail("coordinate index out of range");
            }
            if (!eat(')')) fail("expected ')'");
            if (k > 62) fail("coordinate index too large");
            return generator(static_cast<std::uint32_t>(k));
        }
        fail("expected gen(k), full, empty, '~' or '('");
    }
};

} // namespace

CylinderSet eval_cylinder_expr(const std::string& expr) {
    ExprParser p{expr};
    CylinderSet v = p.parse_or();
    p.skip_ws();
    if (p.pos != p.text.size()) p.fail("trailing input");
    return v;
}

} // namespace malg
