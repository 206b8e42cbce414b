#include "bireg/io.hpp"

#include <cctype>
#include <optional>
#include <sstream>

#include "bireg/errors.hpp"
#include "bireg/groebner.hpp"

namespace bireg {

namespace {

// Statement text with the (line, column) of every character.
struct Source {
    std::string text;
    std::vector<std::pair<int, int>> pos;
    int line = 1;

    void append(const std::string& s, int ln, int col0) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            text.push_back(s[i]);
            pos.emplace_back(ln, col0 + static_cast<int>(i));
        }
    }
};

class Cursor {
public:
    explicit Cursor(const Source& s) : s_(s) {}

    bool done() { return skip_ws(), i_ >= s_.text.size(); }
    char peek() { return skip_ws(), i_ < s_.text.size() ? s_.text[i_] : '\0'; }
    char peek_raw() const { return i_ < s_.text.size() ? s_.text[i_] : '\0'; }
    char get() { return s_.text[i_++]; }
    std::size_t index() const { return i_; }

    [[noreturn]] void fail(const std::string& msg) const {
        if (s_.pos.empty()) throw ParseError(msg, s_.line, 1);
        if (i_ < s_.pos.size()) throw ParseError(msg, s_.pos[i_].first, s_.pos[i_].second);
        throw ParseError(msg, s_.pos.back().first, s_.pos.back().second + 1);
    }
    std::string where() const {
        if (s_.pos.empty()) return "line " + std::to_string(s_.line);
        const auto& p = i_ < s_.pos.size() ? s_.pos[i_] : s_.pos.back();
        return "line " + std::to_string(p.first) + ", column " + std::to_string(p.second);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++i_;
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    bool accept_word(const std::string& w) {
        skip_ws();
        if (s_.text.compare(i_, w.size(), w) != 0) return false;
        i_ += w.size();
        return true;
    }
    std::string word() {
        skip_ws();
        std::string out;
        while (i_ < s_.text.size() && (std::isalnum(static_cast<unsigned char>(s_.text[i_])) || s_.text[i_] == '_'))
            out.push_back(s_.text[i_++]);
        if (out.empty()) fail("expected a word");
        return out;
    }
    std::string digits() {
        std::string out;
        while (i_ < s_.text.size() && std::isdigit(static_cast<unsigned char>(s_.text[i_]))) out.push_back(s_.text[i_++]);
        return out;
    }
    long long integer() {
        skip_ws();
        bool neg = false;
        if (peek_raw() == '-' || peek_raw() == '+') neg = get() == '-';
        const std::string d = digits();
        if (d.empty()) fail("expected an integer");
        if (d.size() > 12) fail("integer too large");
        const long long v = std::stoll(d);
        return neg ? -v : v;
    }

private:
    void skip_ws() {
        while (i_ < s_.text.size() && std::isspace(static_cast<unsigned char>(s_.text[i_]))) ++i_;
    }
    const Source& s_;
    std::size_t i_ = 0;
};

struct ParsedTerm {
    mpz_class coef = 1;
    std::vector<int> exps;
    int gen = -1;
};

// ngens < 0: generator symbols are not allowed; otherwise every term needs exactly one.
ParsedTerm parse_term(Cursor& c, const Ring& ring, int ngens) {
    ParsedTerm t;
    t.exps.assign(static_cast<std::size_t>(ring.nvars()), 0);
    do {
        const char ch = c.peek();
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            t.coef *= mpz_class(c.digits());
            continue;
        }
        if (ch != 'x' && ch != 'y' && ch != 'e') c.fail("expected a coefficient, variable or generator");
        c.get();
        const std::string d = c.digits();
        if (d.empty() || d.size() > 4) c.fail(std::string("expected an index after '") + ch + "'");
        const int idx = std::stoi(d);
        if (ch == 'e') {
            if (ngens < 0) c.fail("generator symbols are only allowed in module relations");
            if (idx < 1 || idx > ngens) c.fail("generator e" + d + " out of range");
            if (t.gen >= 0) c.fail("a term may contain only one generator symbol");
            t.gen = idx - 1;
            continue;
        }
        if (idx >= (ch == 'x' ? ring.nx() : ring.ny())) c.fail(std::string("variable ") + ch + d + " is not in the ring");
        int e = 1;
        if (c.accept('^')) {
            const long long p = c.integer();
            if (p < 0 || p > 200) c.fail("exponent out of range");
            e = static_cast<int>(p);
        }
        t.exps[static_cast<std::size_t>(ch == 'x' ? idx : ring.nx() + idx)] += e;
    } while (c.accept('*'));
    if (ngens >= 0 && t.gen < 0) c.fail("relation term without a generator symbol e<k>");
    return t;
}

// Sum of terms up to ';' or the end of the statement.
std::vector<ParsedTerm> parse_sum(Cursor& c, const Ring& ring, int ngens) {
    std::vector<ParsedTerm> out;
    bool first = true;
    for (;;) {
        const char ch = c.peek();
        if (ch == ';' || ch == '\0') {
            if (first) c.fail("expected a polynomial");
            return out;
        }
        int sign = 1;
        if (ch == '+' || ch == '-') {
            c.get();
            sign = ch == '-' ? -1 : 1;
        } else if (!first) {
            c.fail("expected '+', '-' or ';'");
        }
        ParsedTerm t = parse_term(c, ring, ngens);
        t.coef *= sign;
        out.push_back(std::move(t));
        first = false;
    }
}

Polynomial to_polynomial(const Ring& ring, const std::vector<ParsedTerm>& terms) {
    std::vector<Polynomial::TermT> pt;
    for (const auto& t : terms)
        pt.emplace_back(Monomial::from_exponents(ring.nx(), t.exps), ring.field().from_mpz(t.coef));
    return Polynomial::from_terms(std::move(pt));
}

Ring parse_ring(Cursor& c) {
    std::optional<Field> field;
    std::optional<int> m, n;
    while (!c.done()) {
        const std::string key = c.word();
        c.expect('=');
        if (key == "field") {
            const std::string v = c.word();
            if (v == "q" || v == "Q") {
                field = Field::rational();
            } else {
                for (char ch : v)
                    if (!std::isdigit(static_cast<unsigned char>(ch))) c.fail("field must be q or a prime");
                if (v.size() > 10) c.fail("field characteristic too large");
                field = Field::prime(static_cast<std::uint32_t>(std::stoull(v)));
            }
        } else if (key == "m") {
            m = static_cast<int>(c.integer());
        } else if (key == "n") {
            n = static_cast<int>(c.integer());
        } else {
            c.fail("unknown ring attribute '" + key + "'");
        }
    }
    if (!m || !n) c.fail("ring needs m= and n=");
    return Ring(*m, *n, field.value_or(Field()));
}

std::vector<Source> split_statements(const std::string& text) {
    std::vector<Source> out;
    std::istringstream is(text);
    std::string line;
    int ln = 0;
    while (std::getline(is, line)) {
        ++ln;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::size_t b = 0;
        while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
        if (b == line.size()) continue;
        const std::string rest = line.substr(b);
        const bool starts = rest.rfind("ring", 0) == 0 || rest.rfind("ideal", 0) == 0 || rest.rfind("module", 0) == 0;
        if (starts || out.empty()) {
            out.emplace_back();
            out.back().line = ln;
        } else {
            out.back().append(" ", ln, static_cast<int>(b));
        }
        out.back().append(rest, ln, static_cast<int>(b) + 1);
    }
    return out;
}

} // namespace

Presentation ideal_presentation(const Ring& ring, const std::vector<Polynomial>& gens) {
    std::vector<Bidegree> degs;
    for (const auto& f : gens) degs.push_back(bidegree_of(f));
    const FreeModule F(degs), R1({{0, 0}});
    std::vector<Vector> cols;
    for (const auto& f : gens) cols.push_back(Vector::single(R1, 0, f));
    std::vector<Vector> syz = kernel(ring, ModuleMap(F, R1, cols));
    std::vector<Vector> rels;
    std::vector<Bidegree> rdeg;
    if (!syz.empty()) {
        for (int idx : minimal_generating_subset(F, syz)) {
            rels.push_back(syz[static_cast<std::size_t>(idx)]);
            rdeg.push_back(rels.back().bidegree(F));
        }
    }
    return Presentation(ring, F, ModuleMap(FreeModule(rdeg), F, std::move(rels)));
}

Polynomial parse_polynomial(const Ring& ring, const std::string& text) {
    Source s;
    s.append(text, 1, 1);
    Cursor c(s);
    auto terms = parse_sum(c, ring, -1);
    if (!c.done()) c.fail("unexpected trailing input");
    return to_polynomial(ring, terms);
}

InputDocument parse_input(const std::string& text) {
    std::optional<Ring> ring;
    std::optional<Presentation> module;
    std::string kind;
    std::vector<Polynomial> gens;
    for (const Source& st : split_statements(text)) {
        Cursor c(st);
        if (c.accept_word("ring")) {
            if (ring) c.fail("duplicate ring declaration");
            ring = parse_ring(c);
            continue;
        }
        const bool is_ideal = c.accept_word("ideal");
        const bool is_module = !is_ideal && c.accept_word("module");
        if (!is_ideal && !is_module) c.fail("expected 'ring', 'ideal:' or 'module:'");
        c.expect(':');
        if (!ring) c.fail("the ring must be declared first");
        if (module) c.fail("only one ideal or module per document");
        if (is_ideal) {
            kind = "ideal";
            while (!c.done()) {
                const std::string at = c.where();
                Polynomial f = to_polynomial(*ring, parse_sum(c, *ring, -1));
                if (f.is_zero()) throw ZeroPolynomial(at + ": zero generator");
                if (!f.is_bihomogeneous()) throw NotBihomogeneous(at + ": generator is not bihomogeneous");
                gens.push_back(std::move(f));
                if (!c.accept(';')) break;
            }
            if (!c.done()) c.fail("unexpected input after ideal generators");
            if (gens.empty()) c.fail("ideal needs at least one generator");
            module = ideal_presentation(*ring, gens);
        } else {
            kind = "module";
            if (!c.accept_word("gens")) c.fail("expected gens=");
            c.expect('=');
            std::vector<Bidegree> g;
            do {
                c.expect('(');
                const int a = static_cast<int>(c.integer());
                c.expect(',');
                const int b = static_cast<int>(c.integer());
                c.expect(')');
                g.push_back({a, b});
            } while (c.accept(','));
            const FreeModule F0(g);
            std::vector<Vector> rels;
            std::vector<Bidegree> rdeg;
            if (c.accept_word("rels")) {
                c.expect(':');
                while (!c.done()) {
                    if (c.accept(';')) continue;
                    const std::string at = c.where();
                    auto terms = parse_sum(c, *ring, F0.rank());
                    std::vector<std::vector<ParsedTerm>> per(static_cast<std::size_t>(F0.rank()));
                    for (auto& t : terms) per[static_cast<std::size_t>(t.gen)].push_back(t);
                    std::vector<Polynomial> entries;
                    for (const auto& p : per) entries.push_back(to_polynomial(*ring, p));
                    Vector v = Vector::from_entries(F0, entries);
                    if (v.is_zero()) continue;
                    if (!v.is_homogeneous(F0)) throw DegreeMismatch(at + ": relation is not homogeneous for the generator degrees");
                    rdeg.push_back(v.bidegree(F0));
                    rels.push_back(std::move(v));
                }
            }
            if (!c.done()) c.fail("unexpected input in module declaration");
            module = Presentation(*ring, F0, ModuleMap(FreeModule(rdeg), F0, std::move(rels)));
        }
    }
    if (!ring) throw ParseError("missing ring declaration", 1, 1);
    if (!module) throw ParseError("missing ideal: or module: declaration", 1, 1);
    return InputDocument{*ring, *module, kind, gens};
}

// ---------------------------------------------------------------- JSON

nlohmann::json ring_json(const Ring& ring) {
    nlohmann::json j;
    if (ring.field().is_prime()) j["field"] = ring.field().modulus();
    else j["field"] = "q";
    j["m"] = ring.m();
    j["n"] = ring.n();
    return j;
}

nlohmann::json betti_json(const BettiTable& b) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [d, row] : b.rows()) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& [e, mult] : row) r.push_back({e.a, e.b, mult});
        j[std::to_string(d)] = r;
    }
    return j;
}

BettiTable betti_from_json(const nlohmann::json& j) {
    BettiTable b;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const int d = std::stoi(it.key());
        for (const auto& e : it.value()) b.add(d, {e.at(0).get<int>(), e.at(1).get<int>()}, e.at(2).get<int>());
    }
    return b;
}

nlohmann::json frontier_json(const Frontier& f) {
    nlohmann::json j = nlohmann::json::array();
    for (Bidegree q : f.minimal_points) j.push_back({q.a, q.b});
    return j;
}

nlohmann::json verdict_json(const RegularityVerdict& v) {
    nlohmann::json j;
    j["value"] = v.value;
    j["decided"] = v.decided;
    j["method"] = to_string(v.method);
    nlohmann::json w = nlohmann::json::array();
    for (const auto& x : v.witnesses) w.push_back({x.i, x.at.a, x.at.b, x.dim});
    j["witnesses"] = w;
    if (!v.diagnostics.empty()) j["diagnostics"] = v.diagnostics;
    return j;
}

nlohmann::json grid_json(const LcGrid& g) {
    nlohmann::json j;
    j["ideal"] = to_string(g.kind);
    j["i"] = g.i;
    j["window"] = {g.window.k0, g.window.k1, g.window.l0, g.window.l1};
    nlohmann::json dims = nlohmann::json::array(), cert = nlohmann::json::array();
    for (const auto& row : g.cells) {
        nlohmann::json r = nlohmann::json::array(), c = nlohmann::json::array();
        for (const auto& cell : row) {
            r.push_back(cell.dim);
            c.push_back(cell.certified);
        }
        dims.push_back(r);
        cert.push_back(c);
    }
    j["dims"] = dims;
    j["certified"] = cert;
    return j;
}

std::string render_frontier(const Frontier& f) {
    if (f.everything) return "every (p,p') (zero module)\n";
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < f.minimal_points.size(); ++i)
        os << (i ? ", " : "") << '(' << f.minimal_points[i].a << ',' << f.minimal_points[i].b << ')';
    os << "]\n";
    return os.str();
}

std::string render_verdict(const RegularityVerdict& v) {
    std::ostringstream os;
    os << (v.decided ? (v.value ? "true" : "false") : "undecided") << "  (" << to_string(v.method) << ")\n";
    for (const auto& w : v.witnesses)
        os << "  witness i=" << w.i << " at (" << w.at.a << ',' << w.at.b << ") dim " << w.dim << '\n';
    for (const auto& d : v.diagnostics) os << "  note: " << d << '\n';
    return os.str();
}

} // namespace bireg
