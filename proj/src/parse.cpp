#include "skeincore/parse.hpp"

#include <cctype>
#include <sstream>

namespace skeincore {

namespace {

// Character stream with 1-based line/column tracking.
struct Stream {
    const std::string& s;
    size_t i = 0;
    int line = 1, col = 1;

    bool eof() const { return i >= s.size(); }
    char peek() const { return eof() ? '\0' : s[i]; }
    char next() {
        char c = s[i++];
        if (c == '\n') { ++line; col = 1; }
        else ++col;
        return c;
    }
    void skip_ws() {
        while (!eof() && std::isspace((unsigned char)peek())) next();
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        next();
    }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) { next(); return true; }
        return false;
    }
    std::string identifier() {
        skip_ws();
        if (!std::isalpha((unsigned char)peek()) && peek() != '_') fail("expected identifier");
        std::string out;
        while (!eof() && (std::isalnum((unsigned char)peek()) || peek() == '_')) out += next();
        return out;
    }
    long integer() {
        skip_ws();
        bool neg = accept('-');
        if (!std::isdigit((unsigned char)peek())) fail("expected integer");
        long v = 0;
        while (!eof() && std::isdigit((unsigned char)peek())) v = v * 10 + (next() - '0');
        return neg ? -v : v;
    }
    std::string quoted() {
        skip_ws();
        if (peek() != '"') fail("expected '\"'");
        next();
        std::string out;
        while (!eof() && peek() != '"') out += next();
        if (eof()) fail("unterminated string");
        next();
        return out;
    }
};

Word parse_word_at(Stream& st, const std::string& text) {
    try {
        return parse_word(text);
    } catch (const ParseError& e) {
        throw ParseError(std::string("bad word: ") + e.what(), st.line, st.col);
    }
}

} // namespace

MarkedManifoldSpec parse_manifold(const std::string& text) {
    Stream st{text};
    MarkedManifoldSpec spec;
    spec.markings = 0;
    bool saw_n = false, saw_gens = false;
    st.expect('{');
    if (!st.accept('}')) {
        do {
            std::string key = st.identifier();
            st.expect(':');
            if (key == "n") {
                spec.n = (int)st.integer();
                saw_n = true;
            } else if (key == "generators") {
                spec.group.generator_count = (int)st.integer();
                saw_gens = true;
            } else if (key == "markings") {
                spec.markings = (int)st.integer();
            } else if (key == "relators") {
                st.expect('[');
                if (!st.accept(']')) {
                    do {
                        spec.group.relators.push_back(parse_word_at(st, st.quoted()));
                    } while (st.accept(','));
                    st.expect(']');
                }
            } else if (key == "circles") {
                st.expect('[');
                if (!st.accept(']')) {
                    do {
                        st.expect('{');
                        Circle c;
                        bool saw_w = false;
                        do {
                            std::string ck = st.identifier();
                            st.expect(':');
                            if (ck == "w") {
                                c.word = parse_word_at(st, st.quoted());
                                saw_w = true;
                            } else if (ck == "h") {
                                c.spin = (int)st.integer();
                            } else {
                                st.fail("unknown circle key '" + ck + "'");
                            }
                        } while (st.accept(','));
                        st.expect('}');
                        if (!saw_w) st.fail("circle needs a 'w' key");
                        spec.circles.push_back(c);
                    } while (st.accept(','));
                    st.expect(']');
                }
            } else {
                st.fail("unknown key '" + key + "'");
            }
        } while (st.accept(','));
        st.expect('}');
    }
    st.skip_ws();
    if (!st.eof()) st.fail("trailing input after manifold document");
    if (!saw_n) throw ParseError("missing key 'n'", 1, 1);
    if (!saw_gens) throw ParseError("missing key 'generators'", 1, 1);
    try {
        validate_manifold(spec);
    } catch (const ValidationError&) {
        throw;
    }
    return spec;
}

namespace {

// Reads the clause value up to the next top-level ';' or the closing ')'.
std::string clause_value(Stream& st) {
    std::string out;
    int depth = 0;
    while (!st.eof()) {
        char c = st.peek();
        if (depth == 0 && (c == ';' || c == ')')) break;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        out += st.next();
    }
    while (!out.empty() && std::isspace((unsigned char)out.back())) out.pop_back();
    return out;
}

StatedArc parse_arc(Stream& st) {
    StatedArc arc;
    st.expect('(');
    bool saw_endpoints = false, saw_states = false;
    do {
        st.skip_ws();
        if (st.peek() == 'e') {
            // endpoint clause: e<src>->e<dst>
            st.expect('e');
            arc.path.src = (int)st.integer();
            st.expect('-');
            st.expect('>');
            st.expect('e');
            arc.path.dst = (int)st.integer();
            saw_endpoints = true;
        } else {
            std::string key = st.identifier();
            st.expect('=');
            if (key == "w") {
                arc.path.core = parse_word_at(st, clause_value(st));
            } else if (key == "s") {
                st.expect('(');
                arc.state_end = (int)st.integer();
                st.expect(',');
                arc.state_start = (int)st.integer();
                st.expect(')');
                saw_states = true;
            } else if (key == "h") {
                arc.spin = (int)st.integer();
            } else {
                st.fail("unknown arc clause '" + key + "'");
            }
        }
    } while (st.accept(';'));
    st.expect(')');
    if (!saw_endpoints) st.fail("arc needs endpoints 'e<src>->e<dst>'");
    if (!saw_states) st.fail("arc needs states 's=(i,j)'");
    return arc;
}

FramedKnot parse_knot(Stream& st) {
    FramedKnot knot;
    st.expect('(');
    do {
        std::string key = st.identifier();
        st.expect('=');
        if (key == "w") {
            knot.word = parse_word_at(st, clause_value(st));
        } else if (key == "h") {
            knot.spin = (int)st.integer();
        } else {
            st.fail("unknown knot clause '" + key + "'");
        }
    } while (st.accept(';'));
    st.expect(')');
    return knot;
}

WebVertex parse_vertex(Stream& st, bool sink) {
    WebVertex v;
    v.sink = sink;
    st.expect('(');
    do {
        st.expect('(');
        VertexEdge e;
        std::string key = st.identifier();
        if (key != "w") st.fail("vertex edge must start with 'w='");
        st.expect('=');
        // Word runs until the '->' separator.
        std::string word_text;
        while (!st.eof()) {
            st.skip_ws();
            // the '->' separator ends the word; a '-' inside '^-1' does not
            if (st.peek() == '-' && st.i + 1 < st.s.size() && st.s[st.i + 1] == '>') break;
            word_text += st.next();
        }
        e.word = parse_word_at(st, word_text);
        st.expect('-');
        st.expect('>');
        st.skip_ws();
        if (st.peek() == 'e') {
            st.next();
            e.target = VertexEdge::Target::Marking;
            e.marking = (int)st.integer();
            st.expect(':');
            e.state = (int)st.integer();
        } else if (st.peek() == 'v') {
            st.next();
            e.target = VertexEdge::Target::Vertex;
            e.peer = (int)st.integer();
        } else {
            st.fail("edge target must be 'e<idx>:<state>' or 'v<id>'");
        }
        st.expect(')');
        v.edges.push_back(e);
    } while (st.accept(','));
    st.expect(')');
    return v;
}

} // namespace

Web parse_web(const std::string& text) {
    Stream st{text};
    Web web;
    while (true) {
        st.skip_ws();
        if (st.eof()) break;
        st.accept(',');
        st.skip_ws();
        if (st.eof()) break;
        std::string kind = st.identifier();
        if (kind == "arc") {
            web.arcs.push_back(parse_arc(st));
        } else if (kind == "knot") {
            web.knots.push_back(parse_knot(st));
        } else if (kind == "sink" || kind == "source") {
            web.vertices.push_back(parse_vertex(st, kind == "sink"));
        } else {
            st.fail("unknown component '" + kind + "' (expected arc, knot, sink, source)");
        }
    }
    return web;
}

std::string web_str(const Web& web) {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << " ";
        first = false;
    };
    for (const StatedArc& a : web.arcs) {
        sep();
        os << "arc(e" << a.path.src << "->e" << a.path.dst << "; w="
           << (a.path.core.empty() ? "" : a.path.core.str()) << "; s=(" << a.state_end << ","
           << a.state_start << "); h=" << a.spin << ")";
    }
    for (const FramedKnot& k : web.knots) {
        sep();
        os << "knot(w=" << (k.word.empty() ? "" : k.word.str()) << "; h=" << k.spin << ")";
    }
    for (const WebVertex& v : web.vertices) {
        sep();
        os << (v.sink ? "sink(" : "source(");
        for (size_t t = 0; t < v.edges.size(); ++t) {
            if (t) os << ",";
            const VertexEdge& e = v.edges[t];
            os << "(w=" << (e.word.empty() ? "" : e.word.str()) << " -> ";
            if (e.target == VertexEdge::Target::Marking)
                os << "e" << e.marking << ":" << e.state;
            else
                os << "v" << e.peer;
            os << ")";
        }
        os << ")";
    }
    return os.str();
}

std::string manifold_str(const MarkedManifoldSpec& spec) {
    std::ostringstream os;
    os << "{n:" << spec.n << ", generators:" << spec.group.generator_count
       << ", markings:" << spec.markings;
    if (!spec.group.relators.empty()) {
        os << ", relators:[";
        for (size_t i = 0; i < spec.group.relators.size(); ++i) {
            if (i) os << ", ";
            os << '"' << spec.group.relators[i].str() << '"';
        }
        os << "]";
    }
    if (!spec.circles.empty()) {
        os << ", circles:[";
        for (size_t i = 0; i < spec.circles.size(); ++i) {
            if (i) os << ", ";
            os << "{w:\"" << spec.circles[i].word.str() << "\", h:" << spec.circles[i].spin << "}";
        }
        os << "]";
    }
    os << "}";
    return os.str();
}

} // namespace skeincore
