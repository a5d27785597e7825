#include "skeincore/groups.hpp"

#include <cctype>
#include <sstream>

namespace skeincore {

std::string Word::str() const {
    if (letters.empty()) return "e";
    std::ostringstream os;
    bool first = true;
    for (auto& [g, e] : letters) {
        if (!first) os << "*";
        first = false;
        os << "g" << g;
        if (e == -1) os << "^-1";
    }
    return os.str();
}

Word free_reduce(const Word& w) {
    Word r;
    for (auto& l : w.letters) {
        if (l.second != 1 && l.second != -1)
            throw ValidationError("word letters must carry exponent +-1");
        if (!r.letters.empty() && r.letters.back().first == l.first &&
            r.letters.back().second == -l.second) {
            r.letters.pop_back();
        } else {
            r.letters.push_back(l);
        }
    }
    return r;
}

Word word_concat(const Word& a, const Word& b) {
    Word r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(r);
}

Word word_inverse(const Word& w) {
    Word r;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r.letters.push_back({it->first, -it->second});
    return r;
}

Word parse_word(const std::string& text) {
    Word w;
    size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
    skip();
    if (i >= text.size()) return w;
    if (text[i] == 'e' && (i + 1 >= text.size() || text[i + 1] != 'g')) {
        size_t j = i + 1;
        while (j < text.size() && std::isspace((unsigned char)text[j])) ++j;
        if (j >= text.size()) return w;
    }
    bool expect_letter = true;
    while (i < text.size()) {
        skip();
        if (i >= text.size()) break;
        if (!expect_letter) {
            if (text[i] != '*') throw ParseError("expected '*' between letters", 1, (int)i + 1);
            ++i;
            skip();
        }
        if (i >= text.size() || text[i] != 'g')
            throw ParseError("expected generator letter 'g<k>'", 1, (int)i + 1);
        ++i;
        size_t start = i;
        while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
        if (i == start) throw ParseError("expected generator index", 1, (int)i + 1);
        int g = std::stoi(text.substr(start, i - start));
        if (g < 1) throw ParseError("generator indices are 1-based", 1, (int)start + 1);
        int e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            bool neg = false;
            if (i < text.size() && text[i] == '-') { neg = true; ++i; }
            size_t es = i;
            while (i < text.size() && std::isdigit((unsigned char)text[i])) ++i;
            if (i == es) throw ParseError("expected exponent", 1, (int)i + 1);
            int v = std::stoi(text.substr(es, i - es));
            if (v != 1) throw ParseError("only exponents +-1 are accepted", 1, (int)es + 1);
            e = neg ? -1 : 1;
        }
        w.letters.push_back({g, e});
        expect_letter = false;
    }
    return free_reduce(w);
}

void validate_manifold(const MarkedManifoldSpec& spec) {
    if (spec.n < 2) throw ValidationError("matrix size n must be at least 2");
    if (spec.group.generator_count < 0) throw ValidationError("negative generator count");
    if (spec.markings < 0) throw ValidationError("negative marking count");
    auto check_word = [&](const Word& w) {
        for (auto& [g, e] : w.letters) {
            if (g < 1 || g > spec.group.generator_count)
                throw ValidationError("word uses generator g" + std::to_string(g) +
                                      " outside 1..g" + std::to_string(spec.group.generator_count));
            if (e != 1 && e != -1) throw ValidationError("word letters must carry exponent +-1");
        }
    };
    for (auto& r : spec.group.relators) check_word(r);
    for (auto& c : spec.circles) {
        check_word(c.word);
        if (c.spin != 0 && c.spin != 1) throw ValidationError("circle spin must be 0 or 1");
    }
}

GroupoidPath compose_paths(const GroupoidPath& a, const GroupoidPath& b) {
    if (a.src != b.dst)
        throw ValidationError("paths not composable: first path starts at marking " +
                              std::to_string(a.src) + ", second ends at " + std::to_string(b.dst));
    return {b.src, a.dst, word_concat(a.core, b.core)};
}

GroupoidPath invert_path(const GroupoidPath& p) {
    return {p.dst, p.src, word_inverse(p.core)};
}

PolyMatrix a_matrix(const RingPtr& ring) {
    int n = ring->n;
    PolyMatrix a(ring, n, n);
    for (int i = 1; i <= n; ++i)
        a.at(i, bar(n, i)) = Poly::constant(ring, i % 2 == 1 ? 1 : -1);
    return a;
}

RingPtr manifold_layout(const MarkedManifoldSpec& spec, std::vector<std::string> extra_scalars) {
    std::vector<std::string> blocks;
    for (int g = 1; g <= spec.group.generator_count; ++g)
        blocks.push_back("g" + std::to_string(g));
    for (int t = 1; t <= spec.markings - 1; ++t)
        blocks.push_back("c" + std::to_string(t));
    return make_layout(spec.n, std::move(blocks), std::move(extra_scalars));
}

namespace {

int block_of_generator(const RingPtr& ring, int g) {
    // Generator blocks occupy indices 0..m-1 by construction.
    std::string name = "g" + std::to_string(g);
    for (int b = 0; b < ring->block_count(); ++b)
        if (ring->block_names[b] == name) return b;
    throw ValidationError("ring has no block for generator " + name);
}

int block_of_connector(const RingPtr& ring, int t) {
    std::string name = "c" + std::to_string(t);
    for (int b = 0; b < ring->block_count(); ++b)
        if (ring->block_names[b] == name) return b;
    throw ValidationError("ring has no block for connector " + name);
}

} // namespace

PolyMatrix holonomy(const RingPtr& ring, const MarkedManifoldSpec& spec, const Word& w) {
    Word red = free_reduce(w);
    for (auto& [g, e] : red.letters)
        if (g < 1 || g > spec.group.generator_count)
            throw ValidationError("word uses unknown generator g" + std::to_string(g));
    PolyMatrix m = PolyMatrix::identity(ring, ring->n);
    for (auto& [g, e] : red.letters) {
        PolyMatrix x = PolyMatrix::block(ring, block_of_generator(ring, g));
        m = m * (e == 1 ? x : x.adjugate());
    }
    return m;
}

PolyMatrix morphism_matrix(const RingPtr& ring, const MarkedManifoldSpec& spec,
                           const GroupoidPath& p) {
    if (p.src < 0 || p.src >= spec.markings || p.dst < 0 || p.dst >= spec.markings)
        throw ValidationError("path endpoint marking out of range");
    PolyMatrix m = holonomy(ring, spec, p.core);
    if (p.dst >= 1)
        m = PolyMatrix::block(ring, block_of_connector(ring, p.dst)) * m;
    if (p.src >= 1)
        m = m * PolyMatrix::block(ring, block_of_connector(ring, p.src)).adjugate();
    return m;
}

PolyMatrix morphism_chain(PolyMatrix left, const MarkedManifoldSpec& spec,
                          const GroupoidPath& p) {
    const RingPtr& ring = left.ring();
    if (p.src < 0 || p.src >= spec.markings || p.dst < 0 || p.dst >= spec.markings)
        throw ValidationError("path endpoint marking out of range");
    auto step = [&](const PolyMatrix& factor) {
        left = reduce_by_dets(left * factor);
    };
    if (p.dst >= 1)
        step(PolyMatrix::block(ring, block_of_connector(ring, p.dst)));
    Word red = free_reduce(p.core);
    for (auto& [g, e] : red.letters) {
        if (g < 1 || g > spec.group.generator_count)
            throw ValidationError("word uses unknown generator g" + std::to_string(g));
        PolyMatrix x = PolyMatrix::block(ring, block_of_generator(ring, g));
        step(e == 1 ? x : x.adjugate());
    }
    if (p.src >= 1)
        step(PolyMatrix::block(ring, block_of_connector(ring, p.src)).adjugate());
    return left;
}

} // namespace skeincore
