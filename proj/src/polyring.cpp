#include "skeincore/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skeincore {

int RingLayout::var(int block, int row, int col) const {
    if (block < 0 || block >= block_count() || row < 1 || row > n || col < 1 || col > n)
        throw ValidationError("variable index out of range");
    return block * n * n + (row - 1) * n + (col - 1);
}

std::string RingLayout::var_name(int v) const {
    int b, r, c;
    decode(v, b, r, c);
    if (b < 0) return scalar_names[v - block_count() * n * n];
    return block_names[b] + "[" + std::to_string(r) + "][" + std::to_string(c) + "]";
}

void RingLayout::decode(int v, int& block, int& row, int& col) const {
    if (v < 0 || v >= var_count()) throw ValidationError("variable index out of range");
    if (v >= block_count() * n * n) {
        block = -1;
        row = col = 0;
        return;
    }
    block = v / (n * n);
    int rem = v % (n * n);
    row = rem / n + 1;
    col = rem % n + 1;
}

RingPtr make_layout(int n, std::vector<std::string> blocks, std::vector<std::string> scalars) {
    auto l = std::make_shared<RingLayout>();
    l->n = n;
    l->block_names = std::move(blocks);
    l->scalar_names = std::move(scalars);
    return l;
}

int Monomial::degree() const {
    int d = 0;
    for (auto& [v, e] : factors) d += e;
    return d;
}

int Monomial::exponent(int v) const {
    for (auto& [w, e] : factors)
        if (w == v) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first)) {
            r.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            r.factors.push_back(o.factors[j++]);
        } else {
            r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    size_t j = 0;
    for (auto& [v, e] : factors) {
        while (j < o.factors.size() && o.factors[j].first < v) ++j;
        if (j == o.factors.size() || o.factors[j].first != v || o.factors[j].second < e) return false;
    }
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    Monomial r;
    size_t j = 0;
    for (auto& [v, e] : o.factors) {
        int sub = 0;
        while (j < factors.size() && factors[j].first < v) ++j;
        if (j < factors.size() && factors[j].first == v) sub = factors[j].second;
        if (e - sub > 0) r.factors.push_back({v, e - sub});
    }
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() || (i < a.factors.size() && a.factors[i].first < b.factors[j].first)) {
            r.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() || b.factors[j].first < a.factors[i].first) {
            r.factors.push_back(b.factors[j++]);
        } else {
            r.factors.push_back({a.factors[i].first, std::max(a.factors[i].second, b.factors[j].second)});
            ++i, ++j;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    size_t i = 0, j = 0;
    while (i < factors.size() && j < o.factors.size()) {
        if (factors[i].first == o.factors[j].first) return false;
        if (factors[i].first < o.factors[j].first) ++i;
        else ++j;
    }
    return true;
}

int grevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: compare from the largest variable downward; the monomial
    // with the larger exponent at the first difference is the smaller one.
    auto ia = a.factors.rbegin(), ib = b.factors.rbegin();
    while (ia != a.factors.rend() && ib != b.factors.rend()) {
        if (ia->first != ib->first) {
            // The monomial owning the larger variable is smaller.
            return ia->first > ib->first ? -1 : 1;
        }
        if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
        ++ia, ++ib;
    }
    if (ia == a.factors.rend() && ib == b.factors.rend()) return 0;
    // Should be unreachable for equal degrees, kept for safety.
    return ia == a.factors.rend() ? 1 : -1;
}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(std::move(ring));
    if (c != 0) p.terms_[Monomial{}] = c;
    return p;
}

Poly Poly::variable(RingPtr ring, int v) {
    Poly p(std::move(ring));
    Monomial m;
    m.factors.push_back({v, 1});
    p.terms_[m] = 1;
    return p;
}

Poly Poly::entry(RingPtr ring, int block, int row, int col) {
    int v = ring->var(block, row, col);
    return variable(std::move(ring), v);
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw ValidationError("leading term of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coeff() const {
    if (terms_.empty()) throw ValidationError("leading term of zero polynomial");
    return terms_.begin()->second;
}

void Poly::check_ring(const Poly& o) const {
    if (ring_ && o.ring_ && ring_ != o.ring_ && !(*ring_ == *o.ring_))
        throw ValidationError("polynomials over different rings");
}

void Poly::enforce_cap() const {
    if (terms_.size() > term_cap)
        throw BudgetError("polynomial term cap exceeded (" + std::to_string(terms_.size()) +
                          " > " + std::to_string(term_cap) + ")");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (auto& [m, c] : o.terms_) add_term(m, c);
    enforce_cap();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    enforce_cap();
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::scaled(const Rational& c) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_[m] = k * c;
    return r;
}

Poly Poly::times_term(const Rational& c, const Monomial& m) const {
    Poly r(ring_);
    if (c == 0) return r;
    for (auto& [mm, k] : terms_) r.terms_[mm * m] = k * c;
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_ ? ring_ : o.ring_);
    for (auto& [m1, c1] : terms_)
        for (auto& [m2, c2] : o.terms_)
            r.add_term(m1 * m2, c1 * c2);
    r.enforce_cap();
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : terms_) {
        Rational coeff = c;
        if (first) {
            if (coeff < 0) { os << "-"; coeff = -coeff; }
        } else {
            os << (coeff < 0 ? " - " : " + ");
            if (coeff < 0) coeff = -coeff;
        }
        first = false;
        bool coeff_written = false;
        if (coeff != 1 || m.is_one()) {
            os << coeff.str();
            coeff_written = true;
        }
        for (auto& [v, e] : m.factors) {
            if (coeff_written || v != m.factors.front().first) os << "*";
            os << ring_->var_name(v);
            if (e > 1) os << "^" << e;
            coeff_written = true;
        }
    }
    return os.str();
}

Poly Poly::substitute(RingPtr target, const std::vector<Poly>& images) const {
    if ((int)images.size() != ring_->var_count())
        throw ValidationError("substitution image count mismatch");
    Poly result(target);
    for (auto& [m, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (auto& [v, e] : m.factors)
            for (int i = 0; i < e; ++i) term = term * images[v];
        result += term;
    }
    return result;
}

// ---- canonical text parser ----

namespace {

struct TextCursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, 1, (int)i + 1);
    }
};

Integer parse_integer(TextCursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) ++c.i;
    if (c.i == start) c.fail("expected integer");
    return Integer(c.s.substr(start, c.i - start));
}

std::string parse_identifier(TextCursor& c) {
    c.skip_ws();
    size_t start = c.i;
    while (c.i < c.s.size() && (std::isalnum((unsigned char)c.s[c.i]) || c.s[c.i] == '_')) ++c.i;
    if (c.i == start) c.fail("expected identifier");
    return c.s.substr(start, c.i - start);
}

} // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    TextCursor c{text};
    Poly result(ring);
    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            ++c.i;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        Rational coeff = sign;
        Monomial mono;
        bool saw_factor = false;
        bool expect_factor = true;
        while (expect_factor) {
            c.skip_ws();
            if (c.i < c.s.size() && std::isdigit((unsigned char)c.s[c.i])) {
                Integer num = parse_integer(c);
                Integer den = 1;
                if (c.peek() == '/') {
                    ++c.i;
                    den = parse_integer(c);
                    if (den == 0) c.fail("zero denominator");
                }
                coeff *= Rational(num, den);
            } else if (c.i < c.s.size() && (std::isalpha((unsigned char)c.s[c.i]) || c.s[c.i] == '_')) {
                std::string name = parse_identifier(c);
                int v = -1;
                if (c.peek() == '[') {
                    ++c.i;
                    int row = (int)parse_integer(c);
                    if (c.peek() != ']') c.fail("expected ']'");
                    ++c.i;
                    if (c.peek() != '[') c.fail("expected '['");
                    ++c.i;
                    int col = (int)parse_integer(c);
                    if (c.peek() != ']') c.fail("expected ']'");
                    ++c.i;
                    auto it = std::find(ring->block_names.begin(), ring->block_names.end(), name);
                    if (it == ring->block_names.end()) c.fail("unknown block '" + name + "'");
                    v = ring->var((int)(it - ring->block_names.begin()), row, col);
                } else {
                    auto it = std::find(ring->scalar_names.begin(), ring->scalar_names.end(), name);
                    if (it == ring->scalar_names.end()) c.fail("unknown variable '" + name + "'");
                    v = ring->scalar_var((int)(it - ring->scalar_names.begin()));
                }
                int exp = 1;
                if (c.peek() == '^') {
                    ++c.i;
                    exp = (int)parse_integer(c);
                    if (exp <= 0) c.fail("exponent must be positive");
                }
                Monomial f;
                f.factors.push_back({v, exp});
                mono = mono * f;
            } else {
                if (!saw_factor) c.fail("expected term");
                break;
            }
            saw_factor = true;
            expect_factor = c.peek() == '*';
            if (expect_factor) ++c.i;
        }
        result.add_term(mono, coeff);
    }
    return result;
}

// ---- matrices ----

PolyMatrix::PolyMatrix(RingPtr ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      data_(rows * cols, Poly(ring_)) {}

PolyMatrix PolyMatrix::identity(RingPtr ring, int n) {
    PolyMatrix m(ring, n, n);
    for (int i = 1; i <= n; ++i) m.at(i, i) = Poly::constant(ring, 1);
    return m;
}

PolyMatrix PolyMatrix::block(RingPtr ring, int block_index) {
    int n = ring->n;
    PolyMatrix m(ring, n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.at(i, j) = Poly::entry(ring, block_index, i, j);
    return m;
}

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) throw ValidationError("matrix dimension mismatch");
    PolyMatrix r(ring_, rows_, o.cols_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= o.cols_; ++j) {
            Poly acc(ring_);
            for (int k = 1; k <= cols_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
    PolyMatrix r = *this;
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) r.at(i, j) += o.at(i, j);
    return r;
}

PolyMatrix PolyMatrix::operator-(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix dimension mismatch");
    PolyMatrix r = *this;
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) r.at(i, j) -= o.at(i, j);
    return r;
}

PolyMatrix PolyMatrix::scaled(const Rational& c) const {
    PolyMatrix r = *this;
    for (auto& p : r.data_) p = p.scaled(c);
    return r;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Poly PolyMatrix::trace() const {
    if (rows_ != cols_) throw ValidationError("trace of non-square matrix");
    Poly t(ring_);
    for (int i = 1; i <= rows_; ++i) t += at(i, i);
    return t;
}

Poly PolyMatrix::det() const {
    if (rows_ != cols_) throw ValidationError("determinant of non-square matrix");
    Poly d(ring_);
    for (const Perm& p : all_permutations(rows_)) {
        Poly term = Poly::constant(ring_, inversion_length(p) % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= rows_; ++i) term = term * at(i, p[i - 1]);
        d += term;
    }
    return d;
}

PolyMatrix PolyMatrix::adjugate() const {
    if (rows_ != cols_) throw ValidationError("adjugate of non-square matrix");
    int n = rows_;
    PolyMatrix adj(ring_, n, n);
    if (n == 1) {
        adj.at(1, 1) = Poly::constant(ring_, 1);
        return adj;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            PolyMatrix minor(ring_, n - 1, n - 1);
            for (int r = 1, rr = 1; r <= n; ++r) {
                if (r == j) continue;
                for (int c = 1, cc = 1; c <= n; ++c) {
                    if (c == i) continue;
                    minor.at(rr, cc) = at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Poly cof = minor.det();
            adj.at(i, j) = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

std::vector<Poly> det_relations(const RingPtr& ring) {
    std::vector<Poly> rels;
    for (int b = 0; b < ring->block_count(); ++b)
        rels.push_back(PolyMatrix::block(ring, b).det() - Poly::constant(ring, 1));
    return rels;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& divisors) {
    Poly rem(p.ring());
    Poly work = p;
    while (!work.is_zero()) {
        bool reduced = false;
        for (const Poly& d : divisors) {
            if (d.is_zero()) continue;
            if (d.leading_monomial().divides(work.leading_monomial())) {
                Rational c = work.leading_coeff() / d.leading_coeff();
                Monomial q = d.leading_monomial().divide_into(work.leading_monomial());
                work -= d.times_term(c, q);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(work.leading_monomial(), work.leading_coeff());
            Poly lt(work.ring());
            lt.add_term(work.leading_monomial(), work.leading_coeff());
            work -= lt;
        }
    }
    return rem;
}

Poly reduce_by_dets(const Poly& p) {
    // The det generators have pairwise coprime leading monomials (each lives
    // in a single matrix block), so Buchberger's first criterion makes them a
    // Groebner basis as given and plain division computes the normal form.
    return normal_form(p, det_relations(p.ring()));
}

PolyMatrix reduce_by_dets(const PolyMatrix& m) {
    PolyMatrix r = m;
    auto dets = det_relations(m.ring());
    for (int i = 1; i <= m.rows(); ++i)
        for (int j = 1; j <= m.cols(); ++j)
            r.at(i, j) = normal_form(m.at(i, j), dets);
    return r;
}

} // namespace skeincore
