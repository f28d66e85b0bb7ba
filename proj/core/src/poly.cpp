#include "curvedim/poly.hpp"

#include "curvedim/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace curvedim {

Poly Poly::constant(std::vector<std::string> vars, const Rat& c) {
    Poly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exponents(p.nvars(), 0)] = c;
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, size_t idx, int exp) {
    Poly p(std::move(vars));
    if (idx >= p.nvars()) throw Error("Poly::variable: index out of range");
    Exponents e(p.nvars(), 0);
    e[idx] = exp;
    p.terms_[e] = Rat(1);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rat Poly::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw Error("Poly::constant_value: not constant");
    return terms_.begin()->second;
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (e.size() != nvars()) throw Error("Poly::add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rat Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

int Poly::degree_in(size_t v) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
    return d;
}

bool Poly::is_homogeneous() const {
    std::optional<int> deg;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int k : e) s += k;
        if (!deg) deg = s;
        else if (*deg != s) return false;
    }
    return true;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars_ != o.vars_) throw Error("Poly: variable list mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (vars_ != o.vars_) throw Error("Poly: variable list mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_) throw Error("Poly: variable list mismatch");
    Poly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw Error("Poly::pow: negative exponent");
    Poly r = constant(vars_, Rat(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Poly Poly::partial(size_t v) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exponents d = e;
        d[v] -= 1;
        r.add_term(d, c * Rat(e[v]));
    }
    return r;
}

Poly Poly::translate(size_t v, const Rat& a) const {
    if (a.is_zero()) return *this;
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        // (x+a)^n expanded binomially.
        int n = e[v];
        Rat binom(1);
        Rat apow(1);
        for (int k = n; k >= 0; --k) {
            Exponents d = e;
            d[v] = k;
            r.add_term(d, c * binom * apow);
            if (k > 0) {
                binom *= Rat(k);
                binom /= Rat(n - k + 1);
                apow *= a;
            }
        }
    }
    return r;
}

Poly Poly::substitute(size_t v, const Rat& a) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[v] = 0;
        r.add_term(d, c * a.pow(e[v]));
    }
    return r;
}

Poly Poly::substitute(size_t v, const Poly& g) const {
    if (g.vars_ != vars_) throw Error("Poly::substitute: variable list mismatch");
    std::vector<Poly> c = univariate_in(v);
    Poly r(vars_);
    // Horner in g.
    for (size_t k = c.size(); k-- > 0;) {
        r = r * g;
        r += c[k];
    }
    return r;
}

Poly Poly::drop_var(size_t v) const {
    if (degree_in(v) > 0) throw Error("Poly::drop_var: variable occurs");
    std::vector<std::string> nv;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (i != v) nv.push_back(vars_[i]);
    Poly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents d;
        for (size_t i = 0; i < e.size(); ++i)
            if (i != v) d.push_back(e[i]);
        r.terms_[d] = c;
    }
    return r;
}

Poly Poly::dehomogenize(size_t v) const {
    return substitute(v, Rat(1)).drop_var(v);
}

Poly Poly::with_extra_var(const std::string& name) const {
    std::vector<std::string> nv = vars_;
    nv.push_back(name);
    Poly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d.push_back(0);
        r.terms_[d] = c;
    }
    return r;
}

Poly Poly::reorder_vars(const std::vector<size_t>& perm) const {
    if (perm.size() != vars_.size()) throw Error("Poly::reorder_vars: bad permutation");
    std::vector<std::string> nv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) nv[i] = vars_[perm[i]];
    Poly r(nv);
    for (const auto& [e, c] : terms_) {
        Exponents d(e.size());
        for (size_t i = 0; i < perm.size(); ++i) d[i] = e[perm[i]];
        r.terms_[d] = c;
    }
    return r;
}

std::vector<Poly> Poly::univariate_in(size_t v) const {
    int d = degree_in(v);
    std::vector<Poly> out(static_cast<size_t>(std::max(d, -1) + 1), Poly(vars_));
    for (const auto& [e, c] : terms_) {
        Exponents r = e;
        r[v] = 0;
        out[static_cast<size_t>(e[v])].add_term(r, c);
    }
    return out;
}

Poly Poly::from_univariate(const std::vector<Poly>& coeffs, size_t v) {
    if (coeffs.empty()) throw Error("Poly::from_univariate: empty");
    Poly r(coeffs[0].vars_);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& [e, c] : coeffs[k].terms_) {
            Exponents d = e;
            d[v] += static_cast<int>(k);
            r.add_term(d, c);
        }
    }
    return r;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first, then reverse-lex, for readable output.
    std::vector<const TermMap::value_type*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        int da = 0, db = 0;
        for (int k : a->first) da += k;
        for (int k : b->first) db += k;
        if (da != db) return da > db;
        return a->first > b->first;
    });
    for (auto* t : ts) {
        const Rat& c = t->second;
        bool neg = c.sign() < 0;
        Rat a = c.abs();
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        bool any_var = std::any_of(t->first.begin(), t->first.end(), [](int k) { return k != 0; });
        if (!a.is_one() || !any_var) os << a.to_string();
        bool started = !a.is_one() || !any_var;
        for (size_t i = 0; i < vars_.size(); ++i) {
            int k = t->first[i];
            if (k == 0) continue;
            if (started) os << "*";
            os << vars_[i];
            if (k != 1) os << "^" << k;
            started = true;
        }
    }
    return os.str();
}

// --- parser ---------------------------------------------------------------

namespace {

struct Parser {
    std::string_view s;
    size_t pos = 0;
    const std::vector<std::string>& vars;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError("polynomial parse error at position " + std::to_string(pos) + ": " + what);
    }

    Poly parse_expr() {
        Poly acc = parse_term_signed();
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc += parse_term_signed();
            } else if (c == '-') {
                ++pos;
                acc -= parse_term_signed();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly parse_term_signed() {
        int sign = 1;
        while (true) {
            char c = peek();
            if (c == '-') {
                sign = -sign;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        Poly t = parse_product();
        return sign < 0 ? -t : t;
    }

    Poly parse_product() {
        Poly acc = parse_power();
        while (peek() == '*') {
            ++pos;
            acc = acc * parse_power();
        }
        return acc;
    }

    Poly parse_power() {
        Poly base = parse_atom();
        if (peek() == '^') {
            ++pos;
            skip_ws();
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected exponent");
            int e = std::stoi(std::string(s.substr(start, pos - start)));
            return base.pow(e);
        }
        return base;
    }

    Poly parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            Poly e = parse_expr();
            if (!consume(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == dstart) fail("expected denominator");
            }
            auto r = Rat::parse(s.substr(start, pos - start));
            if (!r) fail("bad rational literal");
            return Poly::constant(vars, *r);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name(s.substr(start, pos - start));
            for (size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) return Poly::variable(vars, i);
            fail("unknown variable '" + name + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

} // namespace

Poly Poly::parse(std::string_view text, std::vector<std::string> vars) {
    Parser p{text, 0, vars};
    Poly r = p.parse_expr();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

// --- exact division --------------------------------------------------------

std::optional<Poly> divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return Poly(f.vars());
    if (f.vars() != g.vars()) throw Error("divide_exact: variable list mismatch");
    // Division by the lex-leading term; for an exact multiple the remainder
    // reaches zero.
    Poly rem = f;
    Poly quot(f.vars());
    const auto& gl = *g.terms().rbegin(); // lex-largest
    while (!rem.is_zero()) {
        const auto& rl = *rem.terms().rbegin();
        Poly::Exponents q(rl.first.size());
        for (size_t i = 0; i < q.size(); ++i) {
            q[i] = rl.first[i] - gl.first[i];
            if (q[i] < 0) return std::nullopt;
        }
        Rat c = rl.second / gl.second;
        Poly mono(f.vars());
        mono.add_term(q, c);
        quot += mono;
        rem -= mono * g;
    }
    return quot;
}

} // namespace curvedim
