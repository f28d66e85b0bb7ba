#include "curvedim/roots.hpp"

#include "curvedim/errors.hpp"

#include <algorithm>
#include <map>

namespace curvedim {

UPoly upoly_trim(UPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

int upoly_degree(const UPoly& p) {
    for (size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Rat upoly_eval(const UPoly& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) {
        acc *= x;
        acc += p[i];
    }
    return acc;
}

UPoly upoly_derivative(const UPoly& p) {
    UPoly d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    return upoly_trim(d);
}

UPoly upoly_mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return upoly_trim(r);
}

UPoly upoly_rem(UPoly a, const UPoly& b) {
    int db = upoly_degree(b);
    if (db < 0) throw Error("upoly_rem: division by zero polynomial");
    a = upoly_trim(std::move(a));
    while (upoly_degree(a) >= db) {
        int da = upoly_degree(a);
        Rat q = a[da] / b[db];
        for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
        a = upoly_trim(std::move(a));
    }
    return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
    a = upoly_trim(std::move(a));
    b = upoly_trim(std::move(b));
    while (!b.empty()) {
        UPoly r = upoly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a[upoly_degree(a)];
        for (auto& c : a) c /= lead;
    }
    return a;
}

UPoly upoly_squarefree_part(const UPoly& p) {
    UPoly q = upoly_trim(p);
    if (upoly_degree(q) <= 0) return q;
    UPoly g = upoly_gcd(q, upoly_derivative(q));
    if (upoly_degree(g) <= 0) {
        Rat lead = q[upoly_degree(q)];
        for (auto& c : q) c /= lead;
        return q;
    }
    // q/g via long division (exact).
    UPoly num = q;
    int dg = upoly_degree(g);
    UPoly quot(num.size(), Rat(0));
    while (upoly_degree(num) >= dg) {
        int dn = upoly_degree(num);
        Rat c = num[dn] / g[dg];
        quot[dn - dg] = c;
        for (int i = 0; i <= dg; ++i) num[dn - dg + i] -= c * g[i];
        num = upoly_trim(std::move(num));
    }
    quot = upoly_trim(std::move(quot));
    Rat lead = quot[upoly_degree(quot)];
    for (auto& c : quot) c /= lead;
    return quot;
}

UPoly upoly_deflate(const UPoly& p, const Rat& r) {
    int d = upoly_degree(p);
    if (d < 1) throw Error("upoly_deflate: degree < 1");
    UPoly q(static_cast<size_t>(d), Rat(0));
    Rat carry(0);
    for (int i = d; i >= 1; --i) {
        carry = p[i] + carry * r;
        q[i - 1] = carry;
    }
    Rat rem = p[0] + carry * r;
    if (!rem.is_zero()) throw Error("upoly_deflate: not a root");
    return upoly_trim(q);
}

// --- integer factorization helpers -----------------------------------------

namespace {

mpz_class pollard_rho(const mpz_class& n) {
    // n composite, odd, not a perfect power of a small prime.
    mpz_class x = 2, y = 2, d = 1, c = 1;
    while (true) {
        x = 2;
        y = 2;
        d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            mpz_class diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
        c += 1;
        if (c > 20) return 0; // give up
    }
}

// Factors |n| into primes; returns false if the budget is exceeded.
bool factorize(mpz_class n, std::map<mpz_class, unsigned>& out) {
    n = abs(n);
    if (n == 0) return false;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)]++;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    unsigned long p = 17;
    while (n > 1 && p < 1000000ul && mpz_class(p) * p <= n) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[mpz_class(p)]++;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
        p += 2;
    }
    // Remaining cofactor: prime, or split with rho.
    std::vector<mpz_class> stack;
    if (n > 1) stack.push_back(n);
    int effort = 0;
    while (!stack.empty()) {
        if (++effort > 64) return false;
        mpz_class m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            out[m]++;
            continue;
        }
        // Perfect square / cube first.
        for (unsigned k : {2u, 3u}) {
            mpz_class r;
            if (mpz_root(r.get_mpz_t(), m.get_mpz_t(), k)) {
                for (unsigned i = 0; i < k; ++i) stack.push_back(r);
                m = 1;
                break;
            }
        }
        if (m == 1) continue;
        mpz_class d = pollard_rho(m);
        if (d == 0) return false;
        stack.push_back(d);
        stack.push_back(m / d);
    }
    return true;
}

} // namespace

std::vector<mpz_class> all_divisors(const mpz_class& n, size_t max_divisors) {
    std::map<mpz_class, unsigned> f;
    if (!factorize(n, f)) return {};
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        if (base * (e + 1) > max_divisors) return {};
        mpz_class pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

RationalRoots rational_roots(const UPoly& p_in) {
    RationalRoots out;
    UPoly p = upoly_trim(p_in);
    int d = upoly_degree(p);
    if (d <= 0) {
        out.residual_degree = 0;
        return out;
    }
    // Strip x^k.
    size_t k0 = 0;
    while (k0 < p.size() && p[k0].is_zero()) ++k0;
    if (k0 > 0) {
        out.roots.emplace_back(Rat(0), static_cast<int>(k0));
        p.erase(p.begin(), p.begin() + static_cast<long>(k0));
        d = upoly_degree(p);
    }
    if (d <= 0) {
        out.residual_degree = 0;
        return out;
    }
    // Clear denominators to get integer coefficients.
    mpz_class denlcm = 1;
    for (const auto& c : p) mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> ic(p.size());
    for (size_t i = 0; i < p.size(); ++i)
        ic[i] = Rat(Rat(mpq_class(denlcm)) * p[i]).numerator();
    mpz_class a0 = ic[0], ad = ic[static_cast<size_t>(d)];
    std::vector<mpz_class> dn = all_divisors(a0);
    std::vector<mpz_class> dd = all_divisors(ad);
    if (dn.empty() || dd.empty()) {
        out.complete = false;
        out.residual_degree = d;
        return out;
    }
    std::vector<Rat> candidates;
    for (const auto& num : dn) {
        for (const auto& den : dd) {
            mpq_class q(num, den);
            q.canonicalize();
            candidates.push_back(Rat(q));
            candidates.push_back(Rat(mpq_class(-q)));
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& r : candidates) {
        int mult = 0;
        while (upoly_degree(p) >= 1 && upoly_eval(p, r).is_zero()) {
            p = upoly_deflate(p, r);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
        if (upoly_degree(p) < 1) break;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual_degree = std::max(upoly_degree(p), 0);
    return out;
}

} // namespace curvedim
