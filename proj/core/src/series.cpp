#include "curvedim/series.hpp"

#include "curvedim/errors.hpp"

#include <algorithm>
#include <sstream>

namespace curvedim {

TruncSeries::TruncSeries(int n, std::string param, bool exact)
    : n_(n), param_(std::move(param)), c_(static_cast<size_t>(n) + 1, Rat(0)), exact_(exact) {
    if (n < 0) throw Error("TruncSeries: negative truncation order");
}

TruncSeries TruncSeries::zero(int n, std::string param, bool exact) {
    return TruncSeries(n, std::move(param), exact);
}

TruncSeries TruncSeries::constant(int n, const Rat& c, std::string param, bool exact) {
    TruncSeries s(n, std::move(param), exact);
    s.c_[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(int n, int k, const Rat& c, std::string param, bool exact) {
    TruncSeries s(n, std::move(param), exact);
    if (k < 0) throw Error("TruncSeries::monomial: negative exponent");
    if (k <= n) s.c_[static_cast<size_t>(k)] = c;
    else if (exact) throw Error("TruncSeries::monomial: exponent above order on exact series");
    return s;
}

const Rat& TruncSeries::coeff(int k) const {
    static const Rat zero(0);
    if (k < 0) return zero;
    if (k > n_) {
        if (exact_) return zero;
        throw TruncationInsufficient("TruncSeries::coeff beyond truncation order");
    }
    return c_[static_cast<size_t>(k)];
}

void TruncSeries::set_coeff(int k, const Rat& c) {
    if (k < 0 || k > n_) throw Error("TruncSeries::set_coeff: exponent out of range");
    c_[static_cast<size_t>(k)] = c;
}

std::optional<int> TruncSeries::exact_order() const {
    for (int k = 0; k <= n_; ++k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return std::nullopt;
}

int TruncSeries::poly_degree() const {
    for (int k = n_; k >= 0; --k)
        if (!c_[static_cast<size_t>(k)].is_zero()) return k;
    return -1;
}

TruncSeries TruncSeries::with_order(int n) const {
    if (n == n_) return *this;
    if (n > n_ && !exact_) throw TruncationInsufficient("TruncSeries::with_order: cannot extend inexact series");
    TruncSeries r(n, param_, exact_);
    r.symbolic_ = symbolic_;
    for (int k = 0; k <= std::min(n, n_); ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
    if (n < n_ && exact_ && poly_degree() > n) r.exact_ = false;
    return r;
}

TruncSeries TruncSeries::as_inexact() const {
    TruncSeries r = *this;
    r.exact_ = false;
    return r;
}

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
    if (n_ != o.n_) throw Error("TruncSeries: truncation order mismatch");
    if (param_ != o.param_) throw Error("TruncSeries: parameter mismatch");
    for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    exact_ = exact_ && o.exact_;
    symbolic_ = symbolic_ || o.symbolic_;
    return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
    if (n_ != o.n_) throw Error("TruncSeries: truncation order mismatch");
    if (param_ != o.param_) throw Error("TruncSeries: parameter mismatch");
    for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    exact_ = exact_ && o.exact_;
    symbolic_ = symbolic_ || o.symbolic_;
    return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    if (a.n_ != b.n_) throw Error("TruncSeries: truncation order mismatch");
    if (a.param_ != b.param_) throw Error("TruncSeries: parameter mismatch");
    TruncSeries r(a.n_, a.param_);
    int da = a.poly_degree(), db = b.poly_degree();
    for (int i = 0; i <= std::min(da, a.n_); ++i) {
        if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j <= std::min(db, a.n_ - i); ++j) {
            if (b.c_[static_cast<size_t>(j)].is_zero()) continue;
            r.c_[static_cast<size_t>(i + j)] += a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
        }
    }
    // Product of exact polynomials stays exact when its true degree fits.
    r.exact_ = a.exact_ && b.exact_ && (da < 0 || db < 0 || da + db <= a.n_);
    r.symbolic_ = a.symbolic_ || b.symbolic_;
    return r;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
    TruncSeries r = *this;
    for (auto& k : r.c_) k *= c;
    return r;
}

TruncSeries TruncSeries::pow(int e) const {
    if (e < 0) throw Error("TruncSeries::pow: negative exponent");
    TruncSeries r = constant(n_, Rat(1), param_, true);
    TruncSeries base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

TruncSeries TruncSeries::shifted(int k) const {
    if (k < 0) throw Error("TruncSeries::shifted: negative shift");
    TruncSeries r(n_, param_);
    for (int i = 0; i + k <= n_; ++i) r.c_[static_cast<size_t>(i + k)] = c_[static_cast<size_t>(i)];
    int d = poly_degree();
    r.exact_ = exact_ && (d < 0 || d + k <= n_);
    r.symbolic_ = symbolic_;
    return r;
}

TruncSeries TruncSeries::derivative() const {
    TruncSeries r(n_, param_);
    for (int k = 1; k <= n_; ++k)
        r.c_[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * Rat(k);
    // The order-N coefficient of the derivative is unknown unless exact.
    r.exact_ = exact_;
    r.symbolic_ = symbolic_;
    return r;
}

TruncSeries TruncSeries::inverse() const {
    if (c_[0].is_zero()) throw Error("TruncSeries::inverse: zero constant term");
    TruncSeries r(n_, param_);
    Rat inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (int k = 1; k <= n_; ++k) {
        Rat acc(0);
        for (int j = 1; j <= k; ++j) acc += c_[static_cast<size_t>(j)] * r.c_[static_cast<size_t>(k - j)];
        r.c_[static_cast<size_t>(k)] = -inv0 * acc;
    }
    return r;
}

double TruncSeries::eval_double(double t) const {
    double acc = 0;
    for (int k = n_; k >= 0; --k) acc = acc * t + c_[static_cast<size_t>(k)].to_double();
    return acc;
}

double TruncSeries::derivative_eval_double(double t) const {
    double acc = 0;
    for (int k = n_; k >= 1; --k)
        acc = acc * t + static_cast<double>(k) * c_[static_cast<size_t>(k)].to_double();
    return acc;
}

std::string TruncSeries::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= n_; ++k) {
        const Rat& c = c_[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (k == 0 || !c.is_one()) os << c.to_string();
        if (k > 0) {
            if (!c.is_one()) os << "*";
            os << param_;
            if (k > 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    if (!exact_) os << " + O(" << param_ << "^" << (n_ + 1) << ")";
    return os.str();
}

TruncSeries series_compose(const Poly& f, std::span<const TruncSeries> s, ZeroCompose policy) {
    if (f.nvars() != s.size()) throw Error("series_compose: arity mismatch");
    if (s.empty()) throw Error("series_compose: no series given");
    int n = s[0].truncation_order();
    const std::string& param = s[0].param();
    for (const auto& si : s) {
        if (si.truncation_order() != n) throw Error("series_compose: truncation order mismatch");
        if (si.param() != param) throw Error("series_compose: parameter mismatch");
    }
    std::vector<int> ord(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        auto o = s[i].exact_order();
        ord[i] = o ? *o : n + 1; // n+1 is a valid lower bound for zero-to-N series
    }
    // Memoized powers per variable.
    std::vector<std::vector<TruncSeries>> powers(s.size());
    auto power = [&](size_t v, int e) -> const TruncSeries& {
        auto& ps = powers[v];
        if (ps.empty()) ps.push_back(TruncSeries::constant(n, Rat(1), param, true));
        while (static_cast<int>(ps.size()) <= e) ps.push_back(ps.back() * s[v]);
        return ps[static_cast<size_t>(e)];
    };
    TruncSeries acc = TruncSeries::zero(n, param, true);
    bool skipped_tail_term = false;
    for (const auto& [e, c] : f.terms()) {
        long low = 0;
        bool vanishes = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (s[i].identically_zero()) {
                vanishes = true;
                break;
            }
            low += static_cast<long>(e[i]) * ord[i];
        }
        if (vanishes) continue;
        if (low > n) {
            // Contributes only above the truncation order.
            skipped_tail_term = true;
            continue;
        }
        TruncSeries term = TruncSeries::constant(n, c, param, true);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * power(i, e[i]);
        acc += term;
    }
    if (skipped_tail_term && acc.is_exact()) acc = acc.as_inexact();
    if (policy == ZeroCompose::Error && acc.is_zero_to_n() && !acc.identically_zero())
        throw TruncationInsufficient(
            "series_compose: result vanishes to the truncation order and is not provably zero");
    return acc;
}

} // namespace curvedim
