#ifndef CURVEDIM_SERIES_HPP
#define CURVEDIM_SERIES_HPP

#include "curvedim/poly.hpp"
#include "curvedim/rat.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace curvedim {

/// Power series in one parameter, truncated at order N: coefficients for
/// exponents 0..N are stored. A series may additionally be marked exact,
/// meaning every coefficient beyond N is known to vanish (the series is the
/// stored polynomial); exact series can be re-truncated to any order.
class TruncSeries {
public:
    explicit TruncSeries(int n, std::string param = "t", bool exact = false);

    static TruncSeries zero(int n, std::string param = "t", bool exact = false);
    static TruncSeries constant(int n, const Rat& c, std::string param = "t", bool exact = true);
    static TruncSeries monomial(int n, int k, const Rat& c, std::string param = "t",
                                bool exact = true);

    int truncation_order() const { return n_; }
    const std::string& param() const { return param_; }
    bool is_exact() const { return exact_; }
    void mark_exact() { exact_ = true; }

    const Rat& coeff(int k) const;
    void set_coeff(int k, const Rat& c);

    /// Smallest exponent with nonzero coefficient; nullopt when the series is
    /// zero through order N ("above N").
    std::optional<int> exact_order() const;
    /// Largest stored exponent with nonzero coefficient; -1 if none.
    int poly_degree() const;
    bool is_zero_to_n() const { return !exact_order().has_value(); }
    bool identically_zero() const { return exact_ && is_zero_to_n(); }

    /// Re-truncate. Shrinking always works; growing requires exactness.
    TruncSeries with_order(int n) const;
    /// Same coefficients with the exact-tail claim dropped.
    TruncSeries as_inexact() const;

    TruncSeries operator-() const;
    TruncSeries& operator+=(const TruncSeries& o);
    TruncSeries& operator-=(const TruncSeries& o);
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { a += b; return a; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { a -= b; return a; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const Rat& c) const;
    TruncSeries pow(int e) const;
    /// Multiply by t^k (k >= 0).
    TruncSeries shifted(int k) const;
    TruncSeries derivative() const;
    /// Multiplicative inverse; requires a nonzero constant term.
    TruncSeries inverse() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    double eval_double(double t) const;
    double derivative_eval_double(double t) const;
    bool has_symbolic_marker() const { return symbolic_; }
    void mark_symbolic() { symbolic_ = true; }

    std::string to_string() const;

private:
    int n_;
    std::string param_;
    std::vector<Rat> c_;
    bool exact_ = false;
    bool symbolic_ = false; // coefficients are placeholders, orders only
};

enum class ZeroCompose {
    Error, // throw TruncationInsufficient when the result vanishes to order N
    Allow, // return the zero-to-N series
};

/// Evaluate f at a tuple of series (one per variable of f), truncated at the
/// common order N. All series must share parameter and truncation order, and
/// must have positive order (vanish at 0) so the truncated result is exact
/// through order N.
TruncSeries series_compose(const Poly& f, std::span<const TruncSeries> s,
                           ZeroCompose policy = ZeroCompose::Error);

} // namespace curvedim

#endif
