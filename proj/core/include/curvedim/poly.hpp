#ifndef CURVEDIM_POLY_HPP
#define CURVEDIM_POLY_HPP

#include "curvedim/rat.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvedim {

/// Multivariate polynomial over Q with a fixed ordered list of variable
/// names. Terms map exponent vectors (one entry per variable) to nonzero
/// coefficients; zero coefficients are never stored.
class Poly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly constant(std::vector<std::string> vars, const Rat& c);
    static Poly variable(std::vector<std::string> vars, size_t idx, int exp = 1);

    /// Parse a polynomial expression: rational literals, the named variables,
    /// +, -, *, ^ and parentheses. Implicit multiplication is not accepted.
    static Poly parse(std::string_view text, std::vector<std::string> vars);

    const std::vector<std::string>& vars() const { return vars_; }
    size_t nvars() const { return vars_.size(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const; // 0 for the zero polynomial

    void add_term(const Exponents& e, const Rat& c);
    Rat coeff(const Exponents& e) const;

    int total_degree() const;      // -1 for zero
    int degree_in(size_t v) const; // -1 for zero
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly scaled(const Rat& c) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Poly partial(size_t v) const;

    /// Substitute variable v := v + a (translation).
    Poly translate(size_t v, const Rat& a) const;
    /// Substitute a rational value for variable v; the variable stays in the
    /// variable list with exponent 0.
    Poly substitute(size_t v, const Rat& a) const;
    /// Substitute a polynomial (over the same variable list) for variable v.
    Poly substitute(size_t v, const Poly& g) const;

    /// Drop variable v (which must not occur) from the variable list.
    Poly drop_var(size_t v) const;
    /// Set variable v := 1 and drop it.
    Poly dehomogenize(size_t v) const;
    /// Add a variable at the end of the list.
    Poly with_extra_var(const std::string& name) const;
    /// Reorder variables; perm[i] = index in the old list of new variable i.
    Poly reorder_vars(const std::vector<size_t>& perm) const;

    /// View as univariate in v: coefficients[k] is the Poly (in the same
    /// variable list, with v-exponent 0) multiplying v^k.
    std::vector<Poly> univariate_in(size_t v) const;
    /// Inverse of univariate_in.
    static Poly from_univariate(const std::vector<Poly>& coeffs, size_t v);

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Exact division: returns f/g when g divides f, std::nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

} // namespace curvedim

#endif
