#include "curvedim/resultant.hpp"

#include "curvedim/errors.hpp"

namespace curvedim {

Poly poly_det(std::vector<Poly> m, size_t n, const std::vector<std::string>& vars) {
    if (n == 0) return Poly::constant(vars, Rat(1));
    auto at = [&](size_t i, size_t j) -> Poly& { return m[i * n + j]; };
    Poly prev_pivot = Poly::constant(vars, Rat(1));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (at(k, k).is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && at(swap_row, k).is_zero()) ++swap_row;
            if (swap_row == n) return Poly(vars); // singular
            for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(swap_row, j));
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Poly num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
                auto q = divide_exact(num, prev_pivot);
                if (!q) throw Error("poly_det: Bareiss division failed");
                at(i, j) = std::move(*q);
            }
            at(i, k) = Poly(vars);
        }
        prev_pivot = at(k, k);
    }
    Poly det = at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

Poly resultant(const Poly& f, const Poly& g, size_t var) {
    if (f.vars() != g.vars()) throw Error("resultant: variable list mismatch");
    const auto& vars = f.vars();
    if (f.is_zero() || g.is_zero()) return Poly(vars);
    int df = f.degree_in(var);
    int dg = g.degree_in(var);
    if (df == 0 && dg == 0) return Poly::constant(vars, Rat(1));
    std::vector<Poly> fc = f.univariate_in(var);
    std::vector<Poly> gc = g.univariate_in(var);
    if (df == 0) {
        // Res(c, g) = c^{deg g}
        return fc[0].pow(dg);
    }
    if (dg == 0) {
        return gc[0].pow(df);
    }
    size_t n = static_cast<size_t>(df + dg);
    std::vector<Poly> m(n * n, Poly(vars));
    // dg rows of f's coefficients, then df rows of g's, highest degree first.
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[static_cast<size_t>(r) * n + static_cast<size_t>(r + k)] = fc[static_cast<size_t>(df - k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<size_t>(dg + r) * n + static_cast<size_t>(r + k)] = gc[static_cast<size_t>(dg - k)];
    return poly_det(std::move(m), n, vars);
}

bool is_square_free(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.is_constant()) return true;
    for (size_t v = 0; v < f.nvars(); ++v) {
        if (f.degree_in(v) <= 0) continue;
        Poly r = resultant(f, f.partial(v), v);
        if (r.is_zero()) return false;
    }
    return true;
}

} // namespace curvedim
