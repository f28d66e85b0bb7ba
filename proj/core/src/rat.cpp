#include "curvedim/rat.hpp"

#include "curvedim/errors.hpp"

#include <cctype>

namespace curvedim {

Rat::Rat(long num, long den) : v_(num, den) {
    if (den == 0) throw Error("Rat: zero denominator");
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    v_.canonicalize();
}

std::optional<Rat> Rat::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    // mpq accepts "a/b" and plain integers; reject anything else (whitespace,
    // floats, empty numerator) up front.
    size_t slash = s.find('/');
    auto is_int = [](std::string_view t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!is_int(s)) return std::nullopt;
    } else {
        std::string_view num(s.data(), slash);
        std::string_view den(s.data() + slash + 1, s.size() - slash - 1);
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        if (mpz_class(std::string(den)) == 0) return std::nullopt;
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) return std::nullopt;
    q.canonicalize();
    return Rat(q);
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw Error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::inverse() const {
    if (is_zero()) throw Error("Rat: inverse of zero");
    return Rat(mpq_class(1) / v_);
}

Rat Rat::pow(long e) const {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    mpq_class q(num, den);
    q.canonicalize();
    Rat r(q);
    return inv ? r.inverse() : r;
}

std::optional<Rat> Rat::nth_root(unsigned long n) const {
    if (n == 0) return std::nullopt;
    if (n == 1) return *this;
    if (is_zero()) return Rat(0);
    if (sign() < 0 && n % 2 == 0) return std::nullopt;
    mpz_class num = v_.get_num(), den = v_.get_den();
    mpz_class rnum, rden;
    bool neg = sgn(num) < 0;
    mpz_class anum = ::abs(num);
    int exact_n = mpz_root(rnum.get_mpz_t(), anum.get_mpz_t(), n);
    int exact_d = mpz_root(rden.get_mpz_t(), den.get_mpz_t(), n);
    if (!exact_n || !exact_d) return std::nullopt;
    if (neg) rnum = -rnum;
    mpq_class q(rnum, rden);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::to_string() const {
    return v_.get_str();
}

} // namespace curvedim
