#ifndef CURVEDIM_DIVISOR_HPP
#define CURVEDIM_DIVISOR_HPP

#include "curvedim/curve_model.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace curvedim {

/// Integer-weighted formal sum over normalization points, keyed by branch id
/// ("<point>#<index>"). Zero coefficients are never stored.
class Divisor {
public:
    Divisor() = default;

    long coeff(const std::string& branch_id) const;
    void set(const std::string& branch_id, long c);
    void add(const std::string& branch_id, long c);

    const std::map<std::string, long>& entries() const { return e_; }
    long degree() const;
    bool empty() const { return e_.empty(); }

    Divisor& operator+=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { a += b; return a; }
    friend bool operator==(const Divisor& a, const Divisor& b) { return a.e_ == b.e_; }

    static std::string point_of(const std::string& branch_id);

private:
    std::map<std::string, long> e_;
};

enum class PointClass { Interior, Boundary, Exterior };

/// Structured description of the open set U: the complement kind, and (for
/// locally polar complements) the class of every special point.
struct OpenSetSpec {
    enum class Complement { NonPolar, LocallyPolar };
    Complement complement = Complement::LocallyPolar;
    std::optional<CurveModel::Ambient> ambient; // must match the curve when present
    std::map<std::string, PointClass> point_classes;

    std::optional<PointClass> class_of(const std::string& point_id) const;
};

/// D_m: (m(X_i,p) - 1) at every branch of every singular point.
Divisor multiplicity_divisor(const CurveModel& model);

/// D_m^A: (m - 1) at branches of affine singular points, minus
/// ((X_i . H_inf) + 1) at every branch over the hyperplane at infinity.
Divisor affine_multiplicity_divisor(const CurveModel& model);

/// Degree of D_m^A computed branch-wise and point-wise; the two must agree.
std::pair<long, long> degree_consistency(const CurveModel& model);

/// Restriction of a divisor to an open set: positive coefficients survive at
/// boundary points, negative coefficients on the closure.
Divisor open_set_restriction(const Divisor& d, const OpenSetSpec& spec);

} // namespace curvedim

#endif
