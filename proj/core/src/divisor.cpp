#include "curvedim/divisor.hpp"

#include "curvedim/errors.hpp"

namespace curvedim {

long Divisor::coeff(const std::string& branch_id) const {
    auto it = e_.find(branch_id);
    return it == e_.end() ? 0 : it->second;
}

void Divisor::set(const std::string& branch_id, long c) {
    if (c == 0) e_.erase(branch_id);
    else e_[branch_id] = c;
}

void Divisor::add(const std::string& branch_id, long c) {
    set(branch_id, coeff(branch_id) + c);
}

long Divisor::degree() const {
    long d = 0;
    for (const auto& [id, c] : e_) d += c;
    return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (const auto& [id, c] : o.e_) add(id, c);
    return *this;
}

std::string Divisor::point_of(const std::string& branch_id) {
    auto hash = branch_id.rfind('#');
    if (hash == std::string::npos) throw Error("malformed branch id: " + branch_id);
    return branch_id.substr(0, hash);
}

std::optional<PointClass> OpenSetSpec::class_of(const std::string& point_id) const {
    auto it = point_classes.find(point_id);
    if (it == point_classes.end()) return std::nullopt;
    return it->second;
}

Divisor multiplicity_divisor(const CurveModel& model) {
    Divisor d;
    for (const auto* rec : model.singular_records())
        for (const auto& b : rec->branches) d.add(b.branch_id, b.mult - 1);
    return d;
}

Divisor affine_multiplicity_divisor(const CurveModel& model) {
    if (model.ambient != CurveModel::Ambient::Affine)
        throw Error("affine multiplicity divisor requires an affine-ambient curve");
    Divisor d;
    for (const auto* rec : model.affine_singular_records())
        for (const auto& b : rec->branches) d.add(b.branch_id, b.mult - 1);
    for (const auto* rec : model.infinity_records()) {
        for (size_t i = 0; i < rec->branches.size(); ++i) {
            const auto& b = rec->branches[i];
            if (!b.inf_mult) throw Error("branch " + b.branch_id + " lacks infinity intersection data");
            d.add(b.branch_id, -(*b.inf_mult + 1));
        }
    }
    return d;
}

std::pair<long, long> degree_consistency(const CurveModel& model) {
    long branchwise = affine_multiplicity_divisor(model).degree();
    long pointwise = 0;
    for (const auto* rec : model.affine_singular_records())
        pointwise += static_cast<long>(rec->m) - rec->r;
    for (const auto* rec : model.infinity_records()) {
        long inter = 0;
        for (int im : rec->inf_mults) inter += im;
        pointwise -= inter + rec->r;
    }
    return {branchwise, pointwise};
}

Divisor open_set_restriction(const Divisor& d, const OpenSetSpec& spec) {
    Divisor out;
    for (const auto& [id, c] : d.entries()) {
        auto cls = spec.class_of(Divisor::point_of(id));
        if (!cls)
            throw UnclassifiedPoint("divisor support point " + Divisor::point_of(id) +
                                    " is not classified by the open-set description");
        bool keep = (c > 0 && *cls == PointClass::Boundary) ||
                    (c < 0 && (*cls == PointClass::Interior || *cls == PointClass::Boundary));
        if (keep) out.set(id, c);
    }
    return out;
}

} // namespace curvedim
