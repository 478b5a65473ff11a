#include "alphacalc/builder.hpp"

#include <algorithm>
#include <set>

namespace alphacalc {

bool SurfaceModel::has_curve(const std::string& label) const {
    return std::any_of(curves.begin(), curves.end(),
                       [&](const auto& c) { return c.first == label; });
}

const DivisorClass& SurfaceModel::curve(const std::string& label) const {
    for (const auto& [name, cls] : curves)
        if (name == label) return cls;
    throw UnknownLabelError(label);
}

SurfaceModel hirzebruch(int n) {
    if (n < 0) throw ValidationError("hirzebruch index must be nonnegative");
    SurfaceModel m;
    m.basis_id = "F" + std::to_string(n);
    std::string zn = "Z" + std::to_string(n);
    m.basis_labels = {zn, "F"};
    m.form = IntersectionForm(m.basis_id, IntMat(2, 2, {Int(n), Int(1), Int(1), Int(0)}));
    m.curves.emplace_back(zn, DivisorClass{m.basis_id, {Int(1), Int(0)}});
    m.curves.emplace_back("F", DivisorClass{m.basis_id, {Int(0), Int(1)}});
    m.curves.emplace_back("Zneg", DivisorClass{m.basis_id, {Int(1), Int(-n)}});
    SurfRecord rec;
    rec.kind = SurfRecord::Kind::Base;
    rec.hirzebruch_n = n;
    m.history.push_back(rec);
    return m;
}

SurfaceModel blow_up(const SurfaceModel& model, const BlowUpSpec& spec) {
    if (spec.new_label.empty()) throw ValidationError("blow-up label must not be empty");
    if (model.has_curve(spec.new_label)) throw DuplicateLabelError(spec.new_label);
    std::set<std::string> seen;
    for (const auto& [label, mult] : spec.through) {
        if (!model.has_curve(label)) throw UnknownLabelError(label);
        if (!seen.insert(label).second) throw DuplicateLabelError(label);
        if (mult < 1) throw ValidationError("multiplicity must be positive for " + label);
    }
    // Necessary condition: curves meeting at the point with multiplicities
    // m, m' intersect there with local number >= m m', so their total
    // pairing must be at least that.
    for (size_t i = 0; i < spec.through.size(); ++i)
        for (size_t j = i + 1; j < spec.through.size(); ++j) {
            const auto& [la, ma] = spec.through[i];
            const auto& [lb, mb] = spec.through[j];
            Int p = pairing(model.form, model.curve(la), model.curve(lb));
            if (p < Int(ma) * Int(mb))
                throw GeometryError("curves " + la + " and " + lb +
                                    " have pairing " + p.str() +
                                    " < " + (Int(ma) * Int(mb)).str() +
                                    "; they cannot meet at the blown-up point");
        }

    SurfaceModel out;
    out.basis_id = model.basis_id + "/" + spec.new_label;
    out.basis_labels = model.basis_labels;
    out.basis_labels.push_back("e" + std::to_string(model.rank() - 1));

    const int r = model.rank();
    IntMat q(r + 1, r + 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) q.at(i, j) = model.form.matrix.at(i, j);
    q.at(r, r) = -1;
    out.form = IntersectionForm(out.basis_id, std::move(q));

    for (const auto& [label, cls] : model.curves) {
        DivisorClass extended{out.basis_id, cls.coefficients};
        extended.coefficients.push_back(Int(0));
        for (const auto& [tl, tm] : spec.through)
            if (tl == label) extended.coefficients[r] = -Int(tm);
        out.curves.emplace_back(label, std::move(extended));
    }
    DivisorClass exceptional{out.basis_id, IntVec(static_cast<size_t>(r + 1), Int(0))};
    exceptional.coefficients[r] = 1;
    out.curves.emplace_back(spec.new_label, std::move(exceptional));

    out.assertions = model.assertions;
    out.invariant_curves = model.invariant_curves;
    out.report_basis = model.report_basis;
    out.history = model.history;
    SurfRecord rec;
    rec.kind = SurfRecord::Kind::Blowup;
    rec.label = spec.new_label;
    rec.through = spec.through;
    out.history.push_back(rec);
    return out;
}

SurfaceModel rename_curve(const SurfaceModel& model, const std::string& from,
                          const std::string& to) {
    if (!model.has_curve(from)) throw UnknownLabelError(from);
    if (model.has_curve(to)) throw DuplicateLabelError(to);
    if (to.empty()) throw ValidationError("curve label must not be empty");
    SurfaceModel out = model;
    for (auto& [label, cls] : out.curves)
        if (label == from) label = to;
    SurfRecord rec;
    rec.kind = SurfRecord::Kind::Rename;
    rec.label = from;
    rec.renamed_to = to;
    out.history.push_back(rec);
    return out;
}

SurfaceModel add_curve(const SurfaceModel& model, const std::string& label,
                       const std::vector<std::pair<std::string, Int>>& terms) {
    if (model.has_curve(label)) throw DuplicateLabelError(label);
    if (label.empty()) throw ValidationError("curve label must not be empty");
    DivisorClass cls{model.basis_id, IntVec(static_cast<size_t>(model.rank()), Int(0))};
    for (const auto& [tl, coeff] : terms) {
        const DivisorClass& c = model.curve(tl);
        for (int i = 0; i < model.rank(); ++i)
            cls.coefficients[i] += coeff * c.coefficients[i];
    }
    SurfaceModel out = model;
    out.curves.emplace_back(label, std::move(cls));
    SurfRecord rec;
    rec.kind = SurfRecord::Kind::Curve;
    rec.label = label;
    rec.curve_terms = terms;
    out.history.push_back(rec);
    return out;
}

SurfaceModel add_assertion(const SurfaceModel& model, const std::string& text) {
    SurfaceModel out = model;
    out.assertions.push_back(text);
    return out;
}

SurfaceModel set_invariant_curves(const SurfaceModel& model,
                                  const std::vector<std::string>& labels) {
    if (labels.empty()) throw ValidationError("invariant curve list must not be empty");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!model.has_curve(l)) throw UnknownLabelError(l);
        if (!seen.insert(l).second) throw DuplicateLabelError(l);
    }
    SurfaceModel out = model;
    out.invariant_curves = labels;
    return out;
}

SurfaceModel set_report_basis(const SurfaceModel& model,
                              const std::vector<std::string>& labels) {
    if (static_cast<int>(labels.size()) != model.rank())
        throw ValidationError("report basis needs exactly " +
                              std::to_string(model.rank()) + " labels");
    std::set<std::string> seen;
    for (const auto& l : labels) {
        if (!model.has_curve(l)) throw UnknownLabelError(l);
        if (!seen.insert(l).second) throw DuplicateLabelError(l);
    }
    IntMat p(model.rank(), model.rank());
    for (int j = 0; j < model.rank(); ++j) {
        const auto& cls = model.curve(labels[j]);
        for (int i = 0; i < model.rank(); ++i) p.at(i, j) = cls.coefficients[i];
    }
    Int det = determinant(p);
    if (det != 1 && det != -1)
        throw ValidationError("report basis is not a lattice basis (determinant " +
                              det.str() + ")");
    SurfaceModel out = model;
    out.report_basis = labels;
    return out;
}

std::vector<std::pair<std::string, Int>> self_intersections(const SurfaceModel& model) {
    std::vector<std::pair<std::string, Int>> out;
    out.reserve(model.curves.size());
    for (const auto& [label, cls] : model.curves)
        out.emplace_back(label, pairing(model.form, cls, cls));
    return out;
}

Int pairing(const SurfaceModel& model, const std::string& a, const std::string& b) {
    return pairing(model.form, model.curve(a), model.curve(b));
}

IntMat report_change_matrix(const SurfaceModel& model) {
    if (model.report_basis.empty())
        throw ValidationError("model has no report basis");
    IntMat p(model.rank(), model.rank());
    for (int j = 0; j < model.rank(); ++j) {
        const auto& cls = model.curve(model.report_basis[j]);
        for (int i = 0; i < model.rank(); ++i) p.at(i, j) = cls.coefficients[i];
    }
    return p;
}

IntVec report_coords(const SurfaceModel& model, const DivisorClass& cls) {
    if (cls.basis_id != model.basis_id)
        throw BasisMismatchError(cls.basis_id, model.basis_id);
    IntMat p = report_change_matrix(model);
    return solve_integer_system(p, cls.coefficients).particular;
}

IntMat report_form(const SurfaceModel& model) {
    IntMat p = report_change_matrix(model);
    return mul(mul(transpose(p), model.form.matrix), p);
}

DivisorClass divisor_class(const SurfaceBundle& bundle, const std::string& label) {
    for (const auto& d : bundle.divisors) {
        if (d.label != label) continue;
        DivisorClass cls{bundle.model.basis_id,
                         IntVec(static_cast<size_t>(bundle.model.rank()), Int(0))};
        for (const auto& [tl, coeff] : d.terms) {
            if (!is_integer(coeff))
                throw ValidationError("divisor " + label +
                                      " has a non-integral class (coefficient " +
                                      format_rat(coeff) + " on " + tl + ")");
            const DivisorClass& c = bundle.model.curve(tl);
            for (int i = 0; i < bundle.model.rank(); ++i)
                cls.coefficients[i] += rat_num(coeff) * c.coefficients[i];
        }
        return cls;
    }
    throw UnknownLabelError(label);
}

QVec divisor_class_rational(const SurfaceModel& model,
                            const std::vector<std::pair<std::string, Rat>>& terms) {
    QVec out(static_cast<size_t>(model.rank()), Rat(0));
    for (const auto& [label, coeff] : terms) {
        const DivisorClass& c = model.curve(label);
        for (int i = 0; i < model.rank(); ++i)
            out[i] += coeff * Rat(c.coefficients[i]);
    }
    return out;
}

SurfaceBundle counterexample_surface() {
    SurfaceModel m = hirzebruch(2);
    m = rename_curve(m, "Z2", "Zt2");
    m = rename_curve(m, "F", "Ft");
    m = rename_curve(m, "Zneg", "Ztm2");
    for (int i = 1; i <= 4; ++i)
        m = add_curve(m, "Ft" + std::to_string(i), {{"Ft", Int(1)}});
    for (int i = 1; i <= 4; ++i)
        m = blow_up(m, BlowUpSpec{{{"Zt2", 1}, {"Ft" + std::to_string(i), 1}},
                                  "Et" + std::to_string(i)});
    m = blow_up(m, BlowUpSpec{{{"Et1", 1}, {"Ft1", 1}}, "E1"});
    m = blow_up(m, BlowUpSpec{{{"Et2", 1}, {"Ft2", 1}}, "E2"});
    m = set_invariant_curves(m, {"Zt2", "Ztm2", "Et1", "Et2", "Et3", "Et4",
                                 "Ft1", "Ft2", "Ft3", "Ft4", "E1", "E2"});
    m = set_report_basis(m, {"Zt2", "Ft", "Et1", "Et2", "Et3", "Et4", "E1", "E2"});
    m = add_assertion(m, "curve list complete for ampleness check");
    m = add_assertion(m, "configuration is simple normal crossing");

    NamedDivisor l;
    l.label = "L";
    l.terms = {{"Zt2", Rat(2)}, {"Ztm2", Rat(2)}, {"Ft", Rat(3)},
               {"Et1", Rat(1)}, {"Ft1", Rat(1)}, {"E1", Rat(1)},
               {"Et2", Rat(1)}, {"Ft2", Rat(1)}, {"E2", Rat(1)}};
    return SurfaceBundle{std::move(m), {std::move(l)}};
}

}  // namespace alphacalc
