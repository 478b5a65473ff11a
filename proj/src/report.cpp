#include "alphacalc/report.hpp"

#include <limits>
#include <sstream>

#include "alphacalc/surface_io.hpp"

namespace alphacalc {

namespace {

std::string pad(const std::string& s, size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

OrderedJson json_int(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

std::string lct_to_string(const LctValue& v) {
    return v.infinite ? "infinity" : format_rat(v.value);
}

OrderedJson witness_json(const EffectiveDivisor& d) {
    OrderedJson out = OrderedJson::object();
    for (const auto& [label, coeff] : d.coefficients) out[label] = format_rat(coeff);
    return out;
}

EffectiveDivisor witness_from_json(const OrderedJson& j) {
    if (!j.is_object()) throw ValidationError("certificate must be a JSON object");
    EffectiveDivisor d;
    for (const auto& [label, value] : j.items()) {
        Rat coeff;
        if (value.is_string())
            coeff = parse_rat(value.get<std::string>());
        else if (value.is_number_integer())
            coeff = Rat(Int(value.get<long long>()));
        else
            throw ValidationError("coefficient of " + label +
                                  " must be an integer or a \"p/q\" string");
        if (coeff < 0)
            throw ValidationError("negative coefficient " + format_rat(coeff) +
                                  " on " + label);
        d.coefficients.emplace_back(label, coeff);
    }
    return d;
}

// ---- build ----------------------------------------------------------------

namespace {

// Matrix, curve coordinates and self-intersections; curves are reported in
// the report basis when one is configured.
struct BuildView {
    std::vector<std::string> basis;
    IntMat matrix;
    std::vector<std::pair<std::string, IntVec>> curve_coords;
};

BuildView build_view(const SurfaceModel& m) {
    BuildView v;
    if (!m.report_basis.empty()) {
        v.basis = m.report_basis;
        v.matrix = report_form(m);
        for (const auto& [label, cls] : m.curves)
            v.curve_coords.emplace_back(label, report_coords(m, cls));
    } else {
        v.basis = m.basis_labels;
        v.matrix = m.form.matrix;
        for (const auto& [label, cls] : m.curves)
            v.curve_coords.emplace_back(label, cls.coefficients);
    }
    return v;
}

}  // namespace

OrderedJson build_report_json(const SurfaceBundle& bundle) {
    const SurfaceModel& m = bundle.model;
    BuildView v = build_view(m);
    OrderedJson out;
    out["basis_id"] = m.basis_id;
    out["rank"] = m.rank();
    out["internal_basis"] = m.basis_labels;
    if (!m.report_basis.empty()) out["report_basis"] = m.report_basis;
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < v.matrix.rows; ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < v.matrix.cols; ++j) row.push_back(json_int(v.matrix.at(i, j)));
        rows.push_back(row);
    }
    out["intersection_matrix"] = rows;
    OrderedJson curves = OrderedJson::object();
    for (const auto& [label, coords] : v.curve_coords) {
        OrderedJson c = OrderedJson::array();
        for (const auto& x : coords) c.push_back(json_int(x));
        curves[label] = c;
    }
    out["curves"] = curves;
    OrderedJson selfs = OrderedJson::object();
    for (const auto& [label, s] : self_intersections(m)) selfs[label] = json_int(s);
    out["self_intersections"] = selfs;
    OrderedJson divisors = OrderedJson::object();
    for (const auto& d : bundle.divisors) {
        OrderedJson terms = OrderedJson::object();
        for (const auto& [label, coeff] : d.terms) terms[label] = format_rat(coeff);
        divisors[d.label] = terms;
    }
    out["divisors"] = divisors;
    out["invariant_curves"] = m.invariant_curves;
    out["assertions"] = m.assertions;
    return out;
}

std::string build_report_text(const SurfaceBundle& bundle) {
    const SurfaceModel& m = bundle.model;
    BuildView v = build_view(m);
    std::string out = print_surface(bundle);
    out += "# rank: " + std::to_string(m.rank()) + "\n";
    out += "# basis_id: " + m.basis_id + "\n";
    out += "# basis:";
    for (const auto& b : v.basis) out += " " + b;
    out += "\n# intersection matrix:\n";
    size_t width = 1;
    for (const auto& x : v.matrix.data) width = std::max(width, x.str().size());
    for (int i = 0; i < v.matrix.rows; ++i) {
        out += "#  ";
        for (int j = 0; j < v.matrix.cols; ++j) {
            std::string cell = v.matrix.at(i, j).str();
            out += std::string(width + 1 - cell.size(), ' ') + cell;
        }
        out += "\n";
    }
    out += "# curve classes:\n";
    for (const auto& [label, coords] : v.curve_coords) {
        out += "#   " + label + " = [";
        for (size_t i = 0; i < coords.size(); ++i)
            out += (i ? ", " : "") + coords[i].str();
        out += "]\n";
    }
    out += "# self-intersections:";
    for (const auto& [label, s] : self_intersections(m))
        out += " " + label + "^2=" + s.str();
    out += "\n";
    return out;
}

std::string build_report_csv(const SurfaceBundle& bundle) {
    BuildView v = build_view(bundle.model);
    std::string out;
    for (const auto& b : v.basis) out += (out.empty() ? "" : ",") + b;
    out += "\n";
    for (int i = 0; i < v.matrix.rows; ++i) {
        for (int j = 0; j < v.matrix.cols; ++j)
            out += (j ? "," : "") + v.matrix.at(i, j).str();
        out += "\n";
    }
    return out;
}

// ---- ample ----------------------------------------------------------------

OrderedJson ample_report_json(const std::string& divisor_label, const AmplenessReport& r) {
    OrderedJson out;
    out["divisor"] = divisor_label;
    out["self_intersection"] = json_int(r.self_intersection);
    OrderedJson per = OrderedJson::object();
    for (const auto& [label, v] : r.per_curve) per[label] = json_int(v);
    out["per_curve"] = per;
    out["verdict"] = r.pass ? "pass" : "fail";
    out["failures"] = r.failures;
    out["assertion_note"] = r.assertion_note;
    return out;
}

std::string ample_report_text(const std::string& divisor_label, const AmplenessReport& r) {
    std::string out = "ampleness check for " + divisor_label + "\n";
    out += "  " + divisor_label + "." + divisor_label + " = " +
           r.self_intersection.str() + "\n";
    for (const auto& [label, v] : r.per_curve)
        out += "  " + divisor_label + "." + pad(label, 8) + " = " + v.str() + "\n";
    out += "verdict: ";
    out += r.pass ? "pass" : "fail";
    out += "\n";
    if (!r.failures.empty()) {
        out += "failures:";
        for (const auto& f : r.failures) out += " " + f;
        out += "\n";
    }
    out += "note: " + r.assertion_note + "\n";
    return out;
}

std::string ample_report_csv(const AmplenessReport& r) {
    std::string out = "item,value,positive\n";
    out += "self-intersection," + r.self_intersection.str() + "," +
           (r.self_intersection > 0 ? "true" : "false") + "\n";
    for (const auto& [label, v] : r.per_curve)
        out += label + "," + v.str() + "," + (v > 0 ? "true" : "false") + "\n";
    return out;
}

// ---- alpha ----------------------------------------------------------------

namespace {

OrderedJson alpha_result_json(const AlphaResult& r) {
    OrderedJson out;
    out["k"] = r.k;
    out["alpha_k"] = format_rat(r.alpha_k);
    out["m_star"] = json_int(r.m_star);
    out["achieved_by"] = r.achieved_by;
    out["witness"] = witness_json(r.witness);
    return out;
}

}  // namespace

OrderedJson alpha_report_json(const std::string& divisor_label,
                              const std::vector<AlphaRow>& rows) {
    OrderedJson out;
    out["divisor"] = divisor_label;
    OrderedJson list = OrderedJson::array();
    for (const auto& row : rows) {
        OrderedJson r = alpha_result_json(row.result);
        if (row.compare) {
            r["closed_form"] = format_rat(row.expected);
            r["matches_closed_form"] = row.matches;
        }
        list.push_back(r);
    }
    out["results"] = list;
    return out;
}

std::string alpha_report_text(const std::vector<AlphaRow>& rows) {
    bool compare = !rows.empty() && rows.front().compare;
    std::string out = pad("k", 4) + pad("alpha_k", 10) + pad("m_star", 8) +
                      pad("achieved_by", 13);
    if (compare) out += pad("closed_form", 13) + "match";
    out += "\n";
    for (const auto& row : rows) {
        out += pad(std::to_string(row.result.k), 4) +
               pad(format_rat(row.result.alpha_k), 10) +
               pad(row.result.m_star.str(), 8) + pad(row.result.achieved_by, 13);
        if (row.compare)
            out += pad(format_rat(row.expected), 13) +
                   (row.matches ? "yes" : "NO");
        out += "\n";
    }
    return out;
}

std::string alpha_report_csv(const std::vector<AlphaRow>& rows) {
    bool compare = !rows.empty() && rows.front().compare;
    std::string out = "k,alpha_k,m_star,achieved_by";
    if (compare) out += ",matches_closed_form";
    out += "\n";
    for (const auto& row : rows) {
        out += std::to_string(row.result.k) + "," + format_rat(row.result.alpha_k) +
               "," + row.result.m_star.str() + "," + row.result.achieved_by;
        if (row.compare) out += std::string(",") + (row.matches ? "true" : "false");
        out += "\n";
    }
    return out;
}

// ---- oracle ---------------------------------------------------------------

OrderedJson oracle_report_json(const std::vector<OracleRow>& rows) {
    OrderedJson list = OrderedJson::array();
    for (const auto& row : rows) {
        OrderedJson r;
        r["k"] = row.direct.k;
        r["alpha"] = alpha_result_json(row.direct);
        r["oracle"] = alpha_result_json(row.oracle);
        r["match"] = row.match;
        list.push_back(r);
    }
    OrderedJson out;
    out["results"] = list;
    return out;
}

std::string oracle_report_text(const std::vector<OracleRow>& rows) {
    std::string out = pad("k", 4) + pad("alpha_k", 10) + pad("oracle", 10) +
                      pad("m_star", 8) + pad("oracle_m", 10) + "match\n";
    for (const auto& row : rows) {
        out += pad(std::to_string(row.direct.k), 4) +
               pad(format_rat(row.direct.alpha_k), 10) +
               pad(format_rat(row.oracle.alpha_k), 10) +
               pad(row.direct.m_star.str(), 8) + pad(row.oracle.m_star.str(), 10) +
               (row.match ? "yes" : "NO") + "\n";
    }
    return out;
}

std::string oracle_report_csv(const std::vector<OracleRow>& rows) {
    std::string out = "k,alpha_k,oracle_alpha_k,m_star,oracle_m_star,match\n";
    for (const auto& row : rows)
        out += std::to_string(row.direct.k) + "," + format_rat(row.direct.alpha_k) +
               "," + format_rat(row.oracle.alpha_k) + "," + row.direct.m_star.str() +
               "," + row.oracle.m_star.str() + "," + (row.match ? "true" : "false") +
               "\n";
    return out;
}

// ---- verify ---------------------------------------------------------------

OrderedJson verify_report_json(int k, const std::string& divisor_label,
                               const EffectiveDivisor& cert, const CertificateCheck& c) {
    OrderedJson out;
    out["k"] = k;
    out["divisor"] = divisor_label;
    out["certificate"] = witness_json(cert);
    out["equivalent"] = c.equivalent;
    out["lct"] = lct_to_string(c.lct);
    return out;
}

std::string verify_report_text(int k, const CertificateCheck& c) {
    std::string out = "class equal to " + std::to_string(k) + "L: ";
    out += c.equivalent ? "yes" : "no";
    out += "\nlct: " + lct_to_string(c.lct) + "\n";
    return out;
}

std::string verify_report_csv(const CertificateCheck& c) {
    return std::string("equivalent,lct\n") + (c.equivalent ? "true" : "false") + "," +
           lct_to_string(c.lct) + "\n";
}

}  // namespace alphacalc
