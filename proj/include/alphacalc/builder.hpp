#pragma once

#include <string>
#include <utility>
#include <vector>

#include "alphacalc/lattice.hpp"

namespace alphacalc {

/// One construction step, kept so a model can be printed back out in the
/// surface-description format.
struct SurfRecord {
    enum class Kind { Base, Rename, Curve, Blowup };
    Kind kind = Kind::Base;
    int hirzebruch_n = 0;                                 // Base
    std::string label;                                    // Rename: old; else the declared label
    std::string renamed_to;                               // Rename
    std::vector<std::pair<std::string, Int>> curve_terms; // Curve
    std::vector<std::pair<std::string, int>> through;     // Blowup

    friend bool operator==(const SurfRecord&, const SurfRecord&) = default;
};

/// The algebraic shadow of a projective surface: a Picard lattice with its
/// intersection form plus named curve classes. The internal basis is the
/// pullback basis of the construction (base generators, then one class of
/// self-intersection -1 per blow-up); named curves are proper transforms.
///
/// Values are immutable once built: every operation returns a new model.
struct SurfaceModel {
    std::string basis_id;
    std::vector<std::string> basis_labels;
    IntersectionForm form;
    std::vector<std::pair<std::string, DivisorClass>> curves;  // declaration order
    std::vector<std::string> assertions;       // user-asserted geometric facts
    std::vector<std::string> invariant_curves; // declared torus-invariant curve list
    std::vector<std::string> report_basis;     // curve labels used for reporting
    std::vector<SurfRecord> history;

    int rank() const { return form.rank(); }
    bool has_curve(const std::string& label) const;
    const DivisorClass& curve(const std::string& label) const;  // throws UnknownLabelError

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

/// Blow up the point cut out by the listed curves; each curve passes through
/// the point with the given multiplicity.
struct BlowUpSpec {
    std::vector<std::pair<std::string, int>> through;
    std::string new_label;
};

/// A named formal combination of curves with rational coefficients.
struct NamedDivisor {
    std::string label;
    std::vector<std::pair<std::string, Rat>> terms;

    friend bool operator==(const NamedDivisor&, const NamedDivisor&) = default;
};

/// A model together with its named divisors (the parse result of a surface
/// description file).
struct SurfaceBundle {
    SurfaceModel model;
    std::vector<NamedDivisor> divisors;

    friend bool operator==(const SurfaceBundle&, const SurfaceBundle&) = default;
};

/// Hirzebruch surface F_n: rank-2 lattice with basis [Z_n, F], form
/// ((n,1),(1,0)), named curves "Z<n>", "F", and the negative section "Zneg".
SurfaceModel hirzebruch(int n);

/// Rank grows by one; the new exceptional class e has e.e = -1 and is
/// orthogonal to all prior basis classes. Every curve listed in `through`
/// with multiplicity m is replaced by its proper transform C - m e.
///
/// A pair of listed curves with pairing < product of multiplicities cannot
/// meet as declared; that raises GeometryError.
SurfaceModel blow_up(const SurfaceModel& model, const BlowUpSpec& spec);

SurfaceModel rename_curve(const SurfaceModel& model, const std::string& from,
                          const std::string& to);

/// Declare a named curve class as an integer combination of existing ones
/// (e.g. another member of a fiber's linear system).
SurfaceModel add_curve(const SurfaceModel& model, const std::string& label,
                       const std::vector<std::pair<std::string, Int>>& terms);

SurfaceModel add_assertion(const SurfaceModel& model, const std::string& text);
SurfaceModel set_invariant_curves(const SurfaceModel& model,
                                  const std::vector<std::string>& labels);
/// Requires exactly rank() labels whose classes form a unimodular basis.
SurfaceModel set_report_basis(const SurfaceModel& model,
                              const std::vector<std::string>& labels);

/// Self-intersection numbers of all named curves, in declaration order.
std::vector<std::pair<std::string, Int>> self_intersections(const SurfaceModel& model);

Int pairing(const SurfaceModel& model, const std::string& a, const std::string& b);

/// Change-of-basis matrix whose columns are the report-basis classes.
IntMat report_change_matrix(const SurfaceModel& model);
/// Coordinates of a class in the report basis (exact; the basis is unimodular).
IntVec report_coords(const SurfaceModel& model, const DivisorClass& cls);
/// The intersection form expressed in the report basis.
IntMat report_form(const SurfaceModel& model);

/// Class of a named divisor; requires all coefficients integral.
DivisorClass divisor_class(const SurfaceBundle& bundle, const std::string& label);
/// Class of a rational combination of curves, as an exact rational vector.
QVec divisor_class_rational(const SurfaceModel& model,
                            const std::vector<std::pair<std::string, Rat>>& terms);

/// The bundled example: the blow-up of F_2 at four points of the 2-section
/// and two infinitely-near points, polarized by the divisor "L". On this
/// surface the level-k alpha invariants oscillate forever between 1/8 and
/// k/(8k-1).
SurfaceBundle counterexample_surface();

}  // namespace alphacalc
