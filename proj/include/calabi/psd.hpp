#pragma once

#include <optional>
#include <string>
#include <vector>

#include "calabi/matrix.hpp"
#include "calabi/scalar.hpp"

namespace calabi {

enum class VerdictStatus { obstructed, no_obstruction_up_to_degree };

std::string to_string(VerdictStatus s);

// A vector v in the monomial basis with v* M v < 0, making the
// obstruction independently checkable.
struct NegativityWitness {
    std::vector<Scalar> vector;
    Scalar value;  // v* M v, recomputed by direct summation
};

struct Verdict {
    VerdictStatus status = VerdictStatus::no_obstruction_up_to_degree;
    unsigned degree = 0;
    std::optional<NegativityWitness> certificate;  // present iff obstructed
    int rank_lower_bound = 0;  // strictly positive pivots at this truncation
    // Smallest-magnitude pivot: the smallest positive pivot when no
    // obstruction was found (0 for a zero matrix), the negative pivot of
    // smallest magnitude when obstructed.
    Scalar margin;
    // A pivot fell inside the numeric zero band (float backend only);
    // the verdict is conservative.
    bool marginal = false;

    bool obstructed() const { return status == VerdictStatus::obstructed; }
};

// Decides positive semidefiniteness by symmetric elimination with
// diagonal pivoting on the largest remaining |diagonal|. Every negative
// pivot yields a witness through the accumulated congruence; on the
// exact backend the decision is exact, on the float backend pivots with
// |p| <= epsilon * max|M| * dim count as zero and a negative verdict is
// only emitted when its witness validates beyond max(tolerance, band).
Verdict psd_check(const CoefficientMatrix& M, const Scalar& tolerance, const Scalar& epsilon);
Verdict psd_check(const CoefficientMatrix& M, const Scalar& tolerance);
Verdict psd_check(const CoefficientMatrix& M);  // zero tolerance

// Number of strictly positive pivots, defined only when psd_check finds
// no obstruction; throws DomainError on an obstructed matrix.
int rank_lower_bound(const CoefficientMatrix& M);

// Recomputes v* M v by direct summation. True iff strictly negative
// (exact backend) or <= -tolerance (float backend).
bool validate_certificate(const CoefficientMatrix& M, const NegativityWitness& w,
                          const Scalar& tolerance);
bool validate_certificate(const CoefficientMatrix& M, const NegativityWitness& w);

}  // namespace calabi
