#pragma once

#include <vector>

#include "calabi/bidegree.hpp"
#include "calabi/diastasis.hpp"
#include "calabi/multi_index.hpp"

namespace calabi {

// All monomials of total degree <= degree in graded order, starting
// with the constant: [1, z1, ..., zn, z1^2, z1*z2, ...].
std::vector<MultiIndex> monomial_ordering(std::size_t nvars, unsigned degree);

// Hermitian matrix of series coefficients indexed by the graded
// monomials of degree <= degree: entry (j, k) = coefficient(m_j, m_k).
// The series must resolve every queried pair, i.e. order >= 2*degree;
// zero-filling unknown coefficients is never done.
class CoefficientMatrix {
public:
    CoefficientMatrix(const BidegreeSeries& S, unsigned degree, AmbientSpace ambient);

    // Assemble from raw entries (report round-trips, synthetic tests).
    static CoefficientMatrix from_entries(std::vector<MultiIndex> ordering,
                                          std::vector<std::vector<Scalar>> entries,
                                          unsigned degree, AmbientSpace ambient,
                                          const Backend& backend);

    const std::vector<MultiIndex>& ordering() const { return ordering_; }
    std::vector<std::string> labels() const;
    unsigned degree() const { return degree_; }
    std::size_t dim() const { return entries_.size(); }
    const Scalar& at(std::size_t j, std::size_t k) const { return entries_[j][k]; }
    const AmbientSpace& ambient() const { return ambient_; }
    Backend backend() const { return backend_; }

    // Largest |entry| measured as |re| + |im| (real scalar).
    Scalar max_abs_bound() const;
    // Worst |entry(j,k) - conj(entry(k,j))|^2 over all pairs.
    Scalar hermitian_defect2() const;

    bool operator==(const CoefficientMatrix& o) const;

private:
    std::vector<MultiIndex> ordering_;
    std::vector<std::vector<Scalar>> entries_;
    unsigned degree_ = 0;
    AmbientSpace ambient_;
    Backend backend_;

    CoefficientMatrix() = default;
};

}  // namespace calabi
