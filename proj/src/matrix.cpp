#include "calabi/matrix.hpp"

#include "calabi/errors.hpp"

namespace calabi {

std::vector<MultiIndex> monomial_ordering(std::size_t nvars, unsigned degree) {
    return monomials_up_to(nvars, degree);
}

CoefficientMatrix::CoefficientMatrix(const BidegreeSeries& S, unsigned degree,
                                     AmbientSpace ambient)
    : ambient_(std::move(ambient)), backend_(S.backend()) {
    if (S.order() < 2 * static_cast<int>(degree))
        throw TruncationError("series order " + std::to_string(S.order()) +
                              " is insufficient for matrix degree " + std::to_string(degree) +
                              " (need >= " + std::to_string(2 * degree) + ")");
    degree_ = degree;
    ordering_ = monomial_ordering(S.vars(), degree);
    entries_.reserve(ordering_.size());
    for (const MultiIndex& mj : ordering_) {
        std::vector<Scalar> row;
        row.reserve(ordering_.size());
        for (const MultiIndex& mk : ordering_) row.push_back(S.coefficient(mj, mk));
        entries_.push_back(std::move(row));
    }
}

CoefficientMatrix CoefficientMatrix::from_entries(std::vector<MultiIndex> ordering,
                                                  std::vector<std::vector<Scalar>> entries,
                                                  unsigned degree, AmbientSpace ambient,
                                                  const Backend& backend) {
    if (entries.size() != ordering.size())
        throw DimensionMismatch("entry row count differs from ordering length");
    for (const auto& row : entries) {
        if (row.size() != ordering.size()) throw DimensionMismatch("matrix is not square");
        for (const Scalar& v : row)
            if (v.backend() != backend) throw BackendMismatch("matrix entry backend differs");
    }
    CoefficientMatrix m;
    m.ordering_ = std::move(ordering);
    m.entries_ = std::move(entries);
    m.degree_ = degree;
    m.ambient_ = std::move(ambient);
    m.backend_ = backend;
    return m;
}

std::vector<std::string> CoefficientMatrix::labels() const {
    std::vector<std::string> out;
    out.reserve(ordering_.size());
    for (const MultiIndex& m : ordering_) out.push_back(m.label());
    return out;
}

Scalar CoefficientMatrix::max_abs_bound() const {
    Scalar best = Scalar::zero(backend_);
    for (const auto& row : entries_) {
        for (const Scalar& v : row) {
            Scalar bound;
            if (v.is_exact()) {
                bound = Scalar::complex_rational(abs(v.exact_re()) + abs(v.exact_im()),
                                                 mpq_class(0));
            } else {
                bound = Scalar::complex_float(v.float_re().abs() + v.float_im().abs(),
                                              BigFloat(v.float_re().precision()));
            }
            if (Scalar::cmp_real(bound, best) > 0) best = bound;
        }
    }
    return best;
}

Scalar CoefficientMatrix::hermitian_defect2() const {
    Scalar worst = Scalar::zero(backend_);
    for (std::size_t j = 0; j < dim(); ++j) {
        for (std::size_t k = j; k < dim(); ++k) {
            Scalar d = (entries_[j][k] - entries_[k][j].conj()).norm2();
            if (Scalar::cmp_real(d, worst) > 0) worst = d;
        }
    }
    return worst;
}

bool CoefficientMatrix::operator==(const CoefficientMatrix& o) const {
    if (backend_ != o.backend_ || degree_ != o.degree_ || dim() != o.dim()) return false;
    if (!(ordering_ == o.ordering_)) return false;
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t k = 0; k < dim(); ++k)
            if (!(entries_[j][k] == o.entries_[j][k])) return false;
    return true;
}

}  // namespace calabi
