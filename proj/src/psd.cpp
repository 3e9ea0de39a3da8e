#include "calabi/psd.hpp"

#include <algorithm>

#include "calabi/errors.hpp"

namespace calabi {

std::string to_string(VerdictStatus s) {
    return s == VerdictStatus::obstructed ? "obstructed" : "no_obstruction_up_to_degree";
}

namespace {

Scalar abs_real(const Scalar& s) {
    if (s.is_exact()) return Scalar::complex_rational(abs(s.exact_re()), mpq_class(0));
    return Scalar::complex_float(s.float_re().abs(), BigFloat(s.float_re().precision()));
}

Scalar quadratic_form(const CoefficientMatrix& M, const std::vector<Scalar>& v) {
    Scalar acc = Scalar::zero(M.backend());
    for (std::size_t j = 0; j < M.dim(); ++j) {
        if (v[j].is_zero()) continue;
        Scalar row = Scalar::zero(M.backend());
        for (std::size_t k = 0; k < M.dim(); ++k) {
            if (v[k].is_zero()) continue;
            row = row + M.at(j, k) * v[k];
        }
        acc = acc + v[j].conj() * row;
    }
    return acc;
}

struct NegCandidate {
    Scalar pivot;                 // the elimination's negative value
    std::vector<Scalar> vector;   // witness in the original basis
};

}  // namespace

Verdict psd_check(const CoefficientMatrix& M, const Scalar& tolerance, const Scalar& epsilon) {
    const Backend backend = M.backend();
    if (tolerance.backend() != backend)
        throw BackendMismatch("tolerance backend differs from matrix backend");
    if (!tolerance.is_real() || tolerance.sign_real() < 0)
        throw DomainError("tolerance must be real and nonnegative");

    const std::size_t n = M.dim();
    const Scalar zero = Scalar::zero(backend);

    Verdict verdict;
    verdict.degree = M.degree();
    verdict.margin = zero;
    if (n == 0) return verdict;

    // Hermitian check. Exact: strict; float: allow rounding-level
    // asymmetry relative to the matrix scale.
    Scalar maxabs = M.max_abs_bound();
    {
        Scalar defect2 = M.hermitian_defect2();
        if (backend.is_exact()) {
            if (!defect2.is_zero()) throw DomainError("matrix is not Hermitian");
        } else {
            Scalar scale = Scalar::cmp_real(maxabs, Scalar::one(backend)) > 0
                               ? maxabs
                               : Scalar::one(backend);
            Scalar htol = Scalar::complex_float(
                BigFloat::pow2(-static_cast<long>(backend.precision) / 2,
                               backend.precision),
                BigFloat(backend.precision));
            htol = htol * scale;
            if (Scalar::cmp_real(defect2, htol * htol) > 0)
                throw DomainError("matrix is not Hermitian within float tolerance");
        }
    }

    // Zero band for float pivots; exact arithmetic decides by sign.
    Scalar band = zero;
    if (!backend.is_exact())
        band = epsilon.to_backend(backend) * maxabs * Scalar::integer(static_cast<long>(n), backend);
    Scalar neg_thr = band;
    if (Scalar::cmp_real(tolerance, neg_thr) > 0) neg_thr = tolerance;

    // Work matrix, exactly Hermitian by construction from the upper
    // triangle; diagonals forced real.
    std::vector<std::vector<Scalar>> W(n, std::vector<Scalar>(n, zero));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            if (i == j) {
                const Scalar& d = M.at(i, i);
                W[i][i] = d.is_exact()
                              ? Scalar::complex_rational(d.exact_re(), mpq_class(0))
                              : Scalar::complex_float(d.float_re(),
                                                      BigFloat(d.float_re().precision()));
            } else {
                W[i][j] = M.at(i, j);
                W[j][i] = M.at(i, j).conj();
            }
        }
    }

    // Congruence accumulator, column-major: witness directions live in
    // its columns and satisfy col_i* M col_j == W[i][j] throughout.
    std::vector<std::vector<Scalar>> C(n, std::vector<Scalar>(n, zero));
    for (std::size_t i = 0; i < n; ++i) C[i][i] = Scalar::one(backend);

    std::vector<bool> active(n, true);
    std::vector<Scalar> pivots;
    std::vector<NegCandidate> negatives;
    std::size_t remaining = n;

    while (remaining > 0) {
        // Largest remaining |diagonal|; ties to the earliest monomial.
        std::size_t r = n;
        Scalar best = zero;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            Scalar a = abs_real(W[i][i]);
            if (r == n || Scalar::cmp_real(a, best) > 0) {
                r = i;
                best = a;
            }
        }

        if (Scalar::cmp_real(best, band) <= 0) {
            // Every remaining diagonal sits in the zero band. A
            // significant off-diagonal entry c on such a row spans an
            // indefinite 2x2 block [0 c; conj(c) 0].
            std::size_t bi = n, bj = n;
            Scalar bestc2 = zero;
            for (std::size_t i = 0; i < n; ++i) {
                if (!active[i]) continue;
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!active[j]) continue;
                    Scalar c2 = W[i][j].norm2();
                    if (Scalar::cmp_real(c2, bestc2) > 0) {
                        bi = i;
                        bj = j;
                        bestc2 = c2;
                    }
                }
            }
            if (bi == n || bestc2.is_zero()) {
                // Remaining submatrix is (numerically) zero.
                if (!backend.is_exact()) {
                    for (std::size_t i = 0; i < n && !verdict.marginal; ++i) {
                        if (!active[i]) continue;
                        if (!W[i][i].is_zero()) verdict.marginal = true;
                        for (std::size_t j = i + 1; j < n; ++j)
                            if (active[j] && !W[i][j].is_zero()) verdict.marginal = true;
                    }
                }
                break;
            }
            const Scalar& c = W[bi][bj];
            Scalar t = -c;
            // value of (t e_i + e_j)* W (t e_i + e_j)
            Scalar value = c.norm2() * W[bi][bi] + W[bj][bj] -
                           Scalar::integer(2, backend) * c.norm2();
            if (backend.is_exact() || Scalar::cmp_real(value, -neg_thr) <= 0) {
                std::vector<Scalar> wv(n, zero);
                for (std::size_t row = 0; row < n; ++row)
                    wv[row] = t * C[bi][row] + C[bj][row];
                negatives.push_back({value, std::move(wv)});
            } else {
                verdict.marginal = true;
            }
            break;  // no 1x1 pivot is available past this point
        }

        const Scalar d = W[r][r];
        pivots.push_back(d);
        if (d.sign_real() < 0) {
            if (backend.is_exact() || Scalar::cmp_real(d, -neg_thr) <= 0) {
                negatives.push_back({d, C[r]});
            } else {
                verdict.marginal = true;  // negative but inside the tolerance band
            }
        }

        // Schur update of the remaining rows and the congruence columns.
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == r) continue;
            const Scalar cir = W[i][r];
            if (cir.is_zero()) continue;
            Scalar f = cir / d;
            for (std::size_t row = 0; row < n; ++row)
                C[i][row] = C[i][row] - f * C[r][row];
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == r || j < i) continue;
                if (j == i) {
                    W[i][i] = W[i][i] - cir.norm2() / d;
                } else {
                    W[i][j] = W[i][j] - cir * W[j][r].conj() / d;
                    W[j][i] = W[i][j].conj();
                }
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            W[i][r] = zero;
            W[r][i] = zero;
        }
        active[r] = false;
        --remaining;
    }

    int positive = 0;
    Scalar smallest_pos = zero;
    for (const Scalar& p : pivots) {
        if (Scalar::cmp_real(p, band) > 0) {
            ++positive;
            if (smallest_pos.is_zero() || Scalar::cmp_real(p, smallest_pos) < 0)
                smallest_pos = p;
        }
    }
    verdict.rank_lower_bound = positive;

    // Prefer the negative pivot of smallest magnitude; drop candidates
    // whose witness fails direct validation (float rounding only).
    std::stable_sort(negatives.begin(), negatives.end(),
                     [](const NegCandidate& a, const NegCandidate& b) {
                         return Scalar::cmp_real(abs_real(a.pivot), abs_real(b.pivot)) < 0;
                     });
    for (NegCandidate& cand : negatives) {
        Scalar direct = quadratic_form(M, cand.vector);
        bool ok;
        if (backend.is_exact())
            ok = direct.is_real() && direct.sign_real() < 0;
        else
            ok = Scalar::cmp_real(direct, -neg_thr) <= 0;
        if (!ok) {
            verdict.marginal = true;
            continue;
        }
        verdict.status = VerdictStatus::obstructed;
        verdict.margin = cand.pivot;
        verdict.certificate = NegativityWitness{std::move(cand.vector), direct};
        return verdict;
    }

    verdict.status = VerdictStatus::no_obstruction_up_to_degree;
    verdict.margin = smallest_pos;
    return verdict;
}

Verdict psd_check(const CoefficientMatrix& M, const Scalar& tolerance) {
    // Default zero band epsilon: 10^-12 relative to max|M| * dim.
    Scalar eps = M.backend().is_exact()
                     ? Scalar::zero(M.backend())
                     : Scalar::rational(mpq_class(1, 1000000000000L), M.backend());
    return psd_check(M, tolerance, eps);
}

Verdict psd_check(const CoefficientMatrix& M) {
    return psd_check(M, Scalar::zero(M.backend()));
}

int rank_lower_bound(const CoefficientMatrix& M) {
    Verdict v = psd_check(M);
    if (v.obstructed())
        throw DomainError("rank lower bound is undefined for an obstructed matrix");
    return v.rank_lower_bound;
}

bool validate_certificate(const CoefficientMatrix& M, const NegativityWitness& w,
                          const Scalar& tolerance) {
    if (w.vector.size() != M.dim())
        throw DimensionMismatch("witness dimension differs from matrix");
    for (const Scalar& v : w.vector)
        if (v.backend() != M.backend())
            throw BackendMismatch("witness backend differs from matrix");
    Scalar direct = quadratic_form(M, w.vector);
    if (M.backend().is_exact()) return direct.is_real() && direct.sign_real() < 0;
    return Scalar::cmp_real(direct, -tolerance.to_backend(M.backend())) <= 0;
}

bool validate_certificate(const CoefficientMatrix& M, const NegativityWitness& w) {
    return validate_certificate(M, w, Scalar::zero(M.backend()));
}

}  // namespace calabi
