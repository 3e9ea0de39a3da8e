#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace calabi {

// Exponent string of a monomial z_1^{e_1} ... z_n^{e_n}. Ordered by
// total degree first, ties broken lexicographically with variable 1
// highest, so the sequence over two variables starts
//   1, z1, z2, z1^2, z1*z2, z2^2, ...
class MultiIndex {
public:
    explicit MultiIndex(std::size_t nvars) : e_(nvars, 0u) {}
    explicit MultiIndex(std::vector<unsigned> exponents) : e_(std::move(exponents)) {}

    std::size_t vars() const { return e_.size(); }
    unsigned operator[](std::size_t i) const { return e_[i]; }
    const std::vector<unsigned>& exponents() const { return e_; }

    unsigned degree() const;
    bool is_constant() const { return degree() == 0; }

    MultiIndex plus(const MultiIndex& o) const;  // dimension-checked

    std::strong_ordering operator<=>(const MultiIndex& o) const;
    bool operator==(const MultiIndex& o) const { return e_ == o.e_; }

    std::string label() const;  // "1", "z1", "z1^2*z2"

private:
    std::vector<unsigned> e_;
};

// All monomials of total degree <= degree over nvars variables, in the
// graded order above. Length is C(nvars + degree, degree).
std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned degree);

}  // namespace calabi
