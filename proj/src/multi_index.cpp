#include "calabi/multi_index.hpp"

#include "calabi/errors.hpp"

namespace calabi {

unsigned MultiIndex::degree() const {
    unsigned d = 0;
    for (unsigned e : e_) d += e;
    return d;
}

MultiIndex MultiIndex::plus(const MultiIndex& o) const {
    if (vars() != o.vars()) throw DimensionMismatch("multi-index variable counts differ");
    std::vector<unsigned> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += o.e_[i];
    return MultiIndex(std::move(r));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    if (vars() != o.vars()) return vars() <=> o.vars();
    unsigned da = degree(), db = o.degree();
    if (da != db) return da <=> db;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        // Within a degree, a larger exponent on an earlier variable
        // comes first: (2,0) < (1,1) < (0,2).
        if (e_[i] != o.e_[i]) return o.e_[i] <=> e_[i];
    }
    return std::strong_ordering::equal;
}

std::string MultiIndex::label() const {
    if (is_constant()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += "z" + std::to_string(i + 1);
        if (e_[i] > 1) out += "^" + std::to_string(e_[i]);
    }
    return out;
}

namespace {

void enumerate(std::size_t pos, unsigned remaining, std::vector<unsigned>& cur,
               std::vector<MultiIndex>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
        cur[pos] = e;
        enumerate(pos + 1, remaining - e, cur, out);
    }
    cur[pos] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials_up_to(std::size_t nvars, unsigned degree) {
    if (nvars == 0) throw DimensionMismatch("need at least one variable");
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur(nvars, 0u);
    for (unsigned d = 0; d <= degree; ++d) enumerate(0, d, cur, out);
    return out;
}

}  // namespace calabi
