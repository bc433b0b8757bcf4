#include "kmfold/folding.hpp"

#include <stdexcept>

namespace kmfold {

// The folded entry is t_j times the column sum over the distinct members of
// j's orbit; summing over the full cyclic group and multiplying by |Sigma_j|
// would count each member |Sigma_j| times and break the diagonal 2.
FoldResult fold(const IMat& m, const Perm& tau) {
    if (!preserves(m, tau)) throw std::invalid_argument("fold: permutation does not preserve the matrix");
    FoldResult r;
    r.orbits = orbit_data(tau);
    int s = r.orbits.s();
    for (const auto& o : r.orbits.orbits) {
        int j = o.front();
        std::int64_t t = 0;
        for (int k : o)
            if (m[j][k] != 0) ++t;
        r.t_values.push_back(t);
    }
    r.folded.assign(s, IVec(s, 0));
    for (int a = 0; a < s; ++a) {
        int i = r.orbits.representatives[a];
        for (int b = 0; b < s; ++b) {
            std::int64_t sum = 0;
            for (int jj : r.orbits.orbits[b]) sum += m[i][jj];
            r.folded[a][b] = r.t_values[b] * sum;
        }
    }
    r.recognized = recognize(r.folded);
    return r;
}

IVec folded_dual_marks(const FoldResult& f) {
    if (f.recognized.kind == Recognition::Zero) return {1};
    auto v = left_null_primitive(f.folded);
    if (!v) throw std::logic_error("folded matrix has no positive dual marks");
    return *v;
}

}  // namespace kmfold
