#pragma once

#include "cobalt/finite.hpp"
#include "cobalt/rig.hpp"

#include <string>
#include <vector>

// Scalar associators over a strictified object monoid: the smallest model in
// which the pentagon is a genuine yes/no question.  Components live in the
// multiplicative group of nonzero rationals; the pentagon is the 3-cocycle
// condition.

namespace cobalt {

struct MonoidalAssocData {
    FiniteMonoid objects;
    // assoc[x][y][z], nonzero.
    std::vector<std::vector<std::vector<BigRat>>> assoc;

    static MonoidalAssocData make(FiniteMonoid objects,
                                  std::vector<std::vector<std::vector<BigRat>>> assoc) {
        MonoidalAssocData d{std::move(objects), std::move(assoc)};
        const std::size_t n = d.objects.size();
        if (d.assoc.size() != n) throw table_error("associator has wrong shape");
        for (const auto& plane : d.assoc) {
            if (plane.size() != n) throw table_error("associator has wrong shape");
            for (const auto& row : plane) {
                if (row.size() != n) throw table_error("associator has wrong shape");
                for (const auto& v : row)
                    if (v == 0) throw table_error("associator components must be invertible");
            }
        }
        return d;
    }

    static MonoidalAssocData trivial(FiniteMonoid objects) {
        std::size_t n = objects.size();
        return make(std::move(objects),
                    std::vector<std::vector<std::vector<BigRat>>>(
                        n, std::vector<std::vector<BigRat>>(n, std::vector<BigRat>(n, 1))));
    }
};

// For every object quadruple the two rebracketing paths must agree:
//   A(x,y,z) A(w, xy, z) A(w,x,y z->yz)... spelled out,
//   A(x,y,z) * A(w, x*y, z) * A(w,x,y) == A(w*x, y, z) * A(w, x, y*z).
inline Report check_pentagon(const MonoidalAssocData& mad) {
    Report rep;
    const auto& m = mad.objects;
    for (std::size_t w = 0; w < m.size(); ++w)
        for (std::size_t x = 0; x < m.size(); ++x)
            for (std::size_t y = 0; y < m.size(); ++y)
                for (std::size_t z = 0; z < m.size(); ++z) {
                    BigRat lhs = mad.assoc[x][y][z] * mad.assoc[w][m.mul(x, y)][z] *
                                 mad.assoc[w][x][y];
                    BigRat rhs = mad.assoc[m.mul(w, x)][y][z] * mad.assoc[w][x][m.mul(y, z)];
                    if (lhs != rhs) {
                        rep.add("pentagon", false,
                                "quadruple (" + m.elems[w] + "," + m.elems[x] + "," + m.elems[y] +
                                    "," + m.elems[z] + "): " + RigValue::rat_str(lhs) + " vs " +
                                    RigValue::rat_str(rhs));
                        return rep;
                    }
                }
    rep.add("pentagon", true);
    return rep;
}

}  // namespace cobalt
