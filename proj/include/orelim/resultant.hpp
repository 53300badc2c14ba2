#pragma once

// Elimination of x2 through the Dieudonne determinant of the Sylvester-type
// matrix of left x2-shifts.

#include "orelim/bivar.hpp"
#include "orelim/skewdet.hpp"

namespace orelim {

struct SylvesterMatrix {
  OreMatrix inner;  // (n + m) x (n + m) over A[x1; sigma1]
  int n = 0;        // deg_{x2} f
  int m = 0;        // deg_{x2} g
};

/// Rows 1..m hold x2^(m-i) f, rows m+1..m+n hold x2^(n-i) g; column c holds
/// the coefficient of x2^(n+m-1-c).
SylvesterMatrix sylvester_matrix(const BivarOrePoly& f, const BivarOrePoly& g);

/// res_{x2}(f, g) as a DetResult over A[x1; sigma1].
DetResult res_x2_direct(const BivarOrePoly& f, const BivarOrePoly& g, PivotOptions opts = {});

/// m * max_i deg_{x1} a_i + n * max_j deg_{x1} b_j.
int sylvester_degree_bound(const BivarOrePoly& f, const BivarOrePoly& g);

}  // namespace orelim
