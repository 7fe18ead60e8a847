#include <stdexcept>

#include "vosa/constructions.hpp"

namespace vosa {

std::vector<Rational> solve_cocycle(const Rational& a1, const Rational& a2, int depth) {
  if (depth < 2) throw std::invalid_argument("cocycle depth must be at least 2");
  std::vector<Rational> a{a1, a2};
  for (int n = 2; n < depth; ++n) {
    Rational next = (Rational(n + 2) * a[n - 1] - Rational(2 * n + 1) * a1) / Rational(n - 1);
    next.canonicalize();
    a.push_back(next);
  }
  return a;
}

CocycleBasis cocycle_basis(int depth) {
  if (depth < 3) throw std::invalid_argument("cocycle depth must be at least 3");
  CocycleBasis out;
  out.depth = depth;
  out.basis = {solve_cocycle(1, 0, depth), solve_cocycle(0, 1, depth)};
  // A(n) = A(1) e1(n) + A(2) e2(n); n and n^3 have (A(1), A(2)) = (1, 2) and (1, 8).
  const auto lin = solve_cocycle(1, 2, depth), cub = solve_cocycle(1, 8, depth);
  out.spans_linear_cubic = true;
  for (int k = 0; k < depth; ++k) {
    const Rational n(k + 1);
    if (lin[k] != n || cub[k] != n * n * n) out.spans_linear_cubic = false;
    if (out.basis[0][k] * 1 + out.basis[1][k] * 2 != lin[k]) out.spans_linear_cubic = false;
  }
  // A(1) = 0 leaves the multiples of A(n) = (n^3 - n)/6, fixed by A(2) = 1.
  const auto pinned = solve_cocycle(0, 1, depth);
  out.pinned_is_cubic_minus_linear = true;
  for (int k = 0; k < depth; ++k) {
    const Rational n(k + 1);
    Rational want = (n * n * n - n) / 6;
    want.canonicalize();
    if (pinned[k] != want) out.pinned_is_cubic_minus_linear = false;
  }
  return out;
}

CheckResult verify_odd_cocycle(const Rational& c, HalfInt depth, OddCocycle C) {
  if (!C) C = [c](const Rational& s) {
    Rational v = c / 3 * (s * s - Rational(1, 4));
    v.canonicalize();
    return v;
  };
  CheckResult r;
  const int bound = depth.twice();
  for (int tr = -bound; tr <= bound; ++tr) {
    if (tr % 2 == 0) continue;
    for (int ts = -bound; ts <= bound; ++ts) {
      if (ts % 2 == 0) continue;
      const Rational rr(tr, 2), ss(ts, 2);
      const Rational n = -(rr + ss);
      Rational total = c / 6 * (n * n * n - n) + (ss - n / 2) * C(rr) + (rr - n / 2) * C(ss);
      total.canonicalize();
      ++r.checked;
      if (total != 0) r.fail("odd cocycle constraint fails at r = " + rr.get_str() + ", s = " + ss.get_str());
    }
  }
  return r;
}

}  // namespace vosa
