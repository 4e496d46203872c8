#ifndef CLOSURELAB_REPRODUCE_HPP
#define CLOSURELAB_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "closurelab/veronese.hpp"

namespace closurelab {

/// Parameters for the named worked examples. `phi`/`g` configure the
/// matrix-factorization instance (entries given as polynomial text in x, y).
struct ReproduceParams {
  std::optional<int> n;
  bool nIsInfinity = false;
  std::optional<int> i;
  std::optional<int> d;
  std::optional<int> tMax;
  std::optional<std::vector<std::vector<std::string>>> phi;
  std::optional<std::string> g;
  std::uint32_t characteristic = 32003;
};

struct ReproductionBundle {
  std::string name;
  std::string params;
  std::vector<CheckReport> reports;
  std::vector<RationalityVerdict> verdicts;
  std::vector<std::string> assumptions;
  bool pass = true;
};

/// Runs the named worked example end to end and reports whether the expected
/// conclusions are reproduced. Names: x2y, y2, xn_y2, ade.
///  - x2y:    k[x,y]/(x^2*y), sop (x+y), closures by coker[y] and coker[x^2].
///  - y2:     k[x,y]/(y^2), B = (x^n, y) (n = infinity reads B = (y) behind an
///            explicit interpretation flag), sop (x).
///  - xn_y2:  k[x,y]/(x^n+y^2) for odd n, B = (x^i, y), sop (x).
///  - ade:    k[x,y,z]/(z^2+g), B = coker(z*Id - phi) with phi^2 = -g*Id and
///            phi entries in (x,y); sop (x, y).
ReproductionBundle reproduceHypersurfaceExample(const std::string& name,
                                                const ReproduceParams& params);

/// Veronese sweep i = 0..d-1; passes iff closed == (i <= d-2) (for d = 1 the
/// single module M_0 = R gives the trivial closure, so closed is expected).
/// With tMax set, each index also reports power-family evidence: closedness
/// of (x^{d t}, y^{d t}) for t = 1..tMax.
ReproductionBundle reproduceVeronese(int d, std::optional<int> tMax = std::nullopt);

/// Every bundled reproduction at its default parameters.
std::vector<ReproductionBundle> reproduceAll(std::uint32_t characteristic = 32003);

} // namespace closurelab

#endif
