#ifndef CLOSURELAB_RATIONALITY_HPP
#define CLOSURELAB_RATIONALITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closurelab/closure.hpp"

namespace closurelab {

/// True iff |elems| equals dim R and the ideal they generate has dimension 0.
/// Rejects zero-dimensional rings (an empty sop is trivially valid there and
/// reported separately by callers).
bool isSystemOfParameters(const std::vector<Polynomial>& elems, const QuotientRingPtr& R);

/// Decision record for "is one parameter ideal cl-closed". closed = true iff
/// the closure ideal equals the parameter ideal.
struct RationalityVerdict {
  std::string ring;
  std::string spec;
  std::vector<std::string> sop;
  bool closed = false;
  std::vector<std::string> closureGenerators;
  std::optional<std::string> witness; // element of I^cl not in I, when open
  // Independently re-verified witness memberships (the certificate).
  std::optional<bool> witnessInClosure;
  std::optional<bool> witnessInIdeal;
  std::vector<std::string> assumptionNotes;
};

/// cl_B-rationality via the parameter-ideal test on one sop. B is taken to be
/// Cohen-Macaulay on trust; a note records the assumption.
RationalityVerdict isClRational(const QuotientRingPtr& R, const ClosureSpec& spec,
                                const std::vector<Polynomial>& sop);

/// Default bound for power-family evidence: covers the socle-degree behavior
/// of the bundled desk-scale examples.
inline constexpr int kDefaultPowerFamilyTmax = 4;

/// Closedness of (x_1^t,...,x_d^t) for t = 1..tMax: finite evidence, not a
/// proof, for the all-t statement.
std::vector<std::pair<int, bool>> checkPowerFamilyClosed(const QuotientRingPtr& R,
                                                         const ClosureSpec& spec,
                                                         const std::vector<Polynomial>& sop,
                                                         int tMax);

/// Intersection over the sample of (I : I^cl): a finite over-approximation of
/// the finitistic test ideal. Rejects an empty sample.
QuotientIdeal finitisticTestIdealSample(const QuotientRingPtr& R, const ClosureSpec& spec,
                                        const std::vector<QuotientIdeal>& ideals);

} // namespace closurelab

#endif
