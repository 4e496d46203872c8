#ifndef CLOSURELAB_CLOSURE_HPP
#define CLOSURELAB_CLOSURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closurelab/module.hpp"

namespace closurelab {

/// Which closure operation to run: the trivial closure, or the module
/// closure cl_B with B given as an R-ideal or as a presented module.
class ClosureSpec {
public:
  enum class Kind { Trivial, ModuleClosureIdeal, ModuleClosurePresented };

  static ClosureSpec trivial();
  static ClosureSpec moduleClosureIdeal(QuotientIdeal B, std::string name = "");
  static ClosureSpec moduleClosurePresented(PresentedModule B, std::string name = "");

  Kind kind() const { return kind_; }
  const QuotientIdeal& idealB() const;
  const PresentedModule& presentedB() const;
  /// Ring of B; nullptr for the trivial closure.
  QuotientRingPtr ring() const;

  /// Display name ("trivial", "cl_M1", or a derived description).
  std::string description() const;

  /// The same closure re-based over another quotient ring of the same
  /// ambient ring (image ideal, resp. same presentation matrix).
  ClosureSpec over(const QuotientRingPtr& S) const;

private:
  ClosureSpec(Kind kind, std::optional<QuotientIdeal> idealB,
              std::optional<PresentedModule> presentedB, std::string name)
      : kind_(kind), idealB_(std::move(idealB)), presentedB_(std::move(presentedB)),
        name_(std::move(name)) {}
  Kind kind_;
  std::optional<QuotientIdeal> idealB_;
  std::optional<PresentedModule> presentedB_;
  std::string name_;
};

/// I^cl. Trivial: I. Ideal-valued B: (I*B :_R B). Presented B = coker(P) of
/// rank r: the intersection over j of ((I*R^r + colspan P) : e_j).
/// Rejects a zero B. The result always contains I.
QuotientIdeal closureOfIdeal(const QuotientIdeal& I, const ClosureSpec& spec);

bool isIdealClosed(const QuotientIdeal& I, const ClosureSpec& spec);

/// Outcome of one executable property check. A fail verdict always carries a
/// witness that independently re-verifies.
struct CheckReport {
  std::string property;
  std::string ring;
  std::string spec;
  std::string instance;
  bool pass = true;
  std::optional<std::string> witness;
};

/// Element of `sub` not contained in `super`: the minimal-degree violating
/// monomial when one exists, else the first violating reduced generator.
/// nullopt when sub is contained in super.
std::optional<Polynomial> firstViolation(const QuotientIdeal& sub, const QuotientIdeal& super);

CheckReport checkExtension(const ClosureSpec& spec, const std::vector<QuotientIdeal>& samples);
CheckReport checkIdempotence(const ClosureSpec& spec, const std::vector<QuotientIdeal>& samples);
/// Samples are nested pairs (I, I') with I contained in I'; anything else is
/// rejected as a malformed sample.
CheckReport checkOrderPreservation(const ClosureSpec& spec,
                                   const std::vector<std::pair<QuotientIdeal, QuotientIdeal>>& samplePairs);

/// Compares the closure of I in R with the pulled-back closure of I/J
/// computed in R/J (B reduced along: image ideal, resp. same matrix).
CheckReport checkResiduality(const ClosureSpec& spec, const QuotientIdeal& I,
                             const QuotientIdeal& J);

/// (x_1..x_k) : x_{k+1}  vs  (x_1..x_k)^cl.
CheckReport checkColonCapturing(const QuotientRingPtr& R, const ClosureSpec& spec,
                                const std::vector<Polynomial>& sop, int k);
/// (x_1^t, x_2..x_k) : x_1^a  vs  (x_1^{t-a}, x_2..x_k)^cl, 0 <= a < t.
CheckReport checkStrongCCA(const QuotientRingPtr& R, const ClosureSpec& spec,
                           const std::vector<Polynomial>& sop, int k, int t, int a);
/// (x_1..x_k)^cl : x_{k+1}  vs  (x_1..x_k)^cl.
CheckReport checkStrongCCB(const QuotientRingPtr& R, const ClosureSpec& spec,
                           const std::vector<Polynomial>& sop, int k);

} // namespace closurelab

#endif
