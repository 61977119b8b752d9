#pragma once

#include "hodgekit/actions.hpp"
#include "hodgekit/cohomology.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace hodgekit {

/// Basic (transverse) cohomology of a Vaisman manifold of complex dimension n,
/// living on the (n-1)x(n-1) grid, with the Lefschetz operator of omega0.
struct BasicCohomology {
  std::string name;
  int n = 0;
  /// Basis labels per slot; the slot dimension is the label count.
  std::map<Bidegree, std::vector<std::string>> classes;
  GradedOperator lefschetz{{1, 1}, Parity::even};

  std::size_t dim(Bidegree b) const;
  BigradedSpace space() const;
  /// omega0 = L(1) in H_B^{1,1}.
  Vector omega0() const;
};

/// Sets n and dims, labelling classes "h(p,q)_k". Lefschetz starts at zero.
BasicCohomology make_basic(std::string name, int n, const std::map<Bidegree, int>& dims);

/// Throws InvalidModel: n < 2, slot outside 0..n-1, dim H^{0,0} != 1, bad Lefschetz shapes.
void validate_basic(const BasicCohomology& basic);

/// Basic cohomology of the Hopf manifold of dimension n: that of CP^{n-1}.
BasicCohomology hopf_basic(int n);

/// Transverse hard-Lefschetz flags on H_B: L : H^k -> H^{k+2} injective for
/// k <= n-2 and surjective for k >= n-2.
struct TransverseLefschetz {
  std::map<int, bool> injective;
  std::map<int, bool> surjective;
  bool holds = true;
};

TransverseLefschetz transverse_lefschetz(const BasicCohomology& basic);

/// Index ranges of the four summands of an invariant-model slot (p,q):
/// H_B^{p,q} | theta01 H_B^{p,q-1} | theta10 H_B^{p-1,q} | theta10 theta01 H_B^{p-1,q-1}.
struct SlotLayout {
  std::size_t basic = 0, t01 = 0, t10 = 0, t10t01 = 0;
  std::size_t off_t01() const { return basic; }
  std::size_t off_t10() const { return basic + t01; }
  std::size_t off_t10t01() const { return basic + t01 + t10; }
  std::size_t size() const { return basic + t01 + t10 + t10t01; }
};

SlotLayout slot_layout(const BasicCohomology& basic, Bidegree b);

struct VaismanModel {
  BasicCohomology basic;
  Bicomplex complex;
  bool full = false;
  bool rational_normalization = false;
  std::string theta10 = "theta10";
  std::string theta01 = "theta01";
};

/// Invariant forms H_B (x) Lambda[theta10, theta01] with delbar theta10 = i omega0
/// (omega0 with rational_normalization, allowed only when !full). `full` adds del with
/// del theta01 = -i omega0, making theta = theta10 + theta01 closed.
VaismanModel build_invariant_model(const BasicCohomology& basic, bool full, bool rational_normalization = false);

/// dim slot(p,q) = h_B^{p,q} + h_B^{p,q-1} + h_B^{p-1,q} + h_B^{p-1,q-1} on every slot.
bool slot_dimension_identity(const VaismanModel& model);

/// Closedness of the Lee form and d(J theta) = c omega0 on a full model.
struct ThetaCheck {
  bool d_theta_zero = false;
  bool d_theta_c_proportional = false;
  GaussianRational factor;  // d(J theta) = factor * omega0
};

ThetaCheck theta_check(const VaismanModel& model);

/// Contraction with the Lee field: iota theta10 = c, iota theta01 = conj(c), basic classes to 0.
Contraction lee_contraction(const VaismanModel& model, const GaussianRational& c = GaussianRational::fraction(1, 2));

/// Mapping cone of f = (unit) L_omega0 on Lambda_{B,theta01} = H_B + theta01 H_B,
/// with the short exact sequence 0 -> sub -> cone -> sub[1] -> 0.
struct ConeData {
  Bicomplex sub;
  GradedOperator f{{1, 1}, Parity::even};
  Bicomplex cone;
  /// sub(p,q) -> cone(p,q).
  GradedOperator inclusion{{0, 0}, Parity::even};
  /// cone(p,q) -> sub(p-1,q): the theta10 coefficient.
  GradedOperator projection{{-1, 0}, Parity::even};
  /// Connecting map H^{s}(sub) -> H^{s+(1,1)}(sub) keyed by source slot s,
  /// in the canonical coset bases of dolbeault(sub).
  std::map<Bidegree, ExactMatrix> connecting;
};

/// Mapping cone of f on a delbar-only complex (K = L = sub): slot (p,q) of the
/// cone is sub(p,q) + sub(p-1,q), differential (x, y) -> (delbar x + f y, -delbar y).
ConeData build_mapping_cone(const Bicomplex& sub, const GradedOperator& f, int n);
/// As above, naming the shifted basis vectors with `shifted_label` (default "s(x)").
ConeData build_mapping_cone(const Bicomplex& sub, const GradedOperator& f, int n,
                            const std::function<std::string(const std::string&)>& shifted_label);

ConeData build_cone(const BasicCohomology& basic);

struct LesNode {
  std::string name;  // e.g. "H_B,t01^{1,1}"
  std::size_t dim = 0;
  std::size_t rank_in = 0;
  std::size_t rank_out = 0;
  bool exact = false;
};

struct ConeLesReport {
  bool exact = true;
  std::vector<LesNode> nodes;
  /// h^{p,q} = dim coker(delta into (p,q)) + dim ker(delta out of (p-1,q)).
  std::map<Bidegree, std::size_t> les_dims;
  /// Direct Dolbeault dimensions of the invariant model.
  std::map<Bidegree, std::size_t> direct_dims;
};

/// Long exact sequence ... -> H_Bt^{p-1,q-1} -> H_Bt^{p,q} -> H^{p,q}(M) -> H_Bt^{p-1,q} -> H_Bt^{p,q+1} -> ...
/// checked at every node against the Dolbeault cohomology of the invariant
/// model. Throws InternalError on an exactness failure.
ConeLesReport verify_cone_les(const BasicCohomology& basic);

/// The conditions under which the closed formula agrees with the sequence:
/// L injective on H_Bt^{p-1,q} when p+q <= n, surjective onto H_Bt^{p,q} when p+q > n.
struct FormulaConditions {
  bool holds = true;
  std::vector<std::string> failures;
};

FormulaConditions formula_conditions(const BasicCohomology& basic);

enum class FormulaIndexing { corrected, printed };

/// Closed-form h^{p,q}: coker of L into H_Bt^{p,q} when p+q <= n, otherwise
/// ker of L on H_Bt^{p-1,q} (corrected) or on H_Bt^{p,q} (printed).
/// Throws InvalidModel when formula_conditions fails.
std::size_t theorem_formula(const BasicCohomology& basic, int p, int q,
                            FormulaIndexing indexing = FormulaIndexing::corrected);

struct CrosscheckReport {
  std::map<Bidegree, std::size_t> direct, les, formula, printed;
  bool formula_applicable = true;
  std::vector<std::string> mismatches;
  /// Slots where the printed indexing differs from the corrected one.
  std::vector<std::string> printed_diffs;
  bool agree() const { return mismatches.empty(); }
};

CrosscheckReport crosscheck(const BasicCohomology& basic);

}  // namespace hodgekit
