#pragma once

#include "hodgekit/bicomplex.hpp"
#include "hodgekit/subspace.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace hodgekit {

enum class Flavor {
  dolbeault,
  anti_dolbeault,
  derham,
  bott_chern,
  aeppli,
  A,
  B,
  C,
  /// ker(del delbar) / (ker delbar + im del): the cokernel of H_delbar -> H_A.
  C_cokernel,
};

std::string to_string(Flavor f);

/// Dimensions and canonical coset representatives of one cohomology flavor.
/// Bigraded flavors fill `slots`; de Rham fills `degrees`.
struct CohomologyTable {
  Flavor flavor = Flavor::dolbeault;
  std::map<Bidegree, Quotient> slots;
  std::map<int, Quotient> degrees;

  bool is_total() const { return flavor == Flavor::derham; }
  std::size_t dim(Bidegree b) const;
  std::size_t dim(int k) const;
  /// "p,q" -> dim (or "k" -> dim for de Rham), zero entries included.
  std::map<std::string, std::size_t> dims() const;
  std::size_t total() const;
};

/// Kernels and images of del, delbar and del delbar around one slot.
struct SlotSubspaces {
  Subspace ker_del, ker_delbar, ker_deldelbar;
  Subspace im_del, im_delbar, im_deldelbar;  // images landing in the slot
};

SlotSubspaces slot_subspaces(const Bicomplex& b, Bidegree slot);

CohomologyTable dolbeault(const Bicomplex& b);
CohomologyTable anti_dolbeault(const Bicomplex& b);
CohomologyTable derham(const Bicomplex& b);
CohomologyTable bott_chern(const Bicomplex& b);
CohomologyTable aeppli(const Bicomplex& b);

struct AbcGroups {
  CohomologyTable A, B, C;
  CohomologyTable C_cokernel;
};

/// A, B and C as defined alongside the five-term sequence, plus the cokernel
/// term that actually closes the sequence. C equals the Aeppli table
/// slot by slot; a mismatch throws InternalError.
AbcGroups abc_groups(const Bicomplex& b);

/// Exactness at a node V of U -in-> V -out-> W (dims of V given).
bool exact_at(const ExactMatrix& in, const ExactMatrix& out, std::size_t dim);

struct FiveTermSlot {
  Bidegree slot;
  /// A, B, H_delbar, H_A, C_cokernel.
  std::array<std::size_t, 5> dims{};
  /// Ranks of A->B, B->H, H->H_A, H_A->C.
  std::array<std::size_t, 4> ranks{};
  bool exact = false;
  /// Whether 0 -> A -> B -> H -> H_A -> C -> 0 would be exact with C = Aeppli.
  bool exact_with_printed_c = false;
};

struct FiveTermReport {
  bool exact = true;
  std::vector<FiveTermSlot> slots;
  std::string summary() const;
};

/// 0 -> A -> B -> H_delbar -> H_A -> C -> 0 per slot, maps induced by the
/// identity. Throws InternalError if a map is ill-defined or exactness fails:
/// the sequence is exact for every bicomplex.
FiveTermReport verify_five_term(const Bicomplex& b);

struct FrolicherRow {
  int k = 0;
  std::size_t betti = 0;
  std::size_t hodge_sum = 0;
  std::size_t slack() const { return hodge_sum - betti; }
};

struct FrolicherReport {
  std::vector<FrolicherRow> rows;
  bool equality_everywhere() const;
};

/// Throws InternalError if b_k > sum h^{p,q} for some k.
FrolicherReport frolicher_check(const Bicomplex& b);

struct DualityPair {
  Bidegree bc_slot;
  std::size_t bc_dim = 0;
  std::size_t aeppli_dim = 0;
  bool matched() const { return bc_dim == aeppli_dim; }
};

struct DualityReport {
  int n = 0;
  std::vector<DualityPair> pairs;
  std::vector<std::string> warnings;
  bool matched() const { return warnings.empty(); }
};

/// Compares dim H_BC^{p,q} with dim H_A^{n-p,n-q}; mismatches are warnings.
DualityReport duality_report(const Bicomplex& b, int n);

struct NaturalMap {
  std::string name;
  std::string source_key;
  std::string target_key;
  ExactMatrix matrix;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t cokernel_dim = 0;
  bool is_iso() const { return kernel_dim == 0 && cokernel_dim == 0; }
};

/// H_BC -> H_del, H_BC -> H_delbar, H_BC -> H_dR, H_del -> H_A,
/// H_delbar -> H_A, H_dR -> H_A. A class of bidegree (p,q) maps to total
/// degree p+q; de Rham classes map to their (p,q) components.
std::vector<NaturalMap> natural_maps(const Bicomplex& b);

/// sum_k (-1)^k dim C^k.
long euler_characteristic(const BigradedSpace& space);
long euler_characteristic(const CohomologyTable& derham_table);

}  // namespace hodgekit
