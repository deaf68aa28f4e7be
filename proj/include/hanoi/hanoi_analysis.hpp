#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hanoi/f2_linalg.hpp"
#include "hanoi/permgroup.hpp"
#include "hanoi/wreath_words.hpp"

namespace hanoi {

/// Deepest truncation build_quotient accepts (degree 3^6 = 729).
inline constexpr int kMaxQuotientDepth = 6;
/// Deepest truncation the default (non-slow) runs use.
inline constexpr int kDefaultDepthBudget = 4;

/// G_N = Gamma / Stab(N): the group generated by a, b, c acting on the 3^N
/// leaves of the truncated ternary tree.
struct TruncatedQuotient {
  int depth;
  PermGroup group;
  std::map<char, Permutation> generators;
};

/// Throws ResourceError beyond kMaxQuotientDepth.
TruncatedQuotient build_quotient(int depth);

enum class Provenance { stab, rist, derived, closure, custom };
std::string_view to_string(Provenance p);

struct SubgroupHandle {
  std::shared_ptr<const TruncatedQuotient> parent;
  PermGroup group;
  Provenance provenance;
  int level = -1;
};

/// Run-level memo of quotients and the subgroups derived from them. All
/// methods may be called concurrently.
class QuotientCache {
 public:
  std::shared_ptr<const TruncatedQuotient> quotient(int depth);
  /// Derived subgroup of G_depth (the image of the commutator subgroup).
  const PermGroup& derived(int depth);
  const SubgroupHandle& stab(int depth, int level);
  const SubgroupHandle& rist_image(int depth, int level);

 private:
  std::recursive_mutex mutex_;
  std::map<int, std::shared_ptr<const TruncatedQuotient>> quotients_;
  std::map<int, std::unique_ptr<PermGroup>> derived_;
  std::map<std::pair<int, int>, std::unique_ptr<SubgroupHandle>> stabs_;
  std::map<std::pair<int, int>, std::unique_ptr<SubgroupHandle>> rists_;
};

/// Level-n stabilizer of G_N: the kernel of the action on level n.
SubgroupHandle stab(const std::shared_ptr<const TruncatedQuotient>& q, int level);

/// Image of Rist(n) in G_N, generated by embedding the derived subgroup of
/// G_{N-n} below every level-n vertex. Requires 1 <= n < N.
SubgroupHandle rist_image(QuotientCache& cache, int depth, int level);

/// |Q_{n,N}| = [stab(G_N, n) : rist_image(G_N, n)], 1 <= n < N.
BigInt q_order(QuotientCache& cache, int depth, int level);

/// Embeds a permutation of the 3^(N-n) leaves below the level-n vertex with
/// 0-based index `block` into a permutation of degree 3^N.
Permutation embed_in_block(const Permutation& p, std::size_t block, std::size_t degree);

struct GF2Data {
  std::vector<F2Vector> vectors;  // images of acab, abac, bcba, babc
  F2Subspace stab1_image;         // U
  F2Subspace first_subtree;       // W
  F2Subspace derived_image;       // vectors whose subtree blocks sum to zero
  F2Subspace stab1_cap_derived;   // U ∩ derived_image
};

/// The (Z/2)^9 computation behind |Stab(1)/Rist(1)| and its commutator analogue.
GF2Data gf2_data();

struct HSubspace {
  F2Subspace space;
  std::vector<Word> stab2_generators;
  /// Whether the space equals span{alpha+beta, delta+gamma}.
  bool equals_stab1_cap_derived = false;
};

/// The image of Stab(2) in Stab(1)/Rist(1) inside (Z/2)^9. Stab(2) generator
/// words come from Reidemeister–Schreier inside <acab, abac, bcba, babc> with
/// cosets keyed by the depth-2 portrait; each word is re-checked to stabilize
/// level 2 at depth N >= 2.
HSubspace h_subspace(int depth);

struct KernelRow {
  int n = 0;
  BigInt q_next;                    // |Q_{n,n+1}|
  std::optional<BigInt> q_next2;    // |Q_{n,n+2}|
  std::optional<BigInt> q_next3;    // |Q_{n,n+3}| when the budget allows
  BigInt k;                         // |K_{n,n+1}|
  BigInt gamma;                     // |Gamma_n|
  BigInt gamma_next;                // |Gamma_{n+1}|
  BigInt h;                         // |H_{n,n+1}|
  bool q_stable = false;
  bool elementary_abelian_2 = false;
};

struct KernelReport {
  int n_max = 0;
  int depth_budget = 0;
  std::size_t dim_stab1_image = 0;
  std::size_t dim_stab1_cap_derived = 0;
  BigInt gamma1;
  BigInt k_base;
  std::vector<KernelRow> rows;
  std::size_t h12_dim = 0;
  std::vector<std::string> h12_basis;
  bool h12_equals_stab1_cap_derived = false;
  BigInt kernel_order;
  std::string kernel_type;
  bool pass = false;
  std::string first_failure;
};

/// Assembles |Gamma_n| from |Gamma_1| and |K| (GF(2) data) and |Q| (truncations).
/// Requires n_max >= 1 and depth_budget >= n_max + 2.
KernelReport kernel_report(QuotientCache& cache, int n_max, int depth_budget);

nlohmann::json to_json(const KernelReport& r);

struct LemmaReport {
  std::string id;
  int depth = 0;
  nlohmann::json computed;
  nlohmann::json expected;
  bool pass = false;
};

nlohmann::json to_json(const LemmaReport& r);

/// Identifiers accepted by verify_lemma, in report order.
const std::vector<std::string>& lemma_ids();
std::string_view lemma_statement(std::string_view id);
/// Whether the check builds truncated quotients (and so is bounded by
/// kMaxQuotientDepth) rather than working on portraits or GF(2) data only.
bool lemma_uses_quotients(std::string_view id);

/// Runs one check. Throws UsageError for an unknown id or a depth outside the
/// id's supported range.
LemmaReport verify_lemma(QuotientCache& cache, std::string_view id, int depth);

}  // namespace hanoi
