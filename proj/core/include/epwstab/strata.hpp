#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "epwstab/oneps.hpp"

namespace epws {

// The twelve Schubert-type loci cutting out the non-stable locus, each given by
// flag conditions relative to an ordered 6-frame. The "plus" variants are the
// deepened (unstable) versions of the same loci.
enum class StratumName { A, Av, C1, C2, D, E1, E2, E1v, E2v, F1, F2, N3 };

struct StratumId {
  StratumName name = StratumName::A;
  bool unstable = false;  // deepened variant
  std::string str() const;                      // e.g. "C1", "C1+"
  static StratumId parse(const std::string& s);
  bool operator==(const StratumId& o) const = default;
};

std::vector<StratumId> all_strata();  // 24 ids, nonstable first

// Diagonal 1-PS attached to the stratum's wide table row (standard frame).
OnePS stratum_lambda(StratumName name);
// Defining reduced type (entries at strictly positive weight levels).
std::vector<std::size_t> stratum_type(const StratumId& id);
// mu(d, lambda) for the stratum's 1-PS as printed in the table.
MuForm stratum_mu_form(StratumName name);

// Evaluates the stratum's flag conditions for A relative to the frame whose
// vectors are the columns of `basis` (must be invertible).
bool flag_condition_check(const Lagrangian& a, const QMatrix& basis,
                          const StratumId& id);

struct DestabCertificate {
  QMatrix basis;                          // 6x6, columns = frame vectors
  std::vector<long> weights;              // 1-PS diagonal in that frame
  std::vector<std::size_t> claimed_type;  // lower bound for the reduced type
  long mu = 0;                            // claimed mu(A, lambda)
};

enum class CertVerdict { StableExcluded, SemistableExcluded, Invalid };

// Recomputes mu and the type in the certificate's frame. mu > 0 excludes
// semistability, mu = 0 excludes stability; any mismatch with the claimed
// data (or mu < 0) makes the certificate invalid.
CertVerdict verify_certificate(const Lagrangian& a, const DestabCertificate& cert);

// One row of the covering tables: an ordering 1-PS, its printed mu form, and
// the conditions on the reduced type with the strata they map into.
struct ScanRow {
  std::vector<long> lambda;
  MuForm printed_mu;
  struct Cover {
    std::function<bool(const std::vector<std::size_t>&)> cond;
    std::vector<StratumId> strata;
  };
  std::vector<Cover> covers;
};
const std::vector<ScanRow>& scan_rows();  // the 38 printed rows

struct ScanEntry {
  std::vector<long> lambda;
  long mu = 0;
  std::vector<std::size_t> type;  // reduced type of A for this 1-PS
  // strata named by the covers matching the type, with the flag predicate
  // evaluated in the given frame
  std::vector<std::pair<StratumId, bool>> matched;
};

// For every covering-table 1-PS (diagonal in the frame `basis`): mu(A, lambda)
// and, when mu >= 0, the strata named by the matching covers.
std::vector<ScanEntry> table_scan(const Lagrangian& a, const QMatrix& basis);

// Stratum paired with `id` under duality, and whether the dual flag must be
// read in reversed order (see the module notes in strata.cpp).
std::pair<StratumId, bool> dual_stratum(const StratumId& id);

// True iff delta_V(A) satisfies the paired stratum's flag conditions in the
// appropriate dual frame; A is expected to lie in stratum `id` for the
// standard frame.
bool strata_duality_probe(const Lagrangian& a, const StratumId& id);

// Pseudo-random lambda-split member of the stratum of its defining type:
// random subspaces of the positive levels, mirrored negative levels, middle
// factor a random lagrangian of the zero level. Deterministic per seed.
Lagrangian split_stratum_sampler(const StratumId& id, std::uint64_t seed);

}  // namespace epws
