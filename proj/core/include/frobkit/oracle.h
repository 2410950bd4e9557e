// Copyright 2026 The frobkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// General-purpose Frobenius machinery for arbitrary generator sets. These
// routines never use a closed form; they are the ground truth the closed
// forms and the triple construction are checked against.

#ifndef FROBKIT_ORACLE_H_
#define FROBKIT_ORACLE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "frobkit/closed_forms.h"
#include "frobkit/domain.h"
#include "frobkit/integer.h"

namespace frobkit {

inline constexpr std::size_t kDefaultTableBudget = std::size_t{1} << 28;

struct OracleOptions {
  // Largest table (in entries) any single call may allocate.
  std::size_t max_table_entries = kDefaultTableBudget;
};

// Reachability table over [0, limit]: entry i is set iff i is a nonnegative
// combination of the generators. Throws kBudgetExceeded when limit + 1
// exceeds options.max_table_entries.
class ReachabilityTable {
 public:
  ReachabilityTable(const GeneratorSet& g, Int limit,
                    const OracleOptions& options = OracleOptions());

  Int limit() const { return static_cast<Int>(reach_.size()) - 1; }

  // Requires 0 <= n <= limit().
  bool contains(Int n) const;

 private:
  std::vector<char> reach_;
};

bool IsRepresentableDp(Int n, const GeneratorSet& g,
                       const OracleOptions& options = OracleOptions());

// Least-index-first witness for n, or std::nullopt.
std::optional<Representation> FindRepresentationDp(
    Int n, const GeneratorSet& g, const OracleOptions& options = OracleOptions());

// Upper bound on the Frobenius number used to size the scan: the least
// Sylvester value over coprime generator pairs, else Schur's bound
// (min - 1)(max - 1) - 1.
Int FrobeniusScanBound(const GeneratorSet& g);

// Largest gap, certified by a run of min(gens) consecutive representable
// integers directly above it.
FrobeniusValue FrobeniusDp(const GeneratorSet& g,
                           const OracleOptions& options = OracleOptions());

struct AperySet {
  Int modulus = 0;
  std::vector<Int> elems;  // elems[i]: least semigroup element = i mod modulus

  Int frobenius() const;
};

// Throws kInvalidArgument when modulus is not one of the generators.
AperySet ComputeAperySet(const GeneratorSet& g, Int modulus,
                         const OracleOptions& options = OracleOptions());

// Round-robin residue relaxation modulo the smallest generator. Cost does not
// depend on the magnitude of the Frobenius number.
FrobeniusValue FrobeniusRoundRobin(const GeneratorSet& g);

// Number of coefficient vectors representing n.
Int Denumerant(Int n, const GeneratorSet& g,
               const OracleOptions& options = OracleOptions());

// All non-representable nonnegative integers, ascending.
std::vector<Int> Gaps(const GeneratorSet& g,
                      const OracleOptions& options = OracleOptions());

}  // namespace frobkit

#endif  // FROBKIT_ORACLE_H_
