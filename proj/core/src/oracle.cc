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

#include "frobkit/oracle.h"

#include <algorithm>
#include <cstdint>

namespace frobkit {

namespace {

// Number of entries for a table over [0, limit], or kBudgetExceeded.
std::size_t TableEntries(Int limit, const OracleOptions& options) {
  if (limit < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative table limit");
  }
  const Int entries = CheckedAdd(limit, 1);
  if (entries > static_cast<Int>(options.max_table_entries)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "table of " + ToString(entries) + " entries exceeds budget " +
                    std::to_string(options.max_table_entries));
  }
  return static_cast<std::size_t>(entries);
}

std::vector<std::size_t> SmallGenerators(const GeneratorSet& g,
                                         std::size_t entries) {
  std::vector<std::size_t> out;
  for (Int v : g.gens()) {
    if (v < static_cast<Int>(entries)) out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

void RequireNonNegative(Int n) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "target " + ToString(n) + " is negative");
  }
}

}  // namespace

ReachabilityTable::ReachabilityTable(const GeneratorSet& g, Int limit,
                                     const OracleOptions& options) {
  const std::size_t entries = TableEntries(limit, options);
  const std::vector<std::size_t> gens = SmallGenerators(g, entries);
  reach_.assign(entries, 0);
  reach_[0] = 1;
  for (std::size_t i = 1; i < entries; ++i) {
    for (std::size_t v : gens) {
      if (v > i) break;
      if (reach_[i - v]) {
        reach_[i] = 1;
        break;
      }
    }
  }
}

bool ReachabilityTable::contains(Int n) const {
  if (n < 0 || n > limit()) {
    throw Error(ErrorCode::kInvalidArgument,
                "query " + ToString(n) + " outside table range");
  }
  return reach_[static_cast<std::size_t>(n)] != 0;
}

bool IsRepresentableDp(Int n, const GeneratorSet& g,
                       const OracleOptions& options) {
  RequireNonNegative(n);
  if (n == 0) return true;
  return ReachabilityTable(g, n, options).contains(n);
}

std::optional<Representation> FindRepresentationDp(
    Int n, const GeneratorSet& g, const OracleOptions& options) {
  RequireNonNegative(n);
  const std::size_t entries = TableEntries(n, options);
  const std::vector<std::size_t> gens = SmallGenerators(g, entries);
  // via[i]: index of the generator used last to reach i, or -1.
  std::vector<std::int32_t> via(entries, -1);
  for (std::size_t i = 1; i < entries; ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (gens[j] > i) break;
      const std::size_t prev = i - gens[j];
      if (prev == 0 || via[prev] >= 0) {
        via[i] = static_cast<std::int32_t>(j);
        break;
      }
    }
  }
  const std::size_t target = entries - 1;
  if (target != 0 && via[target] < 0) return std::nullopt;

  Representation rep;
  rep.coeffs.assign(g.size(), 0);
  for (std::size_t i = target; i != 0; i -= gens[via[i]]) {
    rep.coeffs[via[i]] += 1;
  }
  return rep;
}

Int FrobeniusScanBound(const GeneratorSet& g) {
  const std::span<const Int> gens = g.gens();
  std::optional<Int> best;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (Gcd(gens[i], gens[j]) != 1) continue;
      const Int value = SylvesterFrobenius(gens[i], gens[j]).value;
      if (!best || value < *best) best = value;
    }
  }
  if (best) return *best;
  return CheckedSub(CheckedMul(g.min() - 1, g.max() - 1), 1);
}

FrobeniusValue FrobeniusDp(const GeneratorSet& g,
                           const OracleOptions& options) {
  if (g.contains_one()) return {-1};
  const Int bound = FrobeniusScanBound(g);
  const std::size_t entries =
      TableEntries(CheckedAdd(bound, g.min()), options);
  const std::vector<std::size_t> gens = SmallGenerators(g, entries);
  const auto run_needed = static_cast<std::size_t>(g.min());

  std::vector<char> reach(entries, 0);
  reach[0] = 1;
  std::size_t run = 1;
  for (std::size_t i = 1; i < entries; ++i) {
    for (std::size_t v : gens) {
      if (v > i) break;
      if (reach[i - v]) {
        reach[i] = 1;
        break;
      }
    }
    run = reach[i] ? run + 1 : 0;
    // min(gens) consecutive members: everything above is reachable by
    // adding the smallest generator, and i - run is the last gap.
    if (run == run_needed) {
      return {static_cast<Int>(i) - static_cast<Int>(run_needed)};
    }
  }
  throw Error(ErrorCode::kInternal,
              "no certificate run found below scan bound " + ToString(bound));
}

Int AperySet::frobenius() const {
  return *std::max_element(elems.begin(), elems.end()) - modulus;
}

AperySet ComputeAperySet(const GeneratorSet& g, Int modulus,
                         const OracleOptions& options) {
  const std::span<const Int> gens = g.gens();
  if (std::find(gens.begin(), gens.end(), modulus) == gens.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "modulus " + ToString(modulus) + " is not a generator");
  }
  AperySet out;
  out.modulus = modulus;
  const Int frobenius = FrobeniusDp(g, options).value;
  // Every residue class has a member in (frobenius, frobenius + modulus].
  const ReachabilityTable table(g, CheckedAdd(frobenius, modulus), options);
  const auto classes = static_cast<std::size_t>(modulus);
  out.elems.assign(classes, -1);
  std::size_t filled = 0;
  for (Int v = 0; v <= table.limit() && filled < classes; ++v) {
    if (!table.contains(v)) continue;
    Int& slot = out.elems[static_cast<std::size_t>(v % modulus)];
    if (slot < 0) {
      slot = v;
      ++filled;
    }
  }
  if (filled != classes) {
    throw Error(ErrorCode::kInternal, "residue class without a member");
  }
  return out;
}

FrobeniusValue FrobeniusRoundRobin(const GeneratorSet& g) {
  const Int base = g.min();
  if (base == 1) return {-1};
  const std::span<const Int> gens = g.gens();
  const auto classes = static_cast<std::size_t>(base);
  // least[r]: least known semigroup element congruent to r, -1 if none yet.
  std::vector<Int> least(classes, -1);
  least[0] = 0;

  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 1; k < gens.size(); ++k) {
      const Int step = gens[k];
      const Int d = Gcd(base, step);
      const auto cycle = static_cast<std::size_t>(base / d);
      // Residues r, r + step, r + 2 step, ... (mod base) form a cycle of
      // length base / d through the class r mod d. Start the relaxation at
      // the cycle's least element and go round once.
      for (Int r = 0; r < d; ++r) {
        Int current = -1;
        for (Int q = r; q < base; q += d) {
          const Int v = least[static_cast<std::size_t>(q)];
          if (v >= 0 && (current < 0 || v < current)) current = v;
        }
        if (current < 0) continue;
        for (std::size_t i = 0; i < cycle; ++i) {
          current = CheckedAdd(current, step);
          Int& slot = least[static_cast<std::size_t>(current % base)];
          if (slot >= 0 && slot <= current) {
            current = slot;
          } else {
            slot = current;
            changed = true;
          }
        }
      }
    }
  }
  const Int top = *std::max_element(least.begin(), least.end());
  if (*std::min_element(least.begin(), least.end()) < 0) {
    throw Error(ErrorCode::kInternal, "unreached residue class");
  }
  return {top - base};
}

Int Denumerant(Int n, const GeneratorSet& g, const OracleOptions& options) {
  RequireNonNegative(n);
  const std::size_t entries = TableEntries(n, options);
  std::vector<Int> ways(entries, 0);
  ways[0] = 1;
  for (std::size_t v : SmallGenerators(g, entries)) {
    for (std::size_t i = v; i < entries; ++i) {
      ways[i] = CheckedAdd(ways[i], ways[i - v]);
    }
  }
  return ways.back();
}

std::vector<Int> Gaps(const GeneratorSet& g, const OracleOptions& options) {
  const Int frobenius = FrobeniusDp(g, options).value;
  std::vector<Int> out;
  if (frobenius < 0) return out;
  const ReachabilityTable table(g, frobenius, options);
  for (Int v = 1; v <= frobenius; ++v) {
    if (!table.contains(v)) out.push_back(v);
  }
  return out;
}

}  // namespace frobkit
