#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "piblocks/corpus.hpp"
#include "piblocks/properties.hpp"
#include "piblocks/workspace.hpp"

namespace piblocks {

/// Per-block analysis: separability header line, then one line per pi-block
/// with members (as degrees), k(B), defect data and the Theorem B verdict
/// for k <= 3. Non-separable pairs get the block partition only.
std::string analyze_entry(Workspace& ws, const CorpusEntry& entry, const PrimeSet& pi);

/// Exact table dump: `#` header lines, then one line per character carrying
/// the degree and each value as a coefficient tuple.
std::string table_dump(Workspace& ws, const CorpusEntry& entry);

struct VerifySummary {
  long long entries = 0;
  long long pi_runs = 0;
  long long checks = 0;
  long long failures = 0;
  std::string report;

  int exit_code() const { return failures == 0 ? 0 : 1; }
};

/// Runs the property battery and Theorem B checks for every entry of order
/// at most max_order, over every subset of primes(|G|) extended by one
/// extraneous prime, in lexicographic subset order. Deterministic output.
VerifySummary verify_corpus(const std::vector<CorpusEntry>& entries, long long max_order);

/// Subsets of primes(n) plus the smallest prime not dividing n, as sorted
/// tuples in lexicographic order.
std::vector<PrimeSet> pi_subsets_for_order(long long n);

}  // namespace piblocks
