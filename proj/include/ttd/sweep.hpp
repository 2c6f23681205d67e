#pragma once

#include <string>

#include "ttd/duality.hpp"

namespace ttd {

// Corpus sweep: run the two-sided duality check for every family and every
// order 1..kmax, plus the width inequality chains, over either every
// connected graph with at most max_n vertices (one per isomorphism class) or
// the entries of a JSON manifest.  Entries are processed concurrently; the
// report lists them in canonical (input) order, so output is deterministic.
struct SweepOptions {
  int max_n = 5;  // corpus mode bound; the full-duality sweep allows at most 8
  int kmax = 4;
  UncrossMode mode = UncrossMode::lean;
  int sample = 0;     // 0 = whole corpus, else sample this many entries
  unsigned seed = 1;  // sampling seed
  int threads = 0;    // 0 = hardware concurrency

  // When nonempty, the manifest replaces the generated corpus:
  //   {"schema":"1","entries":[{"graph":{"n":..,"edges":[[u,v],..]},
  //                             "expect":{"tw":..,"brw":..,"pw":..,"bw":..}},..]}
  // All "expect" fields are optional; present ones are compared against the
  // computed widths and mismatches are reported with both values.
  std::string manifest;
};

// JSON report: {"schema":"1", summary fields, "rows":[one object per entry]}.
// A row carries the graph, its widths, the duality side per (k, family), and
// any violations; "failures" counts rows that did not pass.  A malformed
// manifest raises ParseError.
std::string corpus_sweep_json(const SweepOptions& opt);

// The same sweep, one CSV line per entry.
std::string corpus_sweep_csv(const SweepOptions& opt);

}  // namespace ttd
