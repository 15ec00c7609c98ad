#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "domcycle/multigraph.hpp"

namespace domcycle {

/// Facts an entry asserts about its graph. Nothing here is trusted:
/// verify_claims re-derives each one.
struct CorpusClaims {
  std::optional<int> regularity;
  std::optional<int> vertex_connectivity_at_least;
  /// λ_c >= k, or no two disjoint cycles at all (K4, K3,3).
  std::optional<int> cyclic_at_least;
  std::optional<int> cyclic_exactly;
  bool no_two_disjoint_cycles = false;
};

struct CorpusEntry {
  std::string id;
  Multigraph graph;
  CorpusClaims claims;
  std::string source;
};

struct Corpus {
  std::string name;
  std::vector<CorpusEntry> entries;
};

/// CUBIC_C4, FOURREG_4C and NEGATIVES.
std::vector<Corpus> builtin_corpora();
std::optional<Corpus> builtin_corpus(std::string_view name);

/// Reads a corpus file: one entry per non-empty line, `id graph` where graph
/// is a graph6 string or a path to a `.mg`/graph6 file. Lines starting with
/// '#' are skipped. Entries carry no claims.
Corpus load_corpus_file(const std::string& path);

/// Problems found while re-deriving the claims; empty when all hold.
std::vector<std::string> verify_claims(const CorpusEntry& entry);

}  // namespace domcycle
