#include "domcycle/corpus.hpp"

#include <sstream>

#include "domcycle/connectivity.hpp"
#include "domcycle/errors.hpp"
#include "domcycle/graph_io.hpp"
#include "domcycle/named_graphs.hpp"

namespace domcycle {
namespace {

CorpusEntry cubic(std::string id, Multigraph g, std::string source) {
  CorpusClaims claims;
  claims.regularity = 3;
  claims.vertex_connectivity_at_least = 3;
  claims.cyclic_at_least = 4;
  return CorpusEntry{std::move(id), std::move(g), claims, std::move(source)};
}

CorpusEntry four_regular(std::string id, Multigraph g, std::string source) {
  CorpusClaims claims;
  claims.regularity = 4;
  claims.vertex_connectivity_at_least = 4;
  return CorpusEntry{std::move(id), std::move(g), claims, std::move(source)};
}

Corpus cubic_c4() {
  Corpus c{"CUBIC_C4", {}};
  c.entries.push_back(cubic("K4", named::complete(4), "complete graph"));
  c.entries.push_back(cubic("K3,3", named::complete_bipartite(3, 3), "complete bipartite graph"));
  c.entries.push_back(cubic("petersen", named::petersen(), "GP(5,2)"));
  c.entries.push_back(cubic("heawood", named::heawood(), "LCF [5,-5]^7"));
  c.entries.push_back(cubic("mobius-kantor", named::mobius_kantor(), "GP(8,3)"));
  c.entries.push_back(cubic("pappus", named::pappus(), "LCF [5,7,-7,7,-7,-5]^3"));
  c.entries.push_back(cubic("dodecahedron", named::dodecahedron(), "GP(10,2)"));
  c.entries[0].claims.no_two_disjoint_cycles = true;
  c.entries[1].claims.no_two_disjoint_cycles = true;
  return c;
}

Corpus fourreg_4c() {
  Corpus c{"FOURREG_4C", {}};
  c.entries.push_back(four_regular("K5", named::complete(5), "complete graph"));
  c.entries.push_back(four_regular("octahedron", named::octahedron(), "K2,2,2"));
  c.entries.push_back(four_regular("C7-complement", named::cycle_complement(7), "complement of C7"));
  c.entries.push_back(four_regular("antiprism-4", named::antiprism(4), "square antiprism"));
  return c;
}

Corpus negatives() {
  Corpus c{"NEGATIVES", {}};
  CorpusClaims prism;
  prism.regularity = 3;
  prism.cyclic_exactly = 3;
  c.entries.push_back(CorpusEntry{"prism", named::prism(), prism, "C3 x K2"});
  c.entries.push_back(CorpusEntry{"two-triangles-3-join", named::two_triangles_joined(), prism, "two triangles joined by a perfect matching"});
  CorpusClaims k4;
  k4.regularity = 3;
  k4.no_two_disjoint_cycles = true;
  c.entries.push_back(CorpusEntry{"K4", named::complete(4), k4, "complete graph"});
  return c;
}

}  // namespace

std::vector<Corpus> builtin_corpora() { return {cubic_c4(), fourreg_4c(), negatives()}; }

std::optional<Corpus> builtin_corpus(std::string_view name) {
  for (Corpus& c : builtin_corpora()) {
    if (c.name == name) return std::move(c);
  }
  return std::nullopt;
}

Corpus load_corpus_file(const std::string& path) {
  Corpus corpus{path, {}};
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string id, graph;
    if (!(fields >> id >> graph)) throw GraphError(ErrorCode::MalformedInput, "corpus line needs `id graph`: " + line);
    corpus.entries.push_back(CorpusEntry{id, load_graph(graph), {}, graph});
  }
  return corpus;
}

std::vector<std::string> verify_claims(const CorpusEntry& entry) {
  std::vector<std::string> problems;
  const Multigraph& g = entry.graph;
  const CorpusClaims& c = entry.claims;
  if (c.regularity && !is_k_regular(g, *c.regularity)) {
    problems.push_back("not " + std::to_string(*c.regularity) + "-regular");
  }
  if (c.vertex_connectivity_at_least) {
    const int kappa = vertex_connectivity(g).value;
    if (kappa < *c.vertex_connectivity_at_least) problems.push_back("vertex connectivity " + std::to_string(kappa));
  }
  const bool two_cycles = has_two_disjoint_cycles(g);
  if (c.no_two_disjoint_cycles && two_cycles) problems.push_back("has two disjoint cycles");
  if ((c.cyclic_at_least || c.cyclic_exactly) && two_cycles) {
    const int lambda = cyclic_edge_connectivity(g).value;
    if (c.cyclic_at_least && lambda < *c.cyclic_at_least) problems.push_back("lambda_c " + std::to_string(lambda));
    if (c.cyclic_exactly && lambda != *c.cyclic_exactly) problems.push_back("lambda_c " + std::to_string(lambda));
  }
  if (c.cyclic_exactly && !two_cycles) problems.push_back("lambda_c undefined");
  return problems;
}

}  // namespace domcycle
