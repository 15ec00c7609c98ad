#include "domcycle/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <tuple>

#include "domcycle/errors.hpp"

namespace domcycle {
namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6Long = 126;

[[noreturn]] void malformed6(const std::string& why) { throw GraphError(ErrorCode::MalformedGraph6, why); }
[[noreturn]] void malformed(const std::string& why) { throw GraphError(ErrorCode::MalformedInput, why); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto pos = text.find('\n');
    std::string_view line = text.substr(0, pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

long long parse_int(std::string_view token, const char* what) {
  token = trim(token);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || token.empty()) {
    malformed(std::string("bad ") + what + ": '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Multigraph read_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) malformed6("empty input");
  for (char c : text) {
    auto b = static_cast<unsigned char>(c);
    if (b < kGraph6Bias || b > kGraph6Long) malformed6("byte outside 63..126");
  }
  std::size_t pos = 0;
  auto next6 = [&]() -> long long {
    if (pos >= text.size()) malformed6("truncated size header");
    return static_cast<unsigned char>(text[pos++]) - kGraph6Bias;
  };
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) != kGraph6Long) {
    n = next6();
  } else {
    ++pos;
    int groups = 3;
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == kGraph6Long) {
      ++pos;
      groups = 6;
    }
    for (int i = 0; i < groups; ++i) n = (n << 6) | next6();
  }
  const long long bits = n * (n - 1) / 2;
  const auto body_bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != body_bytes) malformed6("expected " + std::to_string(body_bytes) + " body bytes");

  std::vector<Edge> edges;
  long long k = 0;
  for (VertexId j = 1; j < n; ++j) {
    for (VertexId i = 0; i < j; ++i, ++k) {
      auto byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - kGraph6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back(Edge{i, j});
    }
  }
  for (; k % 6 != 0; ++k) {
    auto byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - kGraph6Bias;
    if ((byte >> (5 - k % 6)) & 1) malformed6("nonzero padding bits");
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

Multigraph graph6_normal_form(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::MultiEdgeInGraph6, "graph has parallel edges");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::tie(a.v, a.u) < std::tie(b.v, b.u); });
  return Multigraph(g.vertex_count(), std::move(edges));
}

std::string write_graph6(const Multigraph& g) {
  if (!g.is_simple()) throw GraphError(ErrorCode::MultiEdgeInGraph6, "graph has parallel edges");
  const long long n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kGraph6Long));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  } else {
    out.append(2, static_cast<char>(kGraph6Long));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> body(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const Edge& e : g.edges()) {
    long long i = std::min(e.u, e.v);
    long long j = std::max(e.u, e.v);
    long long k = j * (j - 1) / 2 + i;
    body[static_cast<std::size_t>(k / 6)] |= static_cast<unsigned char>(1U << (5 - k % 6));
  }
  for (unsigned char b : body) out.push_back(static_cast<char>(b + kGraph6Bias));
  return out;
}

Multigraph read_mg(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) malformed("empty .mg input");
  auto header = split_ws(lines[0]);
  if (header.size() != 2) malformed(".mg header must be 'n m'");
  const auto n = parse_int(header[0], "vertex count");
  const auto m = parse_int(header[1], "edge count");
  if (n < 0 || m < 0) malformed("negative counts");
  if (lines.size() != static_cast<std::size_t>(m) + 1) {
    malformed("expected " + std::to_string(m) + " edge lines, got " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = split_ws(lines[i]);
    if (tok.size() != 2) malformed("edge line " + std::to_string(i) + " must be 'u v'");
    edges.push_back(Edge{static_cast<VertexId>(parse_int(tok[0], "vertex")), static_cast<VertexId>(parse_int(tok[1], "vertex"))});
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::string write_mg(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::vector<int> read_pairing_codes(std::string_view text) {
  std::vector<int> codes;
  for (auto line : split_lines(text)) {
    auto value = parse_int(line, "pairing code");
    if (value < 0 || value > 2) malformed("pairing code must be 0, 1 or 2");
    codes.push_back(static_cast<int>(value));
  }
  return codes;
}

std::string write_pairing_codes(const std::vector<int>& codes) {
  std::string out;
  for (int c : codes) {
    out += std::to_string(c);
    out += '\n';
  }
  return out;
}

ClosedTrail read_trail(std::string_view text) {
  ClosedTrail trail;
  for (auto line : split_lines(text)) {
    auto comma = line.find(',');
    if (comma == std::string_view::npos) malformed("trail line must be 'edge_id,end'");
    auto edge = parse_int(line.substr(0, comma), "edge id");
    auto end = parse_int(line.substr(comma + 1), "dart end");
    if (end != 0 && end != 1) malformed("dart end must be 0 or 1");
    trail.darts.push_back(Dart{static_cast<EdgeId>(edge), static_cast<std::uint8_t>(end)});
  }
  return trail;
}

std::string write_trail(const ClosedTrail& trail) {
  std::string out;
  for (Dart d : trail.darts) out += std::to_string(d.edge) + "," + std::to_string(int{d.end}) + "\n";
  return out;
}

std::vector<EdgeId> read_edge_ids(std::string_view text) {
  std::vector<EdgeId> ids;
  for (auto line : split_lines(text)) {
    if (trim(line).empty()) continue;
    ids.push_back(static_cast<EdgeId>(parse_int(line, "edge id")));
  }
  return ids;
}

std::string write_edge_ids(std::span<const EdgeId> ids) {
  std::string out;
  for (EdgeId e : ids) out += std::to_string(e) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) malformed("cannot write " + path);
  out << contents;
}

Multigraph load_graph(const std::string& path_or_graph6) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_regular_file(path_or_graph6, ec)) return read_graph6(path_or_graph6);
  std::string text = read_file(path_or_graph6);
  if (fs::path(path_or_graph6).extension() == ".mg") return read_mg(text);
  for (auto line : split_lines(text)) {
    if (!trim(line).empty()) return read_graph6(line);
  }
  malformed6("no graph in " + path_or_graph6);
}

}  // namespace domcycle
