#include "mlsb/labelled_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "mlsb/errors.hpp"

namespace mlsb {

namespace {

constexpr int kWordBits = 64;

std::vector<std::string> significant_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

// Parses exactly `count` integers from a line, rejecting trailing junk.
std::vector<long long> parse_fields(const std::string& line, std::size_t count,
                                    const char* what) {
  std::istringstream in(line);
  std::vector<long long> fields(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(in >> fields[i])) {
      throw ParseError(std::string("malformed ") + what + " line: '" + line + "'");
    }
  }
  std::string extra;
  if (in >> extra) {
    throw ParseError(std::string("trailing fields on ") + what + " line: '" + line + "'");
  }
  return fields;
}

int narrow(long long value, const char* what) {
  if (value < 0 || value > 0x7fffffff) {
    throw ParseError(std::string(what) + " out of range");
  }
  return static_cast<int>(value);
}

}  // namespace

LabelSet::LabelSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("label universe must be non-negative");
  words_.assign((universe + kWordBits - 1) / kWordBits, 0);
}

LabelSet LabelSet::full(int universe) {
  LabelSet s(universe);
  for (int l = 0; l < universe; ++l) s.insert(l);
  return s;
}

void LabelSet::check_label(int label) const {
  if (label < 0 || label >= universe_) {
    throw std::out_of_range("label id outside universe");
  }
}

bool LabelSet::contains(int label) const {
  check_label(label);
  return (words_[label / kWordBits] >> (label % kWordBits)) & 1ULL;
}

void LabelSet::insert(int label) {
  check_label(label);
  std::uint64_t& w = words_[label / kWordBits];
  const std::uint64_t bit = 1ULL << (label % kWordBits);
  if (!(w & bit)) {
    w |= bit;
    ++count_;
  }
}

void LabelSet::erase(int label) {
  check_label(label);
  std::uint64_t& w = words_[label / kWordBits];
  const std::uint64_t bit = 1ULL << (label % kWordBits);
  if (w & bit) {
    w &= ~bit;
    --count_;
  }
}

bool LabelSet::is_subset_of(const LabelSet& other) const {
  if (universe_ != other.universe_) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<int> LabelSet::to_vector() const {
  std::vector<int> out;
  out.reserve(count_);
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    std::uint64_t w = words_[wi];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<int>(wi) * kWordBits + bit);
      w &= w - 1;
    }
  }
  return out;
}

PlainGraph PlainGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  PlainGraph g;
  g.n_ = n;
  g.m_ = static_cast<int>(edges.size());
  g.adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop");
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& list : g.adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw std::invalid_argument("duplicate edge");
    }
  }
  return g;
}

std::vector<std::pair<int, int>> PlainGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : adj_[u]) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

LabelledGraph make_labelled_graph(int n, int q, std::vector<EdgeRecord> edges) {
  if (n < 1) throw ValidationError("vertex count must be at least 1");
  if (q < 0) throw ValidationError("label count must be non-negative");
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (e.u == e.v) throw ValidationError("self-loop not allowed");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.label < 0 || e.label >= q) throw ValidationError("edge label out of range");
    const std::uint64_t key = static_cast<std::uint64_t>(e.u) * n + e.v;
    if (!seen.insert(key).second) throw ValidationError("duplicate edge");
  }
  return {n, q, std::move(edges)};
}

LabelledGraph load_instance(const std::string& text) {
  const auto lines = significant_lines(text);
  if (lines.empty()) throw ParseError("missing header line");

  const auto header = parse_fields(lines[0], 3, "header");
  const int n = narrow(header[0], "vertex count");
  const int m = narrow(header[1], "edge count");
  const int q = narrow(header[2], "label count");

  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError("edge line count does not match header");
  }

  std::vector<EdgeRecord> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    const auto f = parse_fields(lines[i + 1], 3, "edge");
    edges.push_back({narrow(f[0], "endpoint"), narrow(f[1], "endpoint"),
                     narrow(f[2], "label")});
  }
  return make_labelled_graph(n, q, std::move(edges));
}

std::string save_instance(const LabelledGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.m() << ' ' << g.q << '\n';
  for (const auto& e : g.edges) {
    out << e.u << ' ' << e.v << ' ' << e.label << '\n';
  }
  return out.str();
}

PlainGraph induced_subgraph(const LabelledGraph& g, const LabelSet& labels) {
  if (labels.universe() != g.q) {
    throw std::invalid_argument("label set universe does not match instance");
  }
  std::vector<std::pair<int, int>> picked;
  for (const auto& e : g.edges) {
    if (labels.contains(e.label)) picked.emplace_back(e.u, e.v);
  }
  return PlainGraph::from_edges(g.n, picked);
}

std::vector<int> label_frequencies(const LabelledGraph& g) {
  std::vector<int> counts(g.q, 0);
  for (const auto& e : g.edges) ++counts[e.label];
  return counts;
}

}  // namespace mlsb
