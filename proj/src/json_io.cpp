#include "ttd/json_io.hpp"

#include <json.hpp>

#include <sstream>

#include "ttd/common.hpp"
#include "ttd/graphsep.hpp"
#include "ttd/sepsys.hpp"

namespace ttd {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json vset_json(VSet s) {
  ordered_json out = ordered_json::array();
  for (int v : set_to_vertices(s)) out.push_back(v);
  return out;
}

ordered_json graph_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return ordered_json{{"n", g.n()}, {"edges", std::move(edges)}};
}

const GraphUniverse& graph_universe_of(const Universe& u) {
  const auto* gu = dynamic_cast<const GraphUniverse*>(&u);
  if (gu == nullptr)
    throw InternalError("report serialization needs a graph-backed universe");
  return *gu;
}

ordered_json sep_json(const GraphUniverse& u, Sep x) {
  return ordered_json{{"a", vset_json(u.a_side(x))},
                      {"b", vset_json(u.b_side(x))}};
}

ordered_json orientation_json(const Orientation& o) {
  const GraphUniverse& u = graph_universe_of(o.system().universe());
  ordered_json out = ordered_json::array();
  for (Sep x : o.chosen()) out.push_back(sep_json(u, x));
  return out;
}

ordered_json stree_json(const STree& t) {
  const GraphUniverse& u = graph_universe_of(t.system->universe());
  ordered_json edges = ordered_json::array();
  for (const auto& e : t.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"sep", sep_json(u, e.ab)}});
  return ordered_json{{"nodes", t.node_count}, {"edges", std::move(edges)}};
}

ordered_json treedec_json(const TreeDecomposition& d) {
  ordered_json edges = ordered_json::array();
  for (auto [a, b] : d.edges) edges.push_back({a, b});
  ordered_json bags = ordered_json::array();
  for (VSet bag : d.bags) bags.push_back(vset_json(bag));
  return ordered_json{{"nodes", d.node_count},
                      {"edges", std::move(edges)},
                      {"bags", std::move(bags)},
                      {"width", d.width()}};
}

std::string set_label(VSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : set_to_vertices(s)) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string dump(const ordered_json& j) { return j.dump() + "\n"; }

}  // namespace

std::string widths_json(const Graph& g, const WidthReport& rep) {
  ordered_json per_k = ordered_json::array();
  for (const auto& [k, w] : rep.per_k)
    per_k.push_back({{"k", k},
                     {"block", w.block},
                     {"block_tree", w.block_tree},
                     {"profile", w.profile},
                     {"profile_tree", w.profile_tree},
                     {"tangle", w.tangle},
                     {"tangle_tree", w.tangle_tree}});
  return dump(ordered_json{{"schema", "1"},
                           {"graph", graph_json(g)},
                           {"tw", rep.tw},
                           {"brw", rep.brw},
                           {"pw", rep.pw},
                           {"bw", rep.bw},
                           {"per_k", std::move(per_k)}});
}

std::string widths_csv(const Graph& g, const WidthReport& rep) {
  std::ostringstream out;
  out << "n,m,tw,brw,pw,bw\n"
      << g.n() << ',' << g.m() << ',' << rep.tw << ',' << rep.brw << ','
      << rep.pw << ',' << rep.bw << '\n';
  return out.str();
}

std::string blocks_json(const Graph& g, int k, const std::vector<Block>& bs) {
  ordered_json blocks = ordered_json::array();
  for (const Block& b : bs) blocks.push_back(vset_json(b.vertices));
  return dump(ordered_json{{"schema", "1"},
                           {"graph", graph_json(g)},
                           {"k", k},
                           {"count", static_cast<int>(bs.size())},
                           {"blocks", std::move(blocks)}});
}

std::string find_json(const Graph& g, DualityFamily family, int k,
                      const std::optional<Orientation>& witness) {
  return dump(ordered_json{
      {"schema", "1"},
      {"graph", graph_json(g)},
      {"family", family_name(family)},
      {"k", k},
      {"found", witness.has_value()},
      {"witness", witness ? orientation_json(*witness) : ordered_json()}});
}

std::string duality_json(const Graph& g, const DualityReport& rep) {
  return dump(ordered_json{
      {"schema", "1"},
      {"graph", graph_json(g)},
      {"k", rep.k},
      {"family", family_name(rep.family)},
      {"mode", mode_name(rep.mode)},
      {"structure_exists", rep.structure_exists},
      {"orientation",
       rep.orientation ? orientation_json(*rep.orientation) : ordered_json()},
      {"tree", rep.tree ? stree_json(*rep.tree) : ordered_json()},
      {"decomposition",
       rep.decomposition ? treedec_json(*rep.decomposition) : ordered_json()},
      {"closure_size", rep.closure_size}});
}

std::string validate_json(const Graph& g) {
  ordered_json report{{"schema", "1"},
                      {"n", g.n()},
                      {"m", g.m()},
                      {"connected", g.connected()},
                      {"components", static_cast<int>(g.components().size())}};
  bool ok = true;
  if (g.n() >= 1 && g.n() <= GraphUniverse::kMaxVertices) {
    auto u = GraphUniverse::build(g);
    ordered_json universe{{"size", u->size()}};
    if (u->size() <= kValidateAxiomLimit) {
      std::vector<Violation> violations = validate_universe(*u);
      ordered_json vlist = ordered_json::array();
      for (const Violation& v : violations)
        vlist.push_back({{"axiom", v.axiom}, {"detail", v.detail}});
      ok = violations.empty();
      universe["axioms_checked"] = true;
      universe["violations"] = std::move(vlist);
    } else {
      universe["axioms_checked"] = false;
    }
    report["universe"] = std::move(universe);
  } else {
    report["universe"] = ordered_json();
  }
  report["ok"] = ok;
  return dump(report);
}

std::string stree_dot(const STree& t) {
  const GraphUniverse& u = graph_universe_of(t.system->universe());
  std::ostringstream out;
  out << "graph stree {\n  node [shape=circle];\n";
  for (int i = 0; i < t.node_count; ++i) out << "  t" << i << ";\n";
  for (const auto& e : t.edges)
    out << "  t" << e.a << " -- t" << e.b << " [label=\""
        << set_label(u.a_side(e.ab) & u.b_side(e.ab)) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string treedec_dot(const TreeDecomposition& d) {
  std::ostringstream out;
  out << "graph treedec {\n  node [shape=box];\n";
  for (int i = 0; i < d.node_count; ++i)
    out << "  b" << i << " [label=\"" << set_label(d.bags[i]) << "\"];\n";
  for (auto [a, b] : d.edges) out << "  b" << a << " -- b" << b << ";\n";
  out << "}\n";
  return out.str();
}

const char* family_name(DualityFamily f) {
  switch (f) {
    case DualityFamily::block:
      return "block";
    case DualityFamily::profile:
      return "profile";
    case DualityFamily::tangle:
      return "tangle";
  }
  throw DomainError("unknown duality family");
}

const char* mode_name(UncrossMode m) {
  switch (m) {
    case UncrossMode::canonical_all:
      return "canonical_all";
    case UncrossMode::lean:
      return "lean";
  }
  throw DomainError("unknown uncross mode");
}

std::optional<DualityFamily> family_from_name(std::string_view name) {
  if (name == "block") return DualityFamily::block;
  if (name == "profile") return DualityFamily::profile;
  if (name == "tangle") return DualityFamily::tangle;
  return std::nullopt;
}

std::optional<UncrossMode> mode_from_name(std::string_view name) {
  if (name == "canonical_all") return UncrossMode::canonical_all;
  if (name == "lean") return UncrossMode::lean;
  return std::nullopt;
}

}  // namespace ttd
