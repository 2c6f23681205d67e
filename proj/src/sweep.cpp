#include "ttd/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "ttd/common.hpp"
#include "ttd/corpus.hpp"
#include "ttd/json_io.hpp"
#include "ttd/widths.hpp"

namespace ttd {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr DualityFamily kFamilies[] = {
    DualityFamily::block, DualityFamily::profile, DualityFamily::tangle};

struct Expected {
  std::optional<int> tw, brw, pw, bw;
};

struct Entry {
  Graph g;
  std::optional<std::uint64_t> key;  // canonical key, corpus mode only
  Expected expect;
};

struct Row {
  bool widths_ok = false;
  WidthReport widths;
  std::vector<bool> structure;  // one per (k, family), k-major
  std::vector<std::string> violations;
  bool pass() const { return violations.empty(); }
};

std::vector<Entry> corpus_entries(const SweepOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > 8)
    throw DomainError("corpus sweeps support max_n between 1 and 8");
  std::vector<Entry> entries;
  for (int n = 1; n <= opt.max_n; ++n)
    for (Graph& g : all_graphs(n, true)) {
      std::uint64_t key = canonical_key(g);
      entries.push_back(Entry{std::move(g), key, {}});
    }
  return entries;
}

std::optional<int> expect_field(const ordered_json& e, const char* name) {
  if (!e.contains(name)) return std::nullopt;
  if (!e[name].is_number_integer())
    throw ParseError(std::string("manifest expectation '") + name +
                     "' must be an integer");
  return e[name].get<int>();
}

std::vector<Entry> manifest_entries(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed manifest: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("entries") ||
      !doc["entries"].is_array())
    throw ParseError("malformed manifest: expected {\"entries\": [...]}");
  if (doc.contains("schema") && doc["schema"] != "1")
    throw ParseError("malformed manifest: unsupported schema");
  std::vector<Entry> entries;
  for (const ordered_json& item : doc["entries"]) {
    if (!item.is_object() || !item.contains("graph"))
      throw ParseError("malformed manifest: entry without a graph");
    Entry e;
    try {
      e.g = graph_from_json(item["graph"].dump());
    } catch (const std::exception& ex) {
      throw ParseError(std::string("malformed manifest graph: ") + ex.what());
    }
    if (item.contains("expect")) {
      const ordered_json& x = item["expect"];
      if (!x.is_object())
        throw ParseError("malformed manifest: expect must be an object");
      e.expect.tw = expect_field(x, "tw");
      e.expect.brw = expect_field(x, "brw");
      e.expect.pw = expect_field(x, "pw");
      e.expect.bw = expect_field(x, "bw");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

void compare_expected(const char* name, std::optional<int> expected,
                      int actual, Row& row) {
  if (expected && *expected != actual) {
    std::ostringstream msg;
    msg << name << " expected " << *expected << ", computed " << actual;
    row.violations.push_back(msg.str());
  }
}

Row run_entry(const Entry& e, const SweepOptions& opt) {
  Row row;
  try {
    row.widths = verify_inequalities(e.g);
    row.widths_ok = true;
    for (int k = 1; k <= opt.kmax; ++k) {
      for (DualityFamily fam : kFamilies) {
        DualityReport rep = verify_duality(e.g, k, fam, opt.mode);
        row.structure.push_back(rep.structure_exists);
        int width = fam == DualityFamily::block     ? row.widths.bw
                    : fam == DualityFamily::profile ? row.widths.pw
                                                    : row.widths.brw;
        if (rep.structure_exists != (k <= width)) {
          std::ostringstream msg;
          msg << family_name(fam) << " side at order " << k
              << " contradicts the computed width " << width;
          row.violations.push_back(msg.str());
        }
      }
    }
    compare_expected("tw", e.expect.tw, row.widths.tw, row);
    compare_expected("brw", e.expect.brw, row.widths.brw, row);
    compare_expected("pw", e.expect.pw, row.widths.pw, row);
    compare_expected("bw", e.expect.bw, row.widths.bw, row);
  } catch (const std::exception& ex) {
    row.violations.push_back(ex.what());
  }
  return row;
}

struct SweepData {
  std::vector<Entry> entries;
  std::vector<Row> rows;
};

SweepData run_sweep(const SweepOptions& opt) {
  if (opt.kmax < 1) throw DomainError("corpus sweeps need kmax >= 1");
  SweepData data;
  data.entries = opt.manifest.empty() ? corpus_entries(opt)
                                      : manifest_entries(opt.manifest);
  if (opt.sample > 0 &&
      opt.sample < static_cast<int>(data.entries.size())) {
    std::vector<std::size_t> order(data.entries.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937 gen(opt.seed);
    std::shuffle(order.begin(), order.end(), gen);
    order.resize(opt.sample);
    std::sort(order.begin(), order.end());
    std::vector<Entry> picked;
    picked.reserve(order.size());
    for (std::size_t i : order) picked.push_back(std::move(data.entries[i]));
    data.entries = std::move(picked);
  }

  data.rows.resize(data.entries.size());
  unsigned hw = std::thread::hardware_concurrency();
  int threads = opt.threads > 0 ? opt.threads : std::max(1u, hw);
  threads = std::min<int>(threads, static_cast<int>(data.entries.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < data.entries.size(); ++i)
      data.rows[i] = run_entry(data.entries[i], opt);
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= data.entries.size()) return;
        data.rows[i] = run_entry(data.entries[i], opt);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }
  return data;
}

ordered_json edges_json(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return edges;
}

std::string key_hex(std::uint64_t key) {
  std::ostringstream out;
  out << "0x" << std::hex << key;
  return out.str();
}

}  // namespace

std::string corpus_sweep_json(const SweepOptions& opt) {
  SweepData data = run_sweep(opt);
  ordered_json rows = ordered_json::array();
  int failures = 0;
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    const Entry& e = data.entries[i];
    const Row& row = data.rows[i];
    if (!row.pass()) ++failures;
    ordered_json cells = ordered_json::array();
    std::size_t c = 0;
    for (int k = 1; k <= opt.kmax && c < row.structure.size(); ++k)
      for (DualityFamily fam : kFamilies) {
        if (c >= row.structure.size()) break;
        cells.push_back({{"k", k},
                         {"family", family_name(fam)},
                         {"side", row.structure[c] ? "structure" : "tree"}});
        ++c;
      }
    ordered_json violations = ordered_json::array();
    for (const std::string& v : row.violations) violations.push_back(v);
    rows.push_back(
        {{"n", e.g.n()},
         {"key", e.key ? ordered_json(key_hex(*e.key)) : ordered_json()},
         {"edges", edges_json(e.g)},
         {"tw", row.widths_ok ? ordered_json(row.widths.tw) : ordered_json()},
         {"brw",
          row.widths_ok ? ordered_json(row.widths.brw) : ordered_json()},
         {"pw", row.widths_ok ? ordered_json(row.widths.pw) : ordered_json()},
         {"bw", row.widths_ok ? ordered_json(row.widths.bw) : ordered_json()},
         {"duality", std::move(cells)},
         {"pass", row.pass()},
         {"violations", std::move(violations)}});
  }
  ordered_json report{{"schema", "1"},
                      {"mode", opt.manifest.empty() ? "corpus" : "manifest"}};
  if (opt.manifest.empty()) report["max_n"] = opt.max_n;
  report["kmax"] = opt.kmax;
  report["uncross"] = mode_name(opt.mode);
  if (opt.sample > 0) {
    report["sample"] = opt.sample;
    report["seed"] = opt.seed;
  }
  report["entries"] = static_cast<int>(data.entries.size());
  report["failures"] = failures;
  report["rows"] = std::move(rows);
  return report.dump() + "\n";
}

std::string corpus_sweep_csv(const SweepOptions& opt) {
  SweepData data = run_sweep(opt);
  std::ostringstream out;
  out << "n,key,m,tw,brw,pw,bw";
  for (int k = 1; k <= opt.kmax; ++k)
    for (DualityFamily fam : kFamilies)
      out << ",k" << k << "_" << family_name(fam);
  out << ",pass\n";
  for (std::size_t i = 0; i < data.entries.size(); ++i) {
    const Entry& e = data.entries[i];
    const Row& row = data.rows[i];
    out << e.g.n() << ',' << (e.key ? key_hex(*e.key) : "") << ',' << e.g.m();
    if (row.widths_ok)
      out << ',' << row.widths.tw << ',' << row.widths.brw << ','
          << row.widths.pw << ',' << row.widths.bw;
    else
      out << ",,,,";
    std::size_t cells = static_cast<std::size_t>(opt.kmax) * 3;
    for (std::size_t c = 0; c < cells; ++c) {
      if (c < row.structure.size())
        out << ',' << (row.structure[c] ? 's' : 't');
      else
        out << ",?";
    }
    out << ',' << (row.pass() ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace ttd
