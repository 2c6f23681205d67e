#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "ttd.h"

namespace {

struct GraphHandle {
  ttd_graph* g = nullptr;
  ~GraphHandle() { ttd_graph_free(g); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { ttd_string_free(s); }
};

int report_failure(ttd_status status) {
  std::cerr << "error: " << ttd_last_error() << "\n";
  return static_cast<int>(status);
}

bool read_text(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    out = buf.str();
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return false;
  }
  std::ostringstream buf;
  buf << f.rdbuf();
  out = buf.str();
  return true;
}

int load_graph(const std::string& path, GraphHandle& h) {
  std::string text;
  if (!read_text(path, text)) return 2;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  ttd_status status =
      (first != std::string::npos && text[first] == '{')
          ? ttd_graph_from_json(text.c_str(), &h.g)
          : ttd_graph_from_edge_list(text.c_str(), &h.g);
  if (status != TTD_OK) return report_failure(status);
  return 0;
}

// Reports go to stdout unless --output is given; a relative --output path is
// placed under $TTD_OUTPUT_DIR when that is set.
int write_report(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return 0;
  }
  std::string path = output;
  const char* dir = std::getenv("TTD_OUTPUT_DIR");
  if (dir != nullptr && dir[0] != '\0' && output.front() != '/')
    path = std::string(dir) + "/" + output;
  std::ofstream f(path, std::ios::binary);
  f << text;
  if (!f) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 1;
  }
  return 0;
}

int emit(ttd_status status, const OwnedString& report,
         const std::string& output) {
  if (status != TTD_OK) return report_failure(status);
  return write_report(report.s, output);
}

void warn_low_k(const std::string& family, int k) {
  if ((family == "profile" || family == "tangle") && k < 3)
    std::cerr << "warning: " << family << " duality claims need k >= 3; "
              << "running at k = " << k << " anyway\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"separation systems and tangle-tree duality in finite graphs"};
  app.set_version_flag("--version", ttd_version());
  app.require_subcommand(1);

  std::string input = "-";
  std::string output;
  std::string family;
  std::string mode = "lean";
  std::string format = "json";
  std::string manifest;
  int k = 0;
  int max_n = 5;
  int kmax = 4;
  int sample = 0;
  unsigned seed = 1;
  int threads = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input,
                    "graph file, JSON or edge list; - for stdin");
    cmd->add_option("-o,--output", output, "write the report to this file");
  };

  CLI::App* widths =
      app.add_subcommand("widths", "tree-, branch-, profile- and block-width");
  add_input(widths);
  widths->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* find = app.add_subcommand(
      "find", "search for an order-k structure of one family");
  add_input(find);
  find->add_option("--family", family, "block, profile or tangle")
      ->required();
  find->add_option("--k", k, "order")->required();

  CLI::App* blocks = app.add_subcommand("blocks", "list all k-blocks");
  add_input(blocks);
  blocks->add_option("--k", k, "order (at least 1)")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* duality = app.add_subcommand(
      "duality", "two-sided structure vs tree duality check");
  add_input(duality);
  duality->add_option("--family", family, "block, profile or tangle")
      ->required();
  duality->add_option("--k", k, "order")->required();
  duality->add_option("--mode", mode, "lean or canonical_all")
      ->check(CLI::IsMember({"lean", "canonical_all"}));
  duality->add_option("--format", format, "json or dot (tree side only)")
      ->check(CLI::IsMember({"json", "dot"}));

  CLI::App* corpus = app.add_subcommand(
      "corpus", "sweep duality and width checks over small graphs");
  corpus->add_option("-o,--output", output, "write the report to this file");
  corpus->add_option("--max-n", max_n,
                     "largest vertex count of the generated corpus (<= 8)");
  corpus->add_option("--kmax", kmax, "check duality at orders 1..kmax");
  corpus->add_option("--mode", mode, "lean or canonical_all")
      ->check(CLI::IsMember({"lean", "canonical_all"}));
  corpus->add_option("--manifest", manifest,
                     "JSON manifest of graphs with expected widths; replaces "
                     "the generated corpus");
  corpus->add_option("--sample", sample,
                     "sweep only this many seeded-randomly chosen entries");
  corpus->add_option("--seed", seed, "sampling seed");
  corpus->add_option("--threads", threads,
                     "worker threads (0 = hardware concurrency)");
  corpus->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* validate = app.add_subcommand(
      "validate", "graph statistics and universe axiom check");
  add_input(validate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  OwnedString report;

  if (app.got_subcommand(corpus)) {
    std::string manifest_text;
    const char* manifest_ptr = nullptr;
    if (!manifest.empty()) {
      if (!read_text(manifest, manifest_text)) return 2;
      manifest_ptr = manifest_text.c_str();
    }
    ttd_status status =
        ttd_corpus_report(max_n, kmax, mode.c_str(), manifest_ptr, sample,
                          seed, threads, format.c_str(), &report.s);
    return emit(status, report, output);
  }

  GraphHandle graph;
  if (int rc = load_graph(input, graph); rc != 0) return rc;

  if (app.got_subcommand(widths)) {
    ttd_status status = format == "csv"
                            ? ttd_widths_csv(graph.g, &report.s)
                            : ttd_widths_json(graph.g, &report.s);
    return emit(status, report, output);
  }
  if (app.got_subcommand(find)) {
    warn_low_k(family, k);
    return emit(ttd_find_json(graph.g, family.c_str(), k, &report.s), report,
                output);
  }
  if (app.got_subcommand(blocks)) {
    return emit(ttd_blocks_json(graph.g, k, &report.s), report, output);
  }
  if (app.got_subcommand(duality)) {
    warn_low_k(family, k);
    ttd_status status =
        format == "dot"
            ? ttd_duality_dot(graph.g, family.c_str(), k, mode.c_str(),
                              &report.s)
            : ttd_duality_json(graph.g, family.c_str(), k, mode.c_str(),
                               &report.s);
    return emit(status, report, output);
  }
  if (app.got_subcommand(validate)) {
    return emit(ttd_validate_json(graph.g, &report.s), report, output);
  }
  return 1;
}
