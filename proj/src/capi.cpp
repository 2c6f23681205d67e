#include "ttd.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "ttd/blocks.hpp"
#include "ttd/common.hpp"
#include "ttd/duality.hpp"
#include "ttd/families.hpp"
#include "ttd/graph.hpp"
#include "ttd/graphsep.hpp"
#include "ttd/json_io.hpp"
#include "ttd/sweep.hpp"
#include "ttd/widths.hpp"

extern "C" struct ttd_graph {
  ttd::Graph g;
};

namespace {

thread_local std::string g_last_error;

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs the body, routing the exception hierarchy onto status codes: parse
// failures are bad input, precondition failures are usage errors, anything
// else is an internal invariant violation.
template <typename Fn>
ttd_status guarded(Fn&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const ttd::ParseError& e) {
    g_last_error = e.what();
    return TTD_BAD_INPUT;
  } catch (const ttd::DomainError& e) {
    g_last_error = e.what();
    return TTD_USAGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TTD_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TTD_INTERNAL;
  }
}

ttd_status emit(const std::string& text, char** out) {
  if (out == nullptr) {
    g_last_error = "output parameter is null";
    return TTD_USAGE;
  }
  *out = copy_string(text);
  if (*out == nullptr) {
    g_last_error = "out of memory";
    return TTD_INTERNAL;
  }
  return TTD_OK;
}

ttd_status require_graph(const ttd_graph* g) {
  if (g == nullptr) {
    g_last_error = "graph handle is null";
    return TTD_USAGE;
  }
  return TTD_OK;
}

ttd::DualityFamily parse_family(const char* family) {
  if (family == nullptr) throw ttd::DomainError("family is required");
  auto parsed = ttd::family_from_name(family);
  if (!parsed)
    throw ttd::DomainError(std::string("unknown family '") + family +
                           "': expected block, profile or tangle");
  return *parsed;
}

ttd::UncrossMode parse_mode(const char* mode) {
  if (mode == nullptr || mode[0] == '\0') return ttd::UncrossMode::lean;
  auto parsed = ttd::mode_from_name(mode);
  if (!parsed)
    throw ttd::DomainError(std::string("unknown mode '") + mode +
                           "': expected lean or canonical_all");
  return *parsed;
}

}  // namespace

extern "C" {

const char* ttd_version(void) { return "1.0.0"; }

const char* ttd_last_error(void) { return g_last_error.c_str(); }

void ttd_string_free(char* s) { std::free(s); }

ttd_status ttd_graph_from_json(const char* text, ttd_graph** out) {
  return guarded([&]() -> ttd_status {
    if (text == nullptr || out == nullptr)
      throw ttd::DomainError("text and out must be non-null");
    *out = new ttd_graph{ttd::graph_from_json(text)};
    return TTD_OK;
  });
}

ttd_status ttd_graph_from_edge_list(const char* text, ttd_graph** out) {
  return guarded([&]() -> ttd_status {
    if (text == nullptr || out == nullptr)
      throw ttd::DomainError("text and out must be non-null");
    *out = new ttd_graph{ttd::graph_from_edge_list(text)};
    return TTD_OK;
  });
}

void ttd_graph_free(ttd_graph* g) { delete g; }

int ttd_graph_vertex_count(const ttd_graph* g) {
  return g == nullptr ? -1 : g->g.n();
}

int ttd_graph_edge_count(const ttd_graph* g) {
  return g == nullptr ? -1 : g->g.m();
}

ttd_status ttd_widths_json(const ttd_graph* g, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    ttd::WidthReport rep = ttd::compute_widths(g->g);
    return emit(ttd::widths_json(g->g, rep), out);
  });
}

ttd_status ttd_widths_csv(const ttd_graph* g, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    ttd::WidthReport rep = ttd::compute_widths(g->g);
    return emit(ttd::widths_csv(g->g, rep), out);
  });
}

ttd_status ttd_blocks_json(const ttd_graph* g, int k, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    return emit(ttd::blocks_json(g->g, k, ttd::find_k_blocks(g->g, k)), out);
  });
}

ttd_status ttd_find_json(const ttd_graph* g, const char* family, int k,
                         char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    ttd::DualityFamily fam = parse_family(family);
    ttd::DualityReport rep =
        ttd::verify_duality(g->g, k, fam, ttd::UncrossMode::lean);
    return emit(ttd::find_json(g->g, fam, k, rep.orientation), out);
  });
}

ttd_status ttd_duality_json(const ttd_graph* g, const char* family, int k,
                            const char* mode, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    ttd::DualityReport rep =
        ttd::verify_duality(g->g, k, parse_family(family), parse_mode(mode));
    return emit(ttd::duality_json(g->g, rep), out);
  });
}

ttd_status ttd_duality_dot(const ttd_graph* g, const char* family, int k,
                           const char* mode, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] {
    ttd::DualityReport rep =
        ttd::verify_duality(g->g, k, parse_family(family), parse_mode(mode));
    if (!rep.tree || !rep.decomposition)
      throw ttd::DomainError(
          "the structure side holds; there is no tree to render");
    return emit(ttd::stree_dot(*rep.tree) + ttd::treedec_dot(*rep.decomposition),
                out);
  });
}

ttd_status ttd_validate_json(const ttd_graph* g, char** out) {
  if (ttd_status s = require_graph(g); s != TTD_OK) return s;
  return guarded([&] { return emit(ttd::validate_json(g->g), out); });
}

ttd_status ttd_corpus_report(int max_n, int kmax, const char* mode,
                             const char* manifest_json, int sample,
                             unsigned seed, int threads, const char* format,
                             char** out) {
  return guarded([&]() -> ttd_status {
    ttd::SweepOptions opt;
    opt.max_n = max_n;
    opt.kmax = kmax;
    opt.mode = parse_mode(mode);
    if (manifest_json != nullptr) opt.manifest = manifest_json;
    opt.sample = sample;
    opt.seed = seed;
    opt.threads = threads;
    std::string fmt = format == nullptr ? "json" : format;
    if (fmt == "json") return emit(ttd::corpus_sweep_json(opt), out);
    if (fmt == "csv") return emit(ttd::corpus_sweep_csv(opt), out);
    throw ttd::DomainError("unknown format '" + fmt +
                           "': expected json or csv");
  });
}

}  // extern "C"
