#include "gia/gia.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/error.hpp"
#include "core/graph.hpp"
#include "core/matrix.hpp"
#include "core/mtransform.hpp"
#include "core/parallel.hpp"
#include "core/poset.hpp"
#include "core/cache.hpp"

struct gia_graph {
  gia::LabeledGraph g;
};
struct gia_poset {
  gia::GPoset p;
};
struct gia_matrix {
  gia::IntMatrix m;
};

namespace {

thread_local std::string last_error;

gia_status status_of(gia::ErrorCode code) {
  switch (code) {
    case gia::ErrorCode::InvalidArgument: return GIA_ERR_INVALID_ARGUMENT;
    case gia::ErrorCode::Parse: return GIA_ERR_PARSE;
    case gia::ErrorCode::CapExceeded: return GIA_ERR_CAP_EXCEEDED;
    case gia::ErrorCode::Precondition: return GIA_ERR_PRECONDITION;
    case gia::ErrorCode::Internal: return GIA_ERR_INTERNAL;
  }
  return GIA_ERR_INTERNAL;
}

template <class F>
gia_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const gia::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("bad request: ") + e.what();
    return GIA_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return GIA_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return GIA_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void need(const void* p, const char* what) {
  if (!p) gia::fail(gia::ErrorCode::InvalidArgument, std::string("null ") + what);
}

}  // namespace

extern "C" {

const char* gia_last_error(void) { return last_error.c_str(); }
void gia_string_free(char* s) { std::free(s); }
const char* gia_version(void) { return "0.1.0"; }

gia_status gia_set_parallelism(int width) {
  return guarded([&] {
    gia::set_parallelism(width);
    return GIA_OK;
  });
}

int gia_parallelism(void) { return gia::parallelism(); }

gia_status gia_graph_parse(const char* text, gia_graph** out) {
  return guarded([&] {
    need(text, "text");
    need(out, "output");
    *out = new gia_graph{gia::parse_graph(text)};
    return GIA_OK;
  });
}

void gia_graph_free(gia_graph* g) { delete g; }

gia_status gia_graph_order(const gia_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "output");
    *out = g->g.order();
    return GIA_OK;
  });
}

gia_status gia_graph_edge_count(const gia_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "output");
    *out = g->g.edge_count();
    return GIA_OK;
  });
}

gia_status gia_graph_graph6(const gia_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "output");
    *out = dup(gia::emit_graph6(g->g));
    return GIA_OK;
  });
}

gia_status gia_graph_canonical(const gia_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "output");
    *out = dup(gia::canonicalize(g->g).graph6());
    return GIA_OK;
  });
}

gia_status gia_graph_isomorphic(const gia_graph* a, const gia_graph* b, int* out) {
  return guarded([&] {
    need(a, "graph");
    need(b, "graph");
    need(out, "output");
    *out = gia::is_isomorphic(a->g, b->g) ? 1 : 0;
    return GIA_OK;
  });
}

gia_status gia_count_subgraphs(const gia_graph* pattern, const gia_graph* host, char** out) {
  return guarded([&] {
    need(pattern, "pattern");
    need(host, "host");
    need(out, "output");
    *out = dup(std::to_string(gia::count_subgraphs(gia::canonicalize(pattern->g), host->g)));
    return GIA_OK;
  });
}

gia_status gia_poset_full(int n, int max_degree, const char* cache_dir, gia_poset** out) {
  return guarded([&] {
    need(out, "output");
    gia::require(n >= 0 && n <= gia::kMaxVertices, gia::ErrorCode::CapExceeded, "n out of range");
    *out = new gia_poset{gia::cached_full_poset(n, max_degree, cache_dir ? cache_dir : "")};
    return GIA_OK;
  });
}

void gia_poset_free(gia_poset* p) { delete p; }

gia_status gia_poset_size(const gia_poset* p, size_t* out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "output");
    *out = p->p.size();
    return GIA_OK;
  });
}

gia_status gia_poset_member(const gia_poset* p, size_t i, char** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "output");
    gia::require(i < p->p.size(), gia::ErrorCode::InvalidArgument, "member index out of range");
    *out = dup(p->p[i].graph6());
    return GIA_OK;
  });
}

gia_status gia_poset_index_of(const gia_poset* p, const gia_graph* g, size_t* out) {
  return guarded([&] {
    need(p, "poset");
    need(g, "graph");
    need(out, "output");
    const auto i = p->p.index_of(gia::canonicalize(g->g));
    gia::require(i.has_value(), gia::ErrorCode::InvalidArgument, "graph is not a member of the poset");
    *out = *i;
    return GIA_OK;
  });
}

gia_status gia_mtransform(const gia_poset* p, gia_matrix** out) {
  return guarded([&] {
    need(p, "poset");
    need(out, "output");
    *out = new gia_matrix{gia::build_mtransform(p->p)};
    return GIA_OK;
  });
}

gia_status gia_mtransform_power(const gia_poset* p, const gia_matrix* e, long k, gia_matrix** out) {
  return guarded([&] {
    need(p, "poset");
    need(e, "matrix");
    need(out, "output");
    *out = new gia_matrix{gia::mnukhin_power(p->p, e->m, k)};
    return GIA_OK;
  });
}

void gia_matrix_free(gia_matrix* m) { delete m; }

gia_status gia_matrix_dims(const gia_matrix* m, size_t* rows, size_t* cols) {
  return guarded([&] {
    need(m, "matrix");
    need(rows, "output");
    need(cols, "output");
    *rows = m->m.rows();
    *cols = m->m.cols();
    return GIA_OK;
  });
}

gia_status gia_matrix_entry(const gia_matrix* m, size_t i, size_t j, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "output");
    gia::require(i < m->m.rows() && j < m->m.cols(), gia::ErrorCode::InvalidArgument, "matrix index out of range");
    *out = dup(m->m(i, j).get_str());
    return GIA_OK;
  });
}

gia_status gia_matrix_csv(const gia_matrix* m, char** out) {
  return guarded([&] {
    need(m, "matrix");
    need(out, "output");
    *out = dup(m->m.to_csv());
    return GIA_OK;
  });
}

gia_status gia_run(const char* command, const char* request_json, const char* format, char** out) {
  return guarded([&] {
    need(command, "command");
    need(out, "output");
    *out = nullptr;
    const gia::Json request =
        request_json && *request_json ? gia::Json::parse(request_json) : gia::Json::object();
    const gia::CommandResult r = gia::run_command(command, request, format ? format : "json");
    *out = dup(r.text);
    if (r.passed) return GIA_OK;
    last_error = std::string(command) + ": check failed";
    return GIA_ERR_CHECK_FAILED;
  });
}

gia_status gia_product(const gia_graph* a, const gia_graph* b, int n, const char* method, char** out) {
  return guarded([&] {
    need(a, "graph");
    need(b, "graph");
    need(out, "output");
    gia::Json req = {{"a", gia::emit_graph6(a->g)}, {"b", gia::emit_graph6(b->g)}, {"method", method ? method : "kocay"}};
    if (n > 0) req["n"] = n;
    *out = dup(gia::run_command("product", req, "json").text);
    return GIA_OK;
  });
}

gia_status gia_selftest(int criterion, const char* cache_dir, char** out) {
  gia::Json req = gia::Json::object();
  if (criterion > 0) req["criterion"] = criterion;
  if (cache_dir) req["cache_dir"] = cache_dir;
  return gia_run("selftest", req.dump().c_str(), "json", out);
}

}  // extern "C"
