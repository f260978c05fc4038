#include "forbconf/forbconf.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "forbconf/analysis.hpp"
#include "forbconf/claims.hpp"
#include "forbconf/constructions.hpp"
#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"
#include "forbconf/family_spec.hpp"
#include "forbconf/search.hpp"
#include "forbconf/turan.hpp"

struct fc_matrix {
  forbconf::Matrix m;
};

struct fc_family {
  std::vector<forbconf::Configuration> members;
};

struct fc_search_result {
  forbconf::SearchResult r;
};

namespace {

thread_local std::string last_error;

fc_status code_of(forbconf::ErrorCode c) {
  switch (c) {
    case forbconf::ErrorCode::invalid_argument: return FC_INVALID_ARGUMENT;
    case forbconf::ErrorCode::out_of_range: return FC_OUT_OF_RANGE;
    case forbconf::ErrorCode::parse_error: return FC_PARSE_ERROR;
    case forbconf::ErrorCode::limit_exceeded: return FC_LIMIT_EXCEEDED;
    case forbconf::ErrorCode::precondition: return FC_PRECONDITION;
    case forbconf::ErrorCode::internal: return FC_INTERNAL;
  }
  return FC_INTERNAL;
}

template <class F>
fc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return FC_OK;
  } catch (const forbconf::Error& e) {
    last_error = e.what();
    return code_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return FC_LIMIT_EXCEEDED;
  } catch (const std::exception& e) {
    last_error = e.what();
    return FC_INTERNAL;
  }
}

fc_status null_argument(const char* what) {
  last_error = std::string("null argument: ") + what;
  return FC_NULL_ARGUMENT;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

forbconf::SearchOptions to_options(const fc_search_options* o) {
  forbconf::SearchOptions so;
  if (!o) return so;
  so.time_budget = std::chrono::milliseconds(o->time_budget_ms);
  so.symmetry_pruning = o->symmetry_pruning != 0;
  if (o->min_sum >= 0) so.universe.min_sum = static_cast<std::size_t>(o->min_sum);
  if (o->max_sum >= 0) so.universe.max_sum = static_cast<std::size_t>(o->max_sum);
  return so;
}

forbconf::SimpleMatrix simple_of(const fc_matrix* a) { return forbconf::SimpleMatrix(a->m); }

forbconf::Hypergraph hypergraph_of(std::size_t k, std::size_t vertices, const size_t* edges, size_t count) {
  forbconf::Hypergraph h;
  h.vertices = vertices;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::size_t> e(edges + i * k, edges + (i + 1) * k);
    for (auto v : e)
      if (v >= vertices) forbconf::fail(forbconf::ErrorCode::out_of_range, "edge vertex " + std::to_string(v) + " out of range");
    std::sort(e.begin(), e.end());
    h.edges.push_back(std::move(e));
  }
  return h;
}

std::string matrix_block(const char* title, const forbconf::Matrix& m) {
  std::ostringstream out;
  out << title << " (" << m.rows() << "x" << m.cols() << ")\n" << m.to_text() << "\n";
  return out.str();
}

}  // namespace

extern "C" {

const char* fc_last_error(void) { return last_error.c_str(); }

const char* fc_status_name(fc_status status) {
  switch (status) {
    case FC_OK: return "ok";
    case FC_INVALID_ARGUMENT: return "invalid argument";
    case FC_OUT_OF_RANGE: return "out of range";
    case FC_PARSE_ERROR: return "parse error";
    case FC_LIMIT_EXCEEDED: return "limit exceeded";
    case FC_PRECONDITION: return "precondition failed";
    case FC_INTERNAL: return "internal error";
    case FC_NULL_ARGUMENT: return "null argument";
  }
  return "unknown status";
}

void fc_string_free(char* s) { std::free(s); }

const char* fc_spec_grammar(void) { return forbconf::kSpecGrammar; }

fc_status fc_matrix_parse(const char* text, fc_matrix** out) {
  if (!text || !out) return null_argument("text/out");
  return guarded([&] { *out = new fc_matrix{forbconf::Matrix::parse_text(text)}; });
}

fc_status fc_matrix_from_spec(const char* spec, fc_matrix** out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] { *out = new fc_matrix{forbconf::parse_spec(spec)}; });
}

void fc_matrix_free(fc_matrix* m) { delete m; }

size_t fc_matrix_rows(const fc_matrix* m) { return m ? m->m.rows() : 0; }
size_t fc_matrix_cols(const fc_matrix* m) { return m ? m->m.cols() : 0; }

fc_status fc_matrix_get(const fc_matrix* m, size_t row, size_t col, int* value) {
  if (!m || !value) return null_argument("matrix/value");
  return guarded([&] {
    if (row >= m->m.rows() || col >= m->m.cols())
      forbconf::fail(forbconf::ErrorCode::out_of_range, "entry (" + std::to_string(row) + "," + std::to_string(col) + ") outside matrix");
    *value = m->m.at(row, col) ? 1 : 0;
  });
}

fc_status fc_matrix_to_text(const fc_matrix* m, char** text) {
  if (!m || !text) return null_argument("matrix/text");
  return guarded([&] { *text = copy_string(m->m.to_text()); });
}

fc_status fc_matrix_complement(const fc_matrix* m, fc_matrix** out) {
  if (!m || !out) return null_argument("matrix/out");
  return guarded([&] { *out = new fc_matrix{forbconf::complement(m->m)}; });
}

fc_status fc_matrix_is_simple(const fc_matrix* m, int* simple) {
  if (!m || !simple) return null_argument("matrix/simple");
  return guarded([&] { *simple = m->m.is_simple() ? 1 : 0; });
}

fc_status fc_matrix_canonical_key(const fc_matrix* m, char** key) {
  if (!m || !key) return null_argument("matrix/key");
  return guarded([&] { *key = copy_string(forbconf::canonicalize(m->m).canon_key()); });
}

fc_status fc_contains(const fc_matrix* f, const fc_matrix* a, int* contained, char** certificate) {
  if (!f || !a || !contained) return null_argument("f/a/contained");
  return guarded([&] {
    const auto cert = forbconf::contains(f->m, a->m);
    std::string text;
    if (cert) {
      text = cert->to_text();
    } else {
      text = forbconf::Certificate::avoidance("every injection of " + std::to_string(f->m.rows()) + " rows into " +
                                              std::to_string(a->m.rows()))
                 .to_text();
    }
    char* copy = certificate ? copy_string(text) : nullptr;
    *contained = cert ? 1 : 0;
    if (certificate) *certificate = copy;
  });
}

fc_status fc_family_parse(const char* spec, fc_family** out) {
  if (!spec || !out) return null_argument("spec/out");
  return guarded([&] { *out = new fc_family{forbconf::parse_family(spec)}; });
}

void fc_family_free(fc_family* family) { delete family; }

size_t fc_family_size(const fc_family* family) { return family ? family->members.size() : 0; }

void fc_search_options_init(fc_search_options* opts) {
  if (!opts) return;
  opts->time_budget_ms = 0;
  opts->symmetry_pruning = 1;
  opts->min_sum = -1;
  opts->max_sum = -1;
}

fc_status fc_forb(size_t m, const fc_family* family, const fc_search_options* opts, fc_search_result** out) {
  if (!family || !out) return null_argument("family/out");
  return guarded([&] { *out = new fc_search_result{forbconf::forb_exact(m, family->members, to_options(opts))}; });
}

void fc_search_result_free(fc_search_result* r) { delete r; }
size_t fc_search_result_value(const fc_search_result* r) { return r ? r->r.value : 0; }

fc_search_status fc_search_result_status(const fc_search_result* r) {
  if (!r) return FC_SEARCH_TIMEOUT;
  switch (r->r.status) {
    case forbconf::SearchStatus::exact: return FC_SEARCH_EXACT;
    case forbconf::SearchStatus::lower_bound_only: return FC_SEARCH_LOWER_BOUND_ONLY;
    case forbconf::SearchStatus::timeout: return FC_SEARCH_TIMEOUT;
  }
  return FC_SEARCH_TIMEOUT;
}

double fc_search_result_seconds(const fc_search_result* r) { return r ? r->r.elapsed.count() : 0.0; }
uint64_t fc_search_result_nodes(const fc_search_result* r) { return r ? r->r.stats.nodes : 0; }

fc_status fc_search_result_witness(const fc_search_result* r, fc_matrix** out) {
  if (!r || !out) return null_argument("result/out");
  return guarded([&] { *out = new fc_matrix{r->r.witness.matrix()}; });
}

const char* fc_search_status_name(fc_search_status s) {
  switch (s) {
    case FC_SEARCH_EXACT: return forbconf::to_string(forbconf::SearchStatus::exact);
    case FC_SEARCH_LOWER_BOUND_ONLY: return forbconf::to_string(forbconf::SearchStatus::lower_bound_only);
    case FC_SEARCH_TIMEOUT: return forbconf::to_string(forbconf::SearchStatus::timeout);
  }
  return "unknown";
}

fc_status fc_slope(const fc_family* family, size_t m_lo, size_t m_hi, const fc_search_options* opts, char** report) {
  if (!family || !report) return null_argument("family/report");
  return guarded([&] {
    const auto s = forbconf::slope_estimate(family->members, m_lo, m_hi, to_options(opts));
    std::ostringstream out;
    char buf[64];
    out << "m,value,status,residual\n";
    for (const auto& p : s.points) {
      std::snprintf(buf, sizeof buf, "%.3f", p.residual);
      out << p.m << "," << p.value << "," << forbconf::to_string(p.status) << "," << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "%.3f", s.slope);
    out << "slope " << buf;
    std::snprintf(buf, sizeof buf, "%.3f", s.intercept);
    out << " intercept " << buf << " (" << s.label << ")\n";
    *report = copy_string(out.str());
  });
}

fc_status fc_construct(const char* name, size_t m, size_t k, size_t l, fc_matrix** out) {
  if (!name || !out) return null_argument("name/out");
  return guarded([&] { *out = new fc_matrix{forbconf::extremal_construction(name, m, {k, l}).matrix()}; });
}

fc_status fc_construction_size(const char* name, size_t m, size_t k, size_t l, size_t* size) {
  if (!name || !size) return null_argument("name/size");
  return guarded([&] { *size = forbconf::extremal_construction_size(name, m, {k, l}); });
}

fc_status fc_construction_family(const char* name, size_t k, size_t l, char** family) {
  if (!name || !family) return null_argument("name/family");
  return guarded([&] { *family = copy_string(forbconf::extremal_construction_family(name, {k, l})); });
}

fc_status fc_construction_list(char** text) {
  if (!text) return null_argument("text");
  return guarded([&] {
    std::ostringstream out;
    for (const auto& c : forbconf::extremal_construction_list())
      out << c.name << "\tparams " << (c.params.empty() ? "-" : c.params) << "\tavoids " << c.family << "\tsize "
          << c.size << "\n";
    *text = copy_string(out.str());
  });
}

fc_status fc_ex_graph(size_t m, size_t vertices, const size_t* edges, size_t edge_count, size_t* value,
                      char** witness) {
  if ((!edges && edge_count) || !value) return null_argument("edges/value");
  return guarded([&] {
    const auto r = forbconf::ex_graph(m, hypergraph_of(2, vertices, edges, edge_count));
    char* copy = witness ? copy_string(r.witness.to_text()) : nullptr;
    *value = r.value;
    if (witness) *witness = copy;
  });
}

fc_status fc_ex_hypergraph(size_t m, size_t k, size_t vertices, const size_t* edges, size_t edge_count, size_t* value,
                           char** witness) {
  if ((!edges && edge_count) || !value) return null_argument("edges/value");
  return guarded([&] {
    if (k == 0) forbconf::fail(forbconf::ErrorCode::invalid_argument, "uniformity must be positive");
    const auto r = forbconf::ex_hypergraph(m, k, hypergraph_of(k, vertices, edges, edge_count));
    char* copy = witness ? copy_string(r.witness.to_text()) : nullptr;
    *value = r.value;
    if (witness) *witness = copy;
  });
}

fc_status fc_zarankiewicz(size_t r, size_t s, size_t* value, char** witness) {
  if (!value) return null_argument("value");
  return guarded([&] {
    const auto g = forbconf::zarankiewicz_graph(r, s);
    std::ostringstream out;
    out << "left " << g.left << " right " << g.right << " edges " << g.edges.size() << "\n";
    for (const auto& [i, j] : g.edges) out << i << " " << j << "\n";
    char* copy = witness ? copy_string(out.str()) : nullptr;
    *value = g.edges.size();
    if (witness) *witness = copy;
  });
}

fc_status fc_induction_decompose(const fc_matrix* a, size_t row, char** report) {
  if (!a || !report) return null_argument("matrix/report");
  return guarded([&] {
    const auto parts = forbconf::induction_decompose(simple_of(a), row);
    std::ostringstream out;
    out << "row " << row << ": |B|=" << parts.b.cols() << " |C|=" << parts.c.cols() << " |D|=" << parts.d.cols()
        << " total " << parts.b.cols() + 2 * parts.c.cols() + parts.d.cols() << "\n\n";
    out << matrix_block("B", parts.b) << matrix_block("C", parts.c) << matrix_block("D", parts.d);
    *report = copy_string(out.str());
  });
}

fc_status fc_q3_stability(const fc_matrix* a, size_t t, size_t low_ones, double* ratio, char** report) {
  if (!a) return null_argument("matrix");
  return guarded([&] {
    forbconf::StabilityParams p;
    p.low_ones = low_ones;
    const auto d = forbconf::q3_stability_decompose(simple_of(a), t, p);
    if (ratio) *ratio = d.ratio();
    if (report) *report = copy_string(d.to_text());
  });
}

fc_status fc_q9_classify(const fc_matrix* a, size_t t, fc_q9_outcome* outcome, char** report) {
  if (!a || !outcome) return null_argument("matrix/outcome");
  return guarded([&] {
    const auto c = forbconf::q9_classify(simple_of(a), t);
    std::string text;
    fc_q9_outcome o = FC_Q9_UNCLASSIFIED;
    switch (c.outcome) {
      case forbconf::Q9Classification::Outcome::partition:
        o = FC_Q9_PARTITION;
        text = c.partition.to_text();
        break;
      case forbconf::Q9Classification::Outcome::refuted:
        o = FC_Q9_REFUTED;
        text = "contains Q9\n" + (c.refutation ? c.refutation->to_text() : std::string());
        break;
      case forbconf::Q9Classification::Outcome::unclassified:
        text = "no type-1 or type-2 partition of the t-columns\n";
        break;
    }
    char* copy = report ? copy_string(text) : nullptr;
    *outcome = o;
    if (report) *report = copy;
  });
}

fc_status fc_find_tik(const fc_matrix* a, size_t t, size_t* k) {
  if (!a || !k) return null_argument("matrix/k");
  return guarded([&] { *k = forbconf::find_tIk(a->m, t).k; });
}

void fc_verify_options_init(fc_verify_options* opts) {
  if (!opts) return;
  static const forbconf::VerifyOptions defaults;
  opts->sizes = defaults.sizes.data();
  opts->size_count = defaults.sizes.size();
  opts->max_contain_size = defaults.max_contain_size;
  opts->search_budget_ms = static_cast<uint64_t>(defaults.search_budget.count());
  opts->max_m = defaults.max_m;
  opts->with_details = 0;
}

fc_status fc_verify(const char* claims_text, const char* group, const fc_verify_options* opts, char** report,
                    size_t* failures) {
  if (!report) return null_argument("report");
  return guarded([&] {
    forbconf::VerifyOptions vo;
    bool details = false;
    if (opts) {
      if (opts->size_count && !opts->sizes) forbconf::fail(forbconf::ErrorCode::invalid_argument, "sizes missing");
      vo.sizes.assign(opts->sizes, opts->sizes + opts->size_count);
      vo.max_contain_size = opts->max_contain_size;
      vo.search_budget = std::chrono::milliseconds(opts->search_budget_ms);
      vo.max_m = opts->max_m;
      details = opts->with_details != 0;
    }
    auto claims = claims_text ? forbconf::parse_claims(claims_text) : forbconf::builtin_claims();
    if (group) std::erase_if(claims, [&](const forbconf::Claim& c) { return c.group != group; });
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto& c : claims) {
      const auto r = c.check(vo);
      out << r.line() << "\n";
      if (r.status == forbconf::ClaimStatus::fail) ++failed;
      if (details && !r.detail.empty()) {
        std::istringstream lines(r.detail);
        for (std::string line; std::getline(lines, line);) out << "    " << line << "\n";
      }
    }
    char* copy = copy_string(out.str());
    *report = copy;
    if (failures) *failures = failed;
  });
}

fc_status fc_table3(size_t m_lo, size_t m_hi, uint64_t search_budget_ms, size_t factor_size, char** markdown) {
  if (!markdown) return null_argument("markdown");
  return guarded([&] {
    if (m_lo == 0 || m_lo > m_hi) forbconf::fail(forbconf::ErrorCode::invalid_argument, "bad m range");
    forbconf::Table3Options o;
    o.m_lo = m_lo;
    o.m_hi = m_hi;
    o.search_budget = std::chrono::milliseconds(search_budget_ms);
    o.factor_size = factor_size;
    *markdown = copy_string(forbconf::table3_markdown(o));
  });
}

}  // extern "C"
