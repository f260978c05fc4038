#include "forbconf/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "forbconf/containment.hpp"
#include "forbconf/error.hpp"

namespace forbconf {

std::string Block::to_string() const {
  switch (kind) {
    case BlockKind::identity: return "I(" + std::to_string(k) + ")";
    case BlockKind::identity_complement: return "Ic(" + std::to_string(k) + ")";
    case BlockKind::triangular: return "T(" + std::to_string(k) + ")";
    case BlockKind::ones: return "1(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case BlockKind::zeros: return "0(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case BlockKind::literal: return name.empty() ? "lit" : name;
  }
  return "?";
}

std::string ProductExpr::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += " x ";
    s += factors[i].to_string();
  }
  return s;
}

Block make_block(BlockKind kind, std::size_t k, std::size_t l) {
  Block b;
  b.kind = kind;
  b.k = k;
  b.l = l;
  return b;
}

Block b01() {
  Block b;
  b.kind = BlockKind::literal;
  b.k = 1;
  b.l = 2;
  b.literal = Matrix::from_rows({"01"});
  b.name = "b01";
  return b;
}

Matrix block(BlockKind kind, std::size_t k, std::size_t l) {
  if (k < 1) fail(ErrorCode::invalid_argument, "block size must be at least 1");
  Matrix out(k);
  switch (kind) {
    case BlockKind::identity:
    case BlockKind::identity_complement:
      for (std::size_t i = 0; i < k; ++i) {
        BitColumn c(k);
        c.set(i);
        out.append(kind == BlockKind::identity ? c : c.complemented());
      }
      break;
    case BlockKind::triangular:
      for (std::size_t i = 0; i < k; ++i) {
        BitColumn c(k);
        for (std::size_t r = 0; r <= i; ++r) c.set(r);
        out.append(c);
      }
      break;
    case BlockKind::ones:
    case BlockKind::zeros:
      if (l < 1) fail(ErrorCode::invalid_argument, "block column count must be at least 1");
      for (std::size_t j = 0; j < l; ++j) out.append(kind == BlockKind::ones ? BitColumn::ones(k) : BitColumn(k));
      break;
    case BlockKind::literal:
      fail(ErrorCode::invalid_argument, "literal blocks carry their own matrix");
  }
  return out;
}

Matrix block_matrix(const Block& b) {
  if (b.kind == BlockKind::literal) return b.literal;
  return block(b.kind, b.k, b.l);
}

Matrix product(const std::vector<Matrix>& factors, std::size_t cap) {
  if (factors.empty()) fail(ErrorCode::invalid_argument, "product needs at least one factor");
  std::size_t total = 1;
  std::size_t rows = 0;
  for (const auto& f : factors) {
    if (f.cols() == 0) {
      total = 0;
    } else if (total > cap / f.cols() + 1) {
      fail(ErrorCode::limit_exceeded, "product column count exceeds the cap of " + std::to_string(cap));
    } else {
      total *= f.cols();
    }
    rows += f.rows();
  }
  if (total > cap) fail(ErrorCode::limit_exceeded, "product column count exceeds the cap of " + std::to_string(cap));

  std::vector<BitColumn> cols{BitColumn(0)};
  for (const auto& f : factors) {
    std::vector<BitColumn> next;
    next.reserve(cols.size() * f.cols());
    for (const auto& top : cols)
      for (const auto& c : f.columns()) next.push_back(top.stacked(c));
    cols = std::move(next);
  }
  return Matrix(rows, std::move(cols));
}

Matrix product(const ProductExpr& expr, std::size_t cap) {
  std::vector<Matrix> factors;
  factors.reserve(expr.factors.size());
  for (const auto& b : expr.factors) factors.push_back(block_matrix(b));
  return product(factors, cap);
}

SimpleMatrix graph_product(const SimpleMatrix& a, const SimpleMatrix& b, const BipartiteGraph& g) {
  if (g.left != a.cols() || g.right != b.cols())
    fail(ErrorCode::invalid_argument, "graph vertex classes must match the column counts");
  Matrix out(a.rows() + b.rows());
  for (const auto& [i, j] : g.edges) {
    if (i >= g.left || j >= g.right) fail(ErrorCode::out_of_range, "graph edge endpoint out of range");
    out.append(a.column(i).stacked(b.column(j)));
  }
  return SimpleMatrix(std::move(out));
}

namespace {

Matrix q3_matrix(std::size_t t, bool with_top) {
  if (t < 2) fail(ErrorCode::invalid_argument, "Q3(t) needs t >= 2");
  Matrix m(2);
  m.append(BitColumn::from_string("00"));
  for (std::size_t i = 0; i < t; ++i) m.append(BitColumn::from_string("10"));
  for (std::size_t i = 0; i < t; ++i) m.append(BitColumn::from_string("01"));
  if (with_top) m.append(BitColumn::from_string("11"));
  return m;
}

}  // namespace

Configuration q3t(std::size_t t) { return canonicalize(q3_matrix(t, true)); }
Configuration q3t0(std::size_t t) { return canonicalize(q3_matrix(t, false)); }

Matrix times_identity(std::size_t t, std::size_t k) {
  Matrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    BitColumn c(k);
    c.set(i);
    for (std::size_t j = 0; j < t; ++j) out.append(c);
  }
  return out;
}

namespace {

std::map<std::string, CatalogEntry> build_catalog() {
  struct Raw {
    const char* name;
    const char* group;
    std::vector<std::string> rows;
  };
  const std::vector<Raw> raw = {
      {"131", "quadratic", {"1", "1", "1"}},
      {"122", "quadratic", {"11", "11"}},
      {"I3", "quadratic", {"100", "010", "001"}},
      {"Q3", "quadratic", {"000111", "011001"}},
      {"Q8", "quadratic", {"0011", "1010", "0101"}},
      {"Q9", "quadratic", {"10", "10", "01", "01"}},
      {"141", "cubic4", {"1", "1", "1", "1"}},
      {"F9", "cubic4", {"100", "010", "001", "001"}},
      {"F10", "cubic4", {"100", "010", "001", "000"}},
      {"F11", "cubic4", {"1010", "1001", "0110", "0101"}},
      {"F12", "cubic4", {"1001", "0101", "0011", "1110"}},
      {"F13", "cubic4", {"1100", "0110", "0101", "0011"}},
      {"F14", "cubic6", {"10", "10", "10", "01", "01", "01"}},
      {"F15", "cubic6", {"100", "010", "001", "011", "101", "110"}},
      {"F16", "cubic6", {"111", "111", "100", "010", "001", "000"}},
      {"F17", "cubic6", {"111", "110", "100", "010", "001", "001"}},
      {"Fh3", "hypergraph", {"111", "011", "101", "110"}},
  };
  std::map<std::string, CatalogEntry> out;
  auto add = [&](const std::string& name, const std::string& group, Matrix m) {
    CatalogEntry e;
    e.name = name;
    e.group = group;
    e.config = canonicalize(m);
    e.matrix = std::move(m);
    out.emplace(name, std::move(e));
  };
  for (const auto& r : raw) add(r.name, r.group, Matrix::from_rows(r.rows));
  add("041", "complement", complement(out.at("141").matrix));
  for (const char* base : {"F9", "F10", "F12", "F16", "F17"})
    add(std::string(base) + "c", "complement", complement(out.at(base).matrix));
  return out;
}

const std::map<std::string, CatalogEntry>& catalog_map() {
  static const std::map<std::string, CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace

const CatalogEntry& catalog(const std::string& name) {
  const auto& entries = catalog_map();
  auto it = entries.find(name);
  if (it == entries.end()) {
    std::string known;
    for (const auto& [n, e] : entries) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorCode::invalid_argument, "unknown catalog name '" + name + "'; known: " + known);
  }
  return it->second;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [n, e] : catalog_map()) names.push_back(n);
  return names;
}

namespace {

BitColumn col_with(std::size_t m, std::initializer_list<std::size_t> ones) {
  BitColumn c(m);
  for (auto r : ones) c.set(r);
  return c;
}

BitColumn col_range(std::size_t m, std::size_t lo, std::size_t hi) {
  BitColumn c(m);
  for (std::size_t r = lo; r < hi; ++r) c.set(r);
  return c;
}

BitColumn all_but(std::size_t m, std::size_t zero_row) {
  BitColumn c = BitColumn::ones(m);
  c.set(zero_row, false);
  return c;
}

std::size_t choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

Configuration ones_config(std::size_t k, std::size_t l) { return canonicalize(block(BlockKind::ones, k, l)); }

struct Recipe {
  std::string params;
  std::function<bool(const ConstructionParams&)> valid;
  std::function<std::size_t(const ConstructionParams&)> min_m;
  std::function<std::size_t(std::size_t, const ConstructionParams&)> size;
  std::function<std::vector<Configuration>(const ConstructionParams&)> family;
  std::function<std::string(const ConstructionParams&)> family_spec;
  std::function<Matrix(std::size_t, const ConstructionParams&)> build;
};

Matrix build_ck(std::size_t k, std::size_t m) {
  Matrix a(m);
  if (k == 2) {
    a.append(BitColumn(m));
    for (std::size_t r = 0; r < m; ++r) a.append(col_with(m, {r}));
  } else if (k == 3) {
    a.append(BitColumn(m));
    a.append(col_with(m, {0}));
    a.append(col_with(m, {1}));
    for (std::size_t j = 1; j < m; ++j) a.append(col_with(m, {0, j}));
  } else {
    // Every column supported on the first three rows with at most two ones,
    // then the 3-columns through rows 0 and 1.
    a.append(BitColumn(m));
    for (std::size_t r = 0; r < 3; ++r) a.append(col_with(m, {r}));
    a.append(col_with(m, {0, 1}));
    a.append(col_with(m, {0, 2}));
    a.append(col_with(m, {1, 2}));
    for (std::size_t r = 2; r < m; ++r) a.append(col_with(m, {0, 1, r}));
  }
  return a;
}

std::size_t ck_offset(std::size_t k) { return k == 2 ? 1 : k == 3 ? 2 : 5; }

Matrix build_q9_smallt(std::size_t k, std::size_t m) {
  Matrix a(m);
  a.append(BitColumn(m));
  for (std::size_t r = 0; r < m; ++r) a.append(col_with(m, {r}));
  for (std::size_t t = 2; t < k; ++t) {
    for (std::size_t j = t - 1; j < m; ++j) {
      BitColumn c = col_range(m, 0, t - 1);
      c.set(j);
      a.append(c);
    }
  }
  return a;
}

std::size_t q9_smallt_size(std::size_t k, std::size_t m) { return 1 + (k - 1) * m - choose2(k - 1); }

// The l-2 columns of sum k+1 shared by both l >= 3 constructions.
void append_q9_wide(Matrix& a, std::size_t k, std::size_t l) {
  const std::size_t m = a.rows();
  for (std::size_t i = 0; i + 2 < l; ++i) {
    BitColumn c = col_range(m, 0, k);
    c.set(k + i);
    a.append(c);
  }
}

const std::map<std::string, Recipe>& recipes() {
  static const std::map<std::string, Recipe> table = [] {
    std::map<std::string, Recipe> r;
    auto q9 = [] { return catalog("Q9").config; };
    auto f9 = [] { return catalog("F9").config; };
    for (std::size_t k : {2, 3, 4}) {
      Recipe c;
      c.params = "";
      c.valid = [](const ConstructionParams&) { return true; };
      c.min_m = [k](const ConstructionParams&) { return k == 2 ? std::size_t{1} : k - 1; };
      c.size = [k](std::size_t m, const ConstructionParams&) { return m + ck_offset(k); };
      c.family = [k, f9](const ConstructionParams&) { return std::vector<Configuration>{ones_config(k, 1), f9()}; };
      c.family_spec = [k](const ConstructionParams&) { return "1(" + std::to_string(k) + ",1),F9"; };
      c.build = [k](std::size_t m, const ConstructionParams&) { return build_ck(k, m); };
      r.emplace("c" + std::to_string(k), std::move(c));
    }
    {
      Recipe c;
      c.params = "k l";
      c.valid = [](const ConstructionParams& p) { return (p.k == 2 || p.k == 3) && p.l >= 2; };
      c.min_m = [](const ConstructionParams& p) { return std::max(p.k + 2, p.l + 1); };
      c.size = [](std::size_t m, const ConstructionParams& p) { return m + ck_offset(p.k + 1) + p.l - 1; };
      c.family = [f9](const ConstructionParams& p) { return std::vector<Configuration>{ones_config(p.k, p.l), f9()}; };
      c.family_spec = [](const ConstructionParams& p) {
        return "1(" + std::to_string(p.k) + "," + std::to_string(p.l) + "),F9";
      };
      c.build = [](std::size_t m, const ConstructionParams& p) {
        Matrix a = build_ck(p.k + 1, m);
        for (std::size_t i = 0; i + 1 < p.l; ++i) a.append(all_but(m, i));
        return a;
      };
      r.emplace("f9_ell", std::move(c));
    }
    {
      Recipe c;
      c.params = "k";
      c.valid = [](const ConstructionParams& p) { return p.k >= 2; };
      c.min_m = [](const ConstructionParams& p) { return 2 * p.k; };
      c.size = [](std::size_t m, const ConstructionParams& p) { return q9_smallt_size(p.k, m); };
      c.family = [q9](const ConstructionParams& p) { return std::vector<Configuration>{q9(), ones_config(p.k, 1)}; };
      c.family_spec = [](const ConstructionParams& p) { return "Q9,1(" + std::to_string(p.k) + ",1)"; };
      c.build = [](std::size_t m, const ConstructionParams& p) { return build_q9_smallt(p.k, m); };
      r.emplace("q9_smallt", std::move(c));
    }
    {
      Recipe c;
      c.params = "k";
      c.valid = [](const ConstructionParams& p) { return p.k >= 2; };
      c.min_m = [](const ConstructionParams& p) { return 2 * (p.k + 1); };
      c.size = [](std::size_t m, const ConstructionParams& p) { return q9_smallt_size(p.k + 1, m) + 1; };
      c.family = [q9](const ConstructionParams& p) { return std::vector<Configuration>{q9(), ones_config(p.k, 2)}; };
      c.family_spec = [](const ConstructionParams& p) { return "Q9,1(" + std::to_string(p.k) + ",2)"; };
      c.build = [](std::size_t m, const ConstructionParams& p) {
        Matrix a = build_q9_smallt(p.k + 1, m);
        a.append(all_but(m, 0));
        return a;
      };
      r.emplace("q9_l2", std::move(c));
    }
    {
      Recipe c;
      c.params = "k l";
      c.valid = [](const ConstructionParams& p) { return p.k >= 2 && p.l >= 3; };
      c.min_m = [](const ConstructionParams& p) { return (p.l + 1) * (p.k + p.l) + p.k + 1; };
      c.size = [](std::size_t m, const ConstructionParams& p) { return q9_smallt_size(p.k + 1, m) + 2 * p.l - 5; };
      c.family = [q9](const ConstructionParams& p) {
        return std::vector<Configuration>{q9(), ones_config(p.k, p.l)};
      };
      c.family_spec = [](const ConstructionParams& p) {
        return "Q9,1(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
      };
      c.build = [](std::size_t m, const ConstructionParams& p) {
        const std::size_t k = p.k;
        const std::size_t l = p.l;
        Matrix a = build_q9_smallt(k + 1, m);
        append_q9_wide(a, k, l);
        // l-3 columns of sum k+l-2: rows 0..k+l-3 except row k-1, plus one
        // private row further down.
        for (std::size_t i = 0; i + 3 < l; ++i) {
          BitColumn c = col_range(m, 0, k + l - 2);
          c.set(k - 1, false);
          c.set(k + l - 2 + i);
          a.append(c);
        }
        return a;
      };
      r.emplace("q9_ell_a", std::move(c));
    }
    {
      Recipe c;
      c.params = "k l";
      c.valid = [](const ConstructionParams& p) {
        return (p.l == 3 && p.k >= 3) || (p.l >= 4 && p.k + 1 >= p.l);
      };
      c.min_m = [](const ConstructionParams& p) { return std::max(2 * (p.k + 1), p.k + p.l); };
      c.size = [](std::size_t m, const ConstructionParams& p) { return q9_smallt_size(p.k + 1, m) + 2 * p.l - 3; };
      c.family = [q9](const ConstructionParams& p) {
        return std::vector<Configuration>{q9(), ones_config(p.k, p.l)};
      };
      c.family_spec = [](const ConstructionParams& p) {
        return "Q9,1(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")";
      };
      c.build = [](std::size_t m, const ConstructionParams& p) {
        Matrix a = build_q9_smallt(p.k + 1, m);
        append_q9_wide(a, p.k, p.l);
        for (std::size_t i = 0; i + 1 < p.l; ++i) a.append(all_but(m, i));
        return a;
      };
      r.emplace("q9_ell_b", std::move(c));
    }
    {
      Recipe c;
      c.params = "";
      c.valid = [](const ConstructionParams&) { return true; };
      c.min_m = [](const ConstructionParams&) { return std::size_t{3}; };
      c.size = [](std::size_t m, const ConstructionParams&) { return 2 * m + 1; };
      c.family = [q9](const ConstructionParams&) { return std::vector<Configuration>{ones_config(2, 2), q9()}; };
      c.family_spec = [](const ConstructionParams&) { return std::string("1(2,2),Q9"); };
      c.build = [](std::size_t m, const ConstructionParams&) {
        Matrix a(m);
        a.append(BitColumn(m));
        for (std::size_t r = 0; r < m; ++r) a.append(col_with(m, {r}));
        for (std::size_t j = 1; j < m; ++j) a.append(col_with(m, {0, j}));
        a.append(col_range(m, 1, m));
        return a;
      };
      r.emplace("sec5_counterexample", std::move(c));
    }
    return r;
  }();
  return table;
}

const Recipe& recipe(const std::string& name, const ConstructionParams& p) {
  auto it = recipes().find(name);
  if (it == recipes().end()) {
    std::string known;
    for (const auto& [n, r] : recipes()) known += (known.empty() ? "" : ", ") + n;
    fail(ErrorCode::invalid_argument, "unknown construction '" + name + "'; known: " + known);
  }
  if (!it->second.valid(p))
    fail(ErrorCode::invalid_argument, "parameters k=" + std::to_string(p.k) + " l=" + std::to_string(p.l) +
                                          " are not valid for construction '" + name + "'");
  return it->second;
}

}  // namespace

SimpleMatrix extremal_construction(const std::string& name, std::size_t m, ConstructionParams params) {
  const Recipe& r = recipe(name, params);
  const std::size_t lo = r.min_m(params);
  if (m < lo)
    fail(ErrorCode::precondition, "construction '" + name + "' needs m >= " + std::to_string(lo) + ", got " +
                                      std::to_string(m));
  SimpleMatrix a(r.build(m, params));
  const std::size_t expected = r.size(m, params);
  if (a.cols() != expected)
    fail(ErrorCode::internal, "construction '" + name + "' has " + std::to_string(a.cols()) + " columns, expected " +
                                  std::to_string(expected));
  if (auto hit = contains_any(r.family(params), a))
    fail(ErrorCode::internal, "construction '" + name + "' at m=" + std::to_string(m) + " contains family member " +
                                  std::to_string(hit->first) + " of " + r.family_spec(params));
  return a;
}

std::size_t extremal_construction_size(const std::string& name, std::size_t m, ConstructionParams params) {
  return recipe(name, params).size(m, params);
}

std::string extremal_construction_family(const std::string& name, ConstructionParams params) {
  return recipe(name, params).family_spec(params);
}

std::size_t extremal_construction_min_m(const std::string& name, ConstructionParams params) {
  return recipe(name, params).min_m(params);
}

std::vector<ConstructionInfo> extremal_construction_list() {
  const std::map<std::string, std::string> sizes = {
      {"c2", "m+1"},
      {"c3", "m+2"},
      {"c4", "m+5"},
      {"f9_ell", "m+c(k+1)+l-1"},
      {"q9_smallt", "1+(k-1)m-C(k-1,2)"},
      {"q9_l2", "2+km-C(k,2)"},
      {"q9_ell_a", "1+km-C(k,2)+2l-5"},
      {"q9_ell_b", "1+km-C(k,2)+2l-3"},
      {"sec5_counterexample", "2m+1"},
  };
  std::vector<ConstructionInfo> out;
  for (const auto& [n, r] : recipes()) {
    ConstructionParams p{3, 3};
    std::string fam = r.valid(p) ? r.family_spec(p) : r.family_spec(ConstructionParams{2, 2});
    out.push_back({n, r.params, fam, sizes.at(n)});
  }
  return out;
}

SimpleMatrix incidence_matrix(const Hypergraph& h) {
  std::set<std::vector<std::size_t>> seen;
  Matrix out(h.vertices);
  for (auto e : h.edges) {
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      fail(ErrorCode::invalid_argument, "edge repeats a vertex");
    if (!seen.insert(e).second) fail(ErrorCode::invalid_argument, "repeated edge in hypergraph");
    BitColumn c(h.vertices);
    for (auto v : e) {
      if (v >= h.vertices) fail(ErrorCode::out_of_range, "edge vertex out of range");
      c.set(v);
    }
    out.append(c);
  }
  return SimpleMatrix(std::move(out));
}

}  // namespace forbconf
