#include "koszul_lift/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "koszul_lift/error.hpp"

namespace koszul_lift {

namespace {

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  throw Error(Errc::parse, path + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) bad(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  const auto v = j.get<long long>();
  if (v < -1000000 || v > 1000000) bad(path, "integer out of range");
  return static_cast<int>(v);
}

std::vector<std::string> string_list(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_string(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

Poly parse_entry(const GradedRing& ring, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return ring.constant(j.get<long>());
  const std::string text = as_string(j, path);
  try {
    return ring.parse(text);
  } catch (const Error& e) {
    bad(path, e.what());
  }
}

PolyMatrix matrix_from_json(const GradedRing& ring, const Json& j, std::size_t rows,
                            std::size_t cols, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array of rows");
  PolyMatrix m(rows, cols);
  if (rows == 0) {
    if (!j.empty()) bad(path, "expected no rows");
    return m;
  }
  if (j.size() != rows)
    bad(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!j[r].is_array()) bad(rp, "expected an array");
    if (j[r].size() != cols)
      bad(rp, "expected " + std::to_string(cols) + " entries, found " + std::to_string(j[r].size()));
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = parse_entry(ring, j[r][c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Field field_from_name(const std::string& name, const std::string& path) {
  if (name == "QQ") return Field::rationals();
  if (name.size() > 4 && name.rfind("GF(", 0) == 0 && name.back() == ')') {
    const std::string digits = name.substr(3, name.size() - 4);
    if (!digits.empty() && digits.size() <= 10 &&
        std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      try {
        return Field::prime(static_cast<std::uint32_t>(std::stoull(digits)));
      } catch (const Error& e) {
        bad(path, e.what());
      } catch (const std::out_of_range&) {
        bad(path, "characteristic out of range");
      }
    }
  }
  bad(path, "unknown field \"" + name + "\" (use \"QQ\" or \"GF(p)\")");
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - s.size(), ' ');
}

std::vector<std::size_t> boundaries(const std::vector<std::size_t>& groups) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) out.push_back(at += groups[i]);
  return out;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(Errc::parse, source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                 ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::parse, path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

std::shared_ptr<const GradedRing> ring_from_json(const Json& j) {
  const Field f = field_from_name(as_string(field(j, "ring", "field"), "ring.field"), "ring.field");
  const auto vars = string_list(field(j, "ring", "vars"), "ring.vars");
  std::vector<std::string> rel, seq;
  if (j.contains("J")) rel = string_list(j["J"], "ring.J");
  if (j.contains("f")) seq = string_list(j["f"], "ring.f");
  for (const auto& key : {"J", "f"}) {
    if (!j.contains(key)) continue;
    const std::string path = std::string("ring.") + key;
    const auto& list = key == std::string("J") ? rel : seq;
    // Parse each entry on its own first so that errors carry their index.
    try {
      const GradedRing bare(f, vars);
      for (std::size_t i = 0; i < list.size(); ++i) {
        try {
          bare.parse(list[i]);
        } catch (const Error& e) {
          bad(path + "[" + std::to_string(i) + "]", e.what());
        }
      }
    } catch (const Error& e) {
      if (e.code() == Errc::parse) throw;
      bad("ring.vars", e.what());
    }
  }
  try {
    return std::make_shared<const GradedRing>(GradedRing::from_strings(f, vars, rel, seq));
  } catch (const Error& e) {
    if (e.code() == Errc::parse) throw;
    throw Error(e.code(), std::string("ring: ") + e.what());
  }
}

Json ring_to_json(const GradedRing& ring) {
  Json j;
  j["field"] = ring.field().name();
  j["vars"] = ring.variables();
  Json rel = Json::array(), seq = Json::array();
  for (const auto& m : ring.relations()) rel.push_back(ring.format(m));
  for (const auto& f : ring.sequence()) seq.push_back(ring.format(f));
  j["J"] = rel;
  j["f"] = seq;
  return j;
}

FreeComplex complex_from_json(std::shared_ptr<const GradedRing> ring, const Json& j) {
  const std::string over = as_string(field(j, "complex", "over"), "complex.over");
  Base base = Base::R;
  bool lift = false;
  if (over == "Q") {
    base = Base::Q;
  } else if (over == "lift") {
    base = Base::Q;
    lift = true;
  } else if (over != "R") {
    bad("complex.over", "expected \"R\", \"Q\" or \"lift\"");
  }
  const auto window = int_list(field(j, "complex", "window"), "complex.window");
  if (window.size() != 2 || window[0] > window[1])
    bad("complex.window", "expected [lo, hi] with lo <= hi");
  const int lo = window[0], hi = window[1];

  std::map<int, std::vector<int>> twists;
  const Json& tj = field(j, "complex", "twists");
  if (!tj.is_object()) bad("complex.twists", "expected an object keyed by position");
  for (const auto& [key, value] : tj.items()) {
    const std::string path = "complex.twists.\"" + key + "\"";
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(path, "position keys must be integers");
    }
    if (n < lo || n > hi) bad(path, "position outside the window");
    twists[n] = int_list(value, path);
  }
  auto rank = [&](int n) -> std::size_t {
    auto it = twists.find(n);
    return it == twists.end() ? 0 : it->second.size();
  };

  std::map<int, PolyMatrix> diffs;
  if (j.contains("diffs")) {
    const Json& dj = j["diffs"];
    if (!dj.is_object()) bad("complex.diffs", "expected an object keyed by position");
    for (const auto& [key, value] : dj.items()) {
      const std::string path = "complex.diffs.\"" + key + "\"";
      int n = 0;
      try {
        std::size_t used = 0;
        n = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        bad(path, "position keys must be integers");
      }
      if (n <= lo || n > hi) bad(path, "differential outside (lo, hi]");
      diffs.emplace(n, matrix_from_json(*ring, value, rank(n - 1), rank(n), path));
    }
  }
  try {
    return FreeComplex(std::move(ring), base, lift, lo, hi, std::move(twists), std::move(diffs));
  } catch (const Error& e) {
    throw Error(e.code(), std::string("complex: ") + e.what());
  }
}

Json matrix_to_json(const GradedRing& ring, const PolyMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : to_strings(ring, m)) rows.push_back(row);
  return rows;
}

Json complex_to_json(const FreeComplex& c) {
  Json j;
  j["over"] = c.over() == Base::R ? "R" : (c.is_lift() ? "lift" : "Q");
  j["window"] = {c.lo(), c.hi()};
  Json twists = Json::object(), diffs = Json::object();
  for (int n = c.lo(); n <= c.hi(); ++n) twists[std::to_string(n)] = c.twists(n);
  for (int n = c.lo() + 1; n <= c.hi(); ++n)
    diffs[std::to_string(n)] = matrix_to_json(c.ring(), c.differential(n));
  j["twists"] = twists;
  j["diffs"] = diffs;
  return j;
}

Presentation presentation_from_json(const GradedRing& ring, const Json& j) {
  Presentation p;
  p.twists = int_list(field(j, "presentation", "twists"), "presentation.twists");
  const Json& rel = j.contains("relations") ? j["relations"] : Json::array();
  if (!rel.is_array()) bad("presentation.relations", "expected an array of rows");
  std::size_t cols = 0;
  if (!rel.empty()) {
    if (!rel[0].is_array()) bad("presentation.relations[0]", "expected an array");
    cols = rel[0].size();
  }
  if (!rel.empty() || p.twists.empty())
    p.relations = matrix_from_json(ring, rel, p.twists.size(), cols, "presentation.relations");
  else
    p.relations = PolyMatrix(p.twists.size(), 0);
  return p;
}

Json family_to_json(const HomotopyFamily& h) {
  Json j;
  j["level"] = h.level();
  Json maps = Json::object();
  for (const auto& [alpha, positions] : h.maps()) {
    if (alpha.is_one()) continue;  // the differential of the lift
    Json per = Json::object();
    for (const auto& [n, m] : positions) per[std::to_string(n)] = matrix_to_json(h.ring(), m);
    maps[alpha.to_string()] = per;
  }
  j["maps"] = maps;
  return j;
}

Json product_to_json(const ProductComplex& p) {
  Json j;
  j["complex"] = complex_to_json(p.complex);
  j["codim"] = p.codim;
  j["complete_window"] = {p.complete_lo, p.complete_hi};
  Json summands = Json::object();
  for (const auto& [n, list] : p.summands) {
    Json arr = Json::array();
    for (const auto& s : list)
      arr.push_back({{"koszul_degree", s.koszul_degree},
                     {"alpha", s.alpha.to_string()},
                     {"position", s.position},
                     {"rank", s.rank},
                     {"offset", s.offset}});
    summands[std::to_string(n)] = arr;
  }
  j["summands"] = summands;
  return j;
}

std::string render_matrix(const GradedRing& ring, const PolyMatrix& m,
                          const std::vector<std::size_t>& row_groups,
                          const std::vector<std::size_t>& col_groups) {
  if (m.rows() == 0 || m.cols() == 0)
    return "(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " zero)\n";
  const auto cells = to_strings(ring, m);
  std::vector<std::size_t> width(m.cols(), 1);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < m.cols(); ++c) width[c] = std::max(width[c], row[c].size());
  const auto col_cuts = boundaries(col_groups);
  const auto row_cuts = boundaries(row_groups);
  auto is_cut = [](const std::vector<std::size_t>& cuts, std::size_t at) {
    return std::find(cuts.begin(), cuts.end(), at) != cuts.end();
  };

  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0 && is_cut(row_cuts, r)) {
      std::string rule = "[";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) rule += is_cut(col_cuts, c) ? "-+-" : "--";
        rule += std::string(width[c], '-');
      }
      out += rule + "]\n";
    }
    std::string line = "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) line += is_cut(col_cuts, c) ? " | " : "  ";
      line += pad(cells[r][c], width[c]);
    }
    out += line + "]\n";
  }
  return out;
}

std::string render_complex(const FreeComplex& c) {
  std::ostringstream os;
  for (int n = c.hi(); n > c.lo(); --n) {
    os << "d_" << n << " : F_" << n << " -> F_" << n - 1 << "\n";
    os << render_matrix(c.ring(), c.differential(n));
  }
  return os.str();
}

std::string render_product(const ProductComplex& p, bool descending) {
  auto groups = [&](int n) {
    std::vector<std::size_t> sizes;
    std::map<int, std::size_t> by_degree;
    auto it = p.summands.find(n);
    if (it != p.summands.end())
      for (const auto& s : it->second) by_degree[s.koszul_degree] += s.rank;
    for (const auto& [deg, size] : by_degree)
      if (size > 0) sizes.push_back(size);
    if (descending) std::reverse(sizes.begin(), sizes.end());
    return sizes;
  };
  auto describe = [&](int n) {
    std::string out;
    std::vector<Summand> blocks;
    auto it = p.summands.find(n);
    if (it != p.summands.end())
      for (const auto& s : it->second)
        if (s.rank > 0) blocks.push_back(s);
    if (descending)
      std::stable_sort(blocks.begin(), blocks.end(), [](const Summand& a, const Summand& b) {
        return a.koszul_degree > b.koszul_degree;
      });
    std::vector<std::string> parts;
    for (const auto& s : blocks)
      parts.push_back("F_" + std::to_string(s.position) + "*" + s.alpha.to_string());
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
    return out.empty() ? std::string("0") : out;
  };
  std::ostringstream os;
  const FreeComplex& c = p.complex;
  for (int n = c.hi(); n > c.lo(); --n) {
    os << "d_" << n << " : " << describe(n) << " -> " << describe(n - 1) << "\n";
    const PolyMatrix d = descending ? displayed_differential(p, n) : c.differential(n);
    os << render_matrix(c.ring(), d, groups(n - 1), groups(n));
  }
  return os.str();
}

}  // namespace koszul_lift
