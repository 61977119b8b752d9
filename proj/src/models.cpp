#include "hodgekit/models.hpp"

#include "hodgekit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hodgekit {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::lie: return "lie";
    case ModelKind::matrix: return "matrix";
    case ModelKind::vaisman: return "vaisman";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool valid_name(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), is_ident_char);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

GaussianRational parse_coeff(const std::string& text, int line) {
  try {
    return GaussianRational::parse(text);
  } catch (const std::exception&) {
    throw ParseError(line, "malformed coefficient '" + text + "'");
  }
}

Bidegree parse_bidegree(const std::string& text, int line) {
  std::string s = trim(text);
  int p = 0, q = 0;
  char tail = 0;
  int used = 0;
  if (s.size() < 5 || std::sscanf(s.c_str(), "(%d,%d%c%n", &p, &q, &tail, &used) != 3 || tail != ')' ||
      static_cast<std::size_t>(used) != s.size())
    throw ParseError(line, "expected a bidegree '(p,q)', got '" + s + "'");
  return {p, q};
}

int parse_int(const std::string& text, int line, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used != text.size() || v < 0) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected a nonnegative integer for " + what + ", got '" + text + "'");
  }
}

ExactMatrix parse_rows(const std::string& text, int line) {
  std::vector<Vector> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string::npos) end = text.size();
    Vector row;
    for (const auto& w : split_ws(text.substr(start, end - start))) row.push_back(parse_coeff(w, line));
    if (row.empty()) throw ParseError(line, "empty matrix row");
    if (!rows.empty() && row.size() != rows.front().size()) throw ParseError(line, "matrix rows of unequal length");
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return ExactMatrix::from_rows(rows.front().size(), rows);
}

std::string format_rows(const ExactMatrix& m) {
  std::string s;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) s += "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) s += (c ? " " : "") + m(r, c).str();
  }
  return s;
}

Term parse_term(std::string t, bool negative, int line) {
  GaussianRational coeff(1);
  std::size_t pos = 0;
  if (!t.empty() && t[0] == '(') {
    auto close = t.find(')');
    if (close == std::string::npos) throw ParseError(line, "unbalanced parenthesis in '" + t + "'");
    coeff = parse_coeff(t.substr(0, close + 1), line);
    pos = close + 1;
  } else {
    while (pos < t.size() && (std::isdigit(static_cast<unsigned char>(t[pos])) || t[pos] == '/')) ++pos;
    bool imaginary_unit = pos < t.size() && t[pos] == 'i' && (pos + 1 == t.size() || !is_ident_char(t[pos + 1]));
    if (imaginary_unit) ++pos;
    if (pos > 0) coeff = parse_coeff(t.substr(0, pos), line);
  }
  std::string rest = trim(std::string_view(t).substr(pos));
  if (!rest.empty() && rest[0] == '*') rest = trim(std::string_view(rest).substr(1));
  if (negative) coeff = -coeff;
  Term term{coeff, {}};
  if (rest.empty()) return term;
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto end = rest.find('^', start);
    if (end == std::string::npos) end = rest.size();
    std::string f = trim(std::string_view(rest).substr(start, end - start));
    std::string bare = !f.empty() && f[0] == '~' ? f.substr(1) : f;
    if (!valid_name(bare)) throw ParseError(line, "malformed factor '" + f + "'");
    term.factors.push_back(f);
    start = end + 1;
  }
  return term;
}

Expression parse_expression(const std::string& text, int line) {
  Expression out;
  std::string current;
  bool negative = false;
  int depth = 0;
  auto flush = [&] {
    std::string t = trim(current);
    if (t.empty()) throw ParseError(line, "empty term in expression '" + text + "'");
    out.push_back(parse_term(t, negative, line));
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      if (trim(current).empty()) {
        if (c == '-') negative = !negative;
        continue;
      }
      flush();
      negative = c == '-';
      continue;
    }
    current += c;
  }
  if (depth != 0) throw ParseError(line, "unbalanced parenthesis in '" + text + "'");
  flush();
  return out;
}

std::string format_expression(const Expression& e) {
  std::string s;
  for (const auto& term : e) {
    GaussianRational c = term.coeff;
    bool neg = c.is_real() && sgn(c.real()) < 0;
    if (neg) c = -c;
    if (s.empty())
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    std::string factors;
    for (const auto& f : term.factors) factors += (factors.empty() ? "" : "^") + f;
    if (factors.empty()) {
      s += c.is_real() ? c.str() : "(" + c.str() + ")";
      continue;
    }
    if (!(c == GaussianRational(1))) s += (c.is_real() ? c.str() : "(" + c.str() + ")") + " ";
    s += factors;
  }
  return s;
}

// "keyword rest" with the rest trimmed.
std::pair<std::string, std::string> head(const std::string& line) {
  auto sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, {}};
  return {line.substr(0, sp), trim(std::string_view(line).substr(sp))};
}

// "(p,q): rows" or "(p,q) k".
std::pair<Bidegree, std::string> slot_and_rest(const std::string& rest, int line) {
  auto close = rest.find(')');
  if (close == std::string::npos) throw ParseError(line, "expected a bidegree '(p,q)'");
  Bidegree b = parse_bidegree(rest.substr(0, close + 1), line);
  std::string tail = trim(std::string_view(rest).substr(close + 1));
  return {b, tail};
}

std::string matrix_payload(const std::string& tail, int line) {
  if (tail.empty() || tail[0] != ':') throw ParseError(line, "expected ':' followed by matrix rows");
  return trim(std::string_view(tail).substr(1));
}

void parse_contract(const std::string& rest, int line, std::vector<ContractionSpec>& out) {
  auto eq = rest.find('=');
  if (eq == std::string::npos) throw ParseError(line, "expected 'contract <field> <generator> = <coeff>'");
  auto words = split_ws(rest.substr(0, eq));
  if (words.size() != 2) throw ParseError(line, "expected 'contract <field> <generator> = <coeff>'");
  if (!valid_name(words[0]) && words[0].find('-') == std::string::npos)
    throw ParseError(line, "malformed field name '" + words[0] + "'");
  GaussianRational value = parse_coeff(trim(std::string_view(rest).substr(eq + 1)), line);
  auto it = std::find_if(out.begin(), out.end(), [&](const auto& c) { return c.name == words[0]; });
  if (it == out.end()) {
    out.push_back({words[0], {}});
    it = std::prev(out.end());
  }
  if (!it->values.emplace(words[1], value).second)
    throw ParseError(line, "duplicate value for " + words[1] + " in contraction " + words[0]);
}

struct Parser {
  ModelSpec spec;
  bool have_dim = false;
  int n = 0;
  // lie
  std::set<std::string> generator_names;
  // matrix / vaisman
  std::map<Bidegree, std::size_t> slots;
  std::map<Bidegree, ExactMatrix> del, delbar, lefschetz;
  bool delbar_only = false;
  bool have_mode = false;
  bool full = true;

  void require_dim(int line) const {
    if (!have_dim) throw ParseError(line, "'dim' must precede this declaration");
  }

  std::size_t slot_dim(Bidegree b) const {
    auto it = slots.find(b);
    return it == slots.end() ? 0 : it->second;
  }

  void lie_line(const std::string& key, const std::string& rest, int line) {
    auto& s = std::get<StructureSpec>(spec.payload);
    if (key == "generator") {
      require_dim(line);
      auto [name_part, type_text] = head(rest);
      if (!valid_name(name_part)) throw ParseError(line, "malformed generator name '" + name_part + "'");
      Bidegree t = parse_bidegree(type_text, line);
      if (t != Bidegree{1, 0} && t != Bidegree{0, 1})
        throw ParseError(line, "generator " + name_part + " has bidegree (" + t.str() + "); only (1,0) or (0,1) allowed");
      if (!generator_names.insert(name_part).second) throw ParseError(line, "duplicate generator " + name_part);
      s.generators.push_back({name_part, t});
    } else if (key == "d") {
      auto eq = rest.find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected 'd <generator> = <expression>'");
      std::string target = trim(std::string_view(rest).substr(0, eq));
      if (!generator_names.count(target))
        throw ParseError(line, "d of undeclared generator '" + target + "' (conjugate differentials are implied)");
      if (s.differentials.count(target)) throw ParseError(line, "duplicate differential for " + target);
      Expression e = parse_expression(rest.substr(eq + 1), line);
      for (const auto& term : e) {
        if (term.factors.size() != 2)
          throw ParseError(line, "right-hand side of d " + target + " must have degree 2, found a term of degree " +
                                     std::to_string(term.factors.size()));
        for (const auto& f : term.factors) {
          std::string bare = f[0] == '~' ? f.substr(1) : f;
          if (!generator_names.count(bare)) throw ParseError(line, "unknown generator '" + f + "'");
        }
      }
      s.differentials.emplace(target, std::move(e));
    } else if (key == "contract") {
      parse_contract(rest, line, spec.contractions);
      const auto& last = spec.contractions.back();
      for (const auto& [g, v] : last.values) {
        std::string bare = !g.empty() && g[0] == '~' ? g.substr(1) : g;
        if (!generator_names.count(bare)) throw ParseError(line, "unknown generator '" + g + "'");
      }
    } else {
      throw ParseError(line, "unknown directive '" + key + "' in a lie model");
    }
  }

  void slot_line(const std::string& rest, int line) {
    require_dim(line);
    auto [b, tail] = slot_and_rest(rest, line);
    if (b.p < 0 || b.q < 0 || b.p > n || b.q > n)
      throw ParseError(line, "bidegree (" + b.str() + ") outside 0 <= p,q <= " + std::to_string(n));
    if (slots.count(b)) throw ParseError(line, "duplicate slot (" + b.str() + ")");
    slots[b] = static_cast<std::size_t>(parse_int(tail, line, "slot dimension"));
  }

  void block_line(std::map<Bidegree, ExactMatrix>& into, Shift shift, const std::string& what, const std::string& rest,
                  int line) {
    require_dim(line);
    auto [b, tail] = slot_and_rest(rest, line);
    if (into.count(b)) throw ParseError(line, "duplicate " + what + " block at (" + b.str() + ")");
    ExactMatrix m = parse_rows(matrix_payload(tail, line), line);
    std::size_t rows = slot_dim(b + shift), cols = slot_dim(b);
    if (m.rows() != rows || m.cols() != cols)
      throw ParseError(line, what + " block at (" + b.str() + ") must be " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + ", got " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()));
    into.emplace(b, std::move(m));
  }

  void matrix_line(const std::string& key, const std::string& rest, int line) {
    if (key == "slot") {
      slot_line(rest, line);
    } else if (key == "del") {
      if (delbar_only) throw ParseError(line, "del block in a delbar-only complex");
      block_line(del, {1, 0}, "del", rest, line);
    } else if (key == "delbar") {
      block_line(delbar, {0, 1}, "delbar", rest, line);
    } else if (key == "delbar-only") {
      if (!del.empty()) throw ParseError(line, "delbar-only after del blocks");
      delbar_only = true;
    } else {
      throw ParseError(line, "unknown directive '" + key + "' in a matrix model");
    }
  }

  void vaisman_line(const std::string& key, const std::string& rest, int line) {
    if (key == "basic") {
      require_dim(line);
      auto [b, tail] = slot_and_rest(rest, line);
      if (b.p < 0 || b.q < 0 || b.p > n - 1 || b.q > n - 1)
        throw ParseError(line, "basic class at (" + b.str() + ") outside 0 <= p,q <= n-1");
      if (slots.count(b)) throw ParseError(line, "duplicate basic slot (" + b.str() + ")");
      slots[b] = static_cast<std::size_t>(parse_int(tail, line, "basic dimension"));
    } else if (key == "lefschetz") {
      block_line(lefschetz, {1, 1}, "lefschetz", rest, line);
    } else if (key == "mode") {
      if (have_mode) throw ParseError(line, "duplicate mode");
      if (rest != "full" && rest != "delbar") throw ParseError(line, "mode must be 'full' or 'delbar'");
      have_mode = true;
      full = rest == "full";
    } else if (key == "contract") {
      parse_contract(rest, line, spec.contractions);
      for (const auto& [g, v] : spec.contractions.back().values)
        if (g != "theta10") throw ParseError(line, "Vaisman contractions take the value on theta10 only");
    } else {
      throw ParseError(line, "unknown directive '" + key + "' in a vaisman model");
    }
  }

  ModelSpec finish(int last_line) {
    if (!have_dim) throw ParseError(last_line, "missing 'dim'");
    switch (spec.kind) {
      case ModelKind::lie: {
        auto& s = std::get<StructureSpec>(spec.payload);
        s.name = spec.name;
        s.n = n;
        break;
      }
      case ModelKind::matrix: {
        MatrixData m;
        m.n = n;
        for (const auto& [b, k] : slots)
          if (k) m.slots.emplace(b, k);
        m.del = std::move(del);
        m.delbar = std::move(delbar);
        m.has_del = !delbar_only;
        spec.payload = std::move(m);
        break;
      }
      case ModelKind::vaisman: {
        std::map<Bidegree, int> dims;
        for (const auto& [b, k] : slots) dims[b] = static_cast<int>(k);
        VaismanData v{make_basic(spec.name, n, dims), full};
        for (auto& [b, m] : lefschetz) v.basic.lefschetz.set_block(b, std::move(m));
        spec.payload = std::move(v);
        break;
      }
    }
    return std::move(spec);
  }
};

}  // namespace

ModelSpec parse_model_file(std::string_view text) {
  Parser p;
  bool have_header = false;
  int lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto [key, rest] = head(line);
    if (!have_header) {
      if (key != "model" && key != "matrix" && key != "vaisman")
        throw ParseError(lineno, "file must start with 'model <name>', 'matrix <name>' or 'vaisman <name>'");
      if (rest.empty() || split_ws(rest).size() != 1) throw ParseError(lineno, "expected a single model name");
      p.spec.name = rest;
      p.spec.kind = key == "model" ? ModelKind::lie : key == "matrix" ? ModelKind::matrix : ModelKind::vaisman;
      p.spec.payload = StructureSpec{};
      have_header = true;
      continue;
    }
    if (key == "dim") {
      if (p.have_dim) throw ParseError(lineno, "duplicate 'dim'");
      p.n = parse_int(rest, lineno, "dim");
      p.have_dim = true;
      continue;
    }
    switch (p.spec.kind) {
      case ModelKind::lie: p.lie_line(key, rest, lineno); break;
      case ModelKind::matrix: p.matrix_line(key, rest, lineno); break;
      case ModelKind::vaisman: p.vaisman_line(key, rest, lineno); break;
    }
  }
  if (!have_header) throw ParseError(lineno, "empty model file");
  return p.finish(lineno);
}

std::string serialize(const ModelSpec& m) {
  std::ostringstream out;
  auto contractions = [&] {
    for (const auto& c : m.contractions)
      for (const auto& [g, v] : c.values) out << "contract " << c.name << ' ' << g << " = " << v.str() << '\n';
  };
  switch (m.kind) {
    case ModelKind::lie: {
      const auto& s = m.structure();
      out << "model " << m.name << "\ndim " << s.n << '\n';
      for (const auto& g : s.generators) out << "generator " << g.name << " (" << g.type.str() << ")\n";
      for (const auto& g : s.generators) {
        auto it = s.differentials.find(g.name);
        if (it != s.differentials.end() && !it->second.empty())
          out << "d " << g.name << " = " << format_expression(it->second) << '\n';
      }
      contractions();
      break;
    }
    case ModelKind::matrix: {
      const auto& d = m.matrix();
      out << "matrix " << m.name << "\ndim " << d.n << '\n';
      if (!d.has_del) out << "delbar-only\n";
      for (const auto& [b, k] : d.slots) out << "slot (" << b.str() << ") " << k << '\n';
      for (const auto& [b, blk] : d.del) out << "del (" << b.str() << "): " << format_rows(blk) << '\n';
      for (const auto& [b, blk] : d.delbar) out << "delbar (" << b.str() << "): " << format_rows(blk) << '\n';
      break;
    }
    case ModelKind::vaisman: {
      const auto& v = m.vaisman();
      out << "vaisman " << m.name << "\ndim " << v.basic.n << "\nmode " << (v.full ? "full" : "delbar") << '\n';
      for (const auto& [b, labels] : v.basic.classes) out << "basic (" << b.str() << ") " << labels.size() << '\n';
      for (const auto& [b, blk] : v.basic.lefschetz.blocks())
        out << "lefschetz (" << b.str() << "): " << format_rows(blk) << '\n';
      contractions();
      break;
    }
  }
  return out.str();
}

namespace {

const std::vector<std::pair<std::string, std::string>>& catalog_sources() {
  static const std::vector<std::pair<std::string, std::string>> sources = {
      {"torus1", R"(# complex torus of dimension 1: all differentials vanish
model torus1
dim 1
generator dz1 (1,0)
contract translation dz1 = 1
)"},
      {"torus2", R"(model torus2
dim 2
generator dz1 (1,0)
generator dz2 (1,0)
contract translation dz1 = 1
)"},
      {"torus3", R"(model torus3
dim 3
generator dz1 (1,0)
generator dz2 (1,0)
generator dz3 (1,0)
contract translation dz1 = 1
)"},
      {"iwasawa", R"(# Iwasawa manifold: quotient of the complex Heisenberg group
model iwasawa
dim 3
generator phi1 (1,0)
generator phi2 (1,0)
generator phi3 (1,0)
d phi3 = -phi1^phi2
contract central phi3 = 1
contract phi1-dual phi1 = 1
)"},
      {"kodaira_thurston", R"(# Kodaira-Thurston surface
model kodaira_thurston
dim 2
generator w1 (1,0)
generator w2 (1,0)
d w2 = w1^~w1
contract central w2 = 1
)"},
      {"hopf2", R"(# Hopf surface S^1 x S^3: basic cohomology of CP^1
vaisman hopf2
dim 2
mode full
basic (0,0) 1
basic (1,1) 1
lefschetz (0,0): 1
contract lee theta10 = 1/2
)"},
      {"hopf3", R"(# Hopf threefold S^1 x S^5: basic cohomology of CP^2
vaisman hopf3
dim 3
mode full
basic (0,0) 1
basic (1,1) 1
basic (2,2) 1
lefschetz (0,0): 1
lefschetz (1,1): 1
contract lee theta10 = 1/2
)"},
  };
  return sources;
}

}  // namespace

const std::vector<ModelSpec>& catalog() {
  static const std::vector<ModelSpec> models = [] {
    std::vector<ModelSpec> out;
    for (const auto& [name, text] : catalog_sources()) out.push_back(parse_model_file(text));
    return out;
  }();
  return models;
}

const std::string& catalog_text(const std::string& name) {
  for (const auto& [n, text] : catalog_sources())
    if (n == name) return text;
  throw InvalidModel("no catalog model named '" + name + "'");
}

std::optional<ModelSpec> find_in_catalog(const std::string& name) {
  for (const auto& m : catalog())
    if (m.name == name) return m;
  return std::nullopt;
}

const Contraction* BuiltModel::find_contraction(const std::string& name) const {
  for (const auto& c : contractions)
    if (c.name == name) return &c;
  return nullptr;
}

BuiltModel build_model(const ModelSpec& spec) {
  BuiltModel out;
  out.spec = spec;
  switch (spec.kind) {
    case ModelKind::lie: {
      out.exterior = build_exterior_model(spec.structure());
      out.complex = out.exterior->complex;
      for (const auto& c : spec.contractions) {
        Contraction con = make_contraction(*out.exterior, c.name, c.values);
        auto failures = check_contraction(con);
        if (!failures.empty()) throw InvalidModel("contraction " + c.name + ": " + failures.front());
        out.contractions.push_back(std::move(con));
      }
      break;
    }
    case ModelKind::matrix: {
      const auto& d = spec.matrix();
      BigradedSpace space(d.n);
      for (const auto& [b, k] : d.slots) {
        std::vector<std::string> labels;
        for (std::size_t j = 0; j < k; ++j) labels.push_back("e(" + b.str() + ")_" + std::to_string(j));
        space.add_slot(b, std::move(labels));
      }
      Bicomplex bc{std::move(space), GradedOperator({1, 0}, Parity::odd), GradedOperator({0, 1}, Parity::odd),
                   d.has_del};
      for (const auto& [b, m] : d.del) bc.del.set_block(b, m);
      for (const auto& [b, m] : d.delbar) bc.delbar.set_block(b, m);
      auto report = validate(bc);
      if (!report.ok) throw InvalidModel("model " + spec.name + " is not a bicomplex: " + report.summary());
      if (!spec.contractions.empty()) throw InvalidModel("matrix models do not support contractions");
      out.complex = std::move(bc);
      break;
    }
    case ModelKind::vaisman: {
      const auto& v = spec.vaisman();
      out.vaisman = build_invariant_model(v.basic, v.full);
      out.complex = out.vaisman->complex;
      for (const auto& c : spec.contractions) {
        Contraction con = lee_contraction(*out.vaisman, c.values.at("theta10"));
        con.name = c.name;
        out.contractions.push_back(std::move(con));
      }
      break;
    }
  }
  return out;
}

}  // namespace hodgekit
