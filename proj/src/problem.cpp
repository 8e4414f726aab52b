#include "taycheck/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "taycheck/errors.hpp"
#include "taycheck/parser.hpp"

namespace taycheck {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Line {
  int number;
  std::string text;
};

void check_symbols(const Expr& e, const std::set<std::string>& allowed, int line,
                   const std::string& context) {
  for (const std::string& s : free_symbols(e)) {
    if (!allowed.count(s)) {
      if (s == "t")
        throw ValidationError("line " + std::to_string(line) + ": " + context +
                              " must not reference the time symbol t");
      throw ValidationError("line " + std::to_string(line) + ": " + context +
                            " references undeclared symbol '" + s + "'");
    }
  }
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  ProblemSpec spec;
  bool kind_set = false, space_set = false;

  std::vector<Line> lines;
  {
    std::istringstream is(text);
    std::string raw;
    int n = 0;
    while (std::getline(is, raw)) {
      ++n;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::string t = trim(raw);
      if (!t.empty()) lines.push_back({n, t});
    }
  }

  enum class Section { None, Problem, Equations, Initial, Claim };
  Section section = Section::None;
  Claim* claim = nullptr;
  // let-bindings are claim-local and eliminated at parse time
  std::vector<std::pair<std::string, Expr>> lets;

  std::map<std::string, int> eq_lines, init_lines;

  auto subst_lets = [&](Expr e) {
    for (const auto& [n, v] : lets) e = substitute(e, n, v);
    return e;
  };

  for (const Line& ln : lines) {
    if (ln.text.front() == '[') {
      if (ln.text.back() != ']')
        throw SourceError(ln.number, static_cast<int>(ln.text.size()), "unterminated section header");
      std::string name = trim(ln.text.substr(1, ln.text.size() - 2));
      if (name == "problem") {
        section = Section::Problem;
      } else if (name == "equations") {
        section = Section::Equations;
      } else if (name == "initial") {
        section = Section::Initial;
      } else if (name.rfind("claim.", 0) == 0) {
        std::string cname = name.substr(6);
        if (!valid_identifier(cname))
          throw SourceError(ln.number, 1, "claim name must be an identifier", cname);
        for (const Claim& c : spec.claims)
          if (c.name == cname)
            throw ValidationError("line " + std::to_string(ln.number) + ": duplicate claim '" + cname + "'");
        spec.claims.push_back(Claim{cname, {}, {}});
        claim = &spec.claims.back();
        lets.clear();
        section = Section::Claim;
      } else {
        throw SourceError(ln.number, 1, "unknown section '" + name + "'", name);
      }
      continue;
    }

    std::size_t eq = ln.text.find('=');
    if (eq == std::string::npos)
      throw SourceError(ln.number, 1, "expected 'key = value'", ln.text);
    std::string key = trim(ln.text.substr(0, eq));
    std::string value = trim(ln.text.substr(eq + 1));
    int vcol = static_cast<int>(eq) + 1 + static_cast<int>(ln.text.substr(eq + 1).find(value));

    switch (section) {
      case Section::None:
        throw SourceError(ln.number, 1, "content before any section header", ln.text);

      case Section::Problem: {
        if (key == "kind") {
          if (value == "pde") spec.kind = ProblemKind::Pde;
          else if (value == "dde") spec.kind = ProblemKind::Dde;
          else throw SourceError(ln.number, vcol, "kind must be 'pde' or 'dde'", value);
          kind_set = true;
        } else if (key == "space") {
          if (!valid_identifier(value) || value == "t")
            throw SourceError(ln.number, vcol, "space symbol must be an identifier other than t", value);
          spec.space = value;
          space_set = true;
        } else if (key == "fields") {
          spec.fields = split_names(value);
          for (const std::string& f : spec.fields)
            if (!valid_identifier(f) || f == "t")
              throw SourceError(ln.number, vcol, "invalid field name", f);
        } else if (key == "params") {
          spec.params = split_names(value);
          for (const std::string& p : spec.params)
            if (!valid_identifier(p) || p == "t")
              throw SourceError(ln.number, vcol, "invalid parameter name", p);
        } else {
          throw SourceError(ln.number, 1, "unknown [problem] key '" + key + "'", key);
        }
        break;
      }

      case Section::Equations: {
        // key looks like dt(FIELD)
        if (key.rfind("dt(", 0) != 0 || key.back() != ')')
          throw SourceError(ln.number, 1, "equations must be written dt(field) = expr", key);
        std::string field = trim(key.substr(3, key.size() - 4));
        if (std::find(spec.fields.begin(), spec.fields.end(), field) == spec.fields.end())
          throw ValidationError("line " + std::to_string(ln.number) + ": equation for undeclared field '" +
                                field + "'");
        if (spec.rhs.count(field))
          throw ValidationError("line " + std::to_string(ln.number) + ": duplicate equation for '" + field +
                                "'");
        spec.rhs.emplace(field, parse_expr(value, ln.number, vcol - 1));
        eq_lines[field] = ln.number;
        break;
      }

      case Section::Initial: {
        if (std::find(spec.fields.begin(), spec.fields.end(), key) == spec.fields.end())
          throw ValidationError("line " + std::to_string(ln.number) + ": initial profile for undeclared field '" +
                                key + "'");
        if (spec.init.count(key))
          throw ValidationError("line " + std::to_string(ln.number) + ": duplicate initial profile for '" +
                                key + "'");
        spec.init.emplace(key, parse_expr(value, ln.number, vcol - 1));
        init_lines[key] = ln.number;
        break;
      }

      case Section::Claim: {
        if (key == "params") {
          claim->extra_params = split_names(value);
          for (const std::string& p : claim->extra_params)
            if (!valid_identifier(p) || p == "t")
              throw SourceError(ln.number, vcol, "invalid claim parameter name", p);
          break;
        }
        if (key.rfind("let ", 0) == 0) {
          std::string lname = trim(key.substr(4));
          if (!valid_identifier(lname))
            throw SourceError(ln.number, 1, "invalid let name", lname);
          if (lname == "t" || lname == spec.space)
            throw ValidationError("line " + std::to_string(ln.number) +
                                  ": let name shadows a reserved symbol");
          Expr v = subst_lets(parse_expr(value, ln.number, vcol - 1));
          lets.emplace_back(lname, v);
          break;
        }
        if (std::find(spec.fields.begin(), spec.fields.end(), key) == spec.fields.end())
          throw ValidationError("line " + std::to_string(ln.number) + ": claim entry for undeclared field '" +
                                key + "'");
        if (claim->solutions.count(key))
          throw ValidationError("line " + std::to_string(ln.number) + ": duplicate claim entry for '" + key +
                                "'");
        claim->solutions.emplace(key, subst_lets(parse_expr(value, ln.number, vcol - 1)));
        break;
      }
    }
  }

  // structural validation
  if (!kind_set) throw ValidationError("missing [problem] kind");
  if (!space_set) throw ValidationError("missing [problem] space symbol");
  if (spec.fields.empty()) throw ValidationError("a problem needs at least one field");
  if (spec.kind == ProblemKind::Dde && spec.fields.size() != 1)
    throw ValidationError("lattice problems take exactly one field");
  for (const std::string& f : spec.fields) {
    if (f == spec.space) throw ValidationError("field '" + f + "' collides with the space symbol");
    if (!spec.rhs.count(f)) throw ValidationError("field '" + f + "' has no evolution equation");
    if (!spec.init.count(f)) throw ValidationError("field '" + f + "' has no initial profile");
  }
  for (const std::string& p : spec.params) {
    if (p == spec.space || std::find(spec.fields.begin(), spec.fields.end(), p) != spec.fields.end())
      throw ValidationError("parameter '" + p + "' collides with another declared name");
  }

  std::set<std::string> rhs_allowed(spec.params.begin(), spec.params.end());
  rhs_allowed.insert(spec.space);
  for (const std::string& f : spec.fields) rhs_allowed.insert(f);
  std::set<std::string> init_allowed(spec.params.begin(), spec.params.end());
  init_allowed.insert(spec.space);

  for (const auto& [f, e] : spec.rhs) {
    check_symbols(e, rhs_allowed, eq_lines[f], "equation right-hand side");
    if (spec.kind == ProblemKind::Pde && contains_kind(e, Kind::Shift))
      throw ValidationError("line " + std::to_string(eq_lines[f]) + ": shift has no meaning in a PDE");
    if (spec.kind == ProblemKind::Dde &&
        (contains_kind(e, Kind::Dx) || contains_kind(e, Kind::Dxx)))
      throw ValidationError("line " + std::to_string(eq_lines[f]) +
                            ": spatial derivatives have no meaning on a lattice");
  }
  for (const auto& [f, e] : spec.init) {
    check_symbols(e, init_allowed, init_lines[f], "initial profile");
    if (contains_kind(e, Kind::Shift) || contains_kind(e, Kind::Dx) || contains_kind(e, Kind::Dxx))
      throw ValidationError("line " + std::to_string(init_lines[f]) +
                            ": initial profiles must be closed-form expressions");
  }
  for (const Claim& c : spec.claims) {
    std::set<std::string> allowed = init_allowed;
    allowed.insert("t");
    for (const std::string& p : c.extra_params) allowed.insert(p);
    for (const std::string& f : spec.fields) {
      auto it = c.solutions.find(f);
      if (it == c.solutions.end())
        throw ValidationError("claim '" + c.name + "' is missing field '" + f + "'");
      check_symbols(it->second, allowed, 0, "claim '" + c.name + "'");
      if (contains_kind(it->second, Kind::Shift) || contains_kind(it->second, Kind::Dx) ||
          contains_kind(it->second, Kind::Dxx))
        throw ValidationError("claim '" + c.name + "' must be a closed-form expression");
    }
  }
  return spec;
}

ProblemSpec load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EngineError("cannot open problem file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

const Claim* find_claim(const ProblemSpec& spec, const std::string& name) {
  for (const Claim& c : spec.claims)
    if (c.name == name) return &c;
  return nullptr;
}

}  // namespace taycheck
