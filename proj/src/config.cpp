#include "parshift/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace parshift {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

Word parse_word(const std::string& s, const Alphabet& alphabet) {
  Word w;
  for (char c : s) {
    int idx = alphabet.index(std::string(1, c));
    if (idx < 0)
      throw std::invalid_argument("config: symbol '" + std::string(1, c) +
                                  "' is not in the alphabet");
    w.push_back(idx);
  }
  return w;
}

EvPeriodicSpec parse_point(const std::string& s, const Alphabet& alphabet) {
  // preperiod.(period) or (period)
  const auto open = s.find('(');
  const auto close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("config: point spec needs a (period)");
  std::string pre = trim(s.substr(0, open));
  if (!pre.empty() && pre.back() == '.') pre.pop_back();
  EvPeriodicSpec spec;
  spec.preperiod = parse_word(trim(pre), alphabet);
  spec.period = parse_word(trim(s.substr(open + 1, close - open - 1)), alphabet);
  if (spec.period.empty()) throw std::invalid_argument("config: empty period");
  return spec;
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
  SystemConfig cfg;
  std::string section;
  std::string kind_name = "full";
  std::string matrix_text, forbidden_text, substitution_text, points_text;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value, got: " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (section == "system" || section.empty()) {
      if (key == "alphabet") {
        cfg.alphabet.names.clear();
        for (const auto& t : tokens(value)) cfg.alphabet.names.push_back(t);
      } else if (key == "kind") {
        kind_name = value;
      } else if (key == "side") {
        if (value == "one") cfg.side = Side::OneSided;
        else if (value == "two") cfg.side = Side::TwoSided;
        else throw std::invalid_argument("config: side must be one or two");
      } else if (key == "matrix") {
        matrix_text = value;
      } else if (key == "forbidden") {
        forbidden_text = value;
      } else if (key == "substitution") {
        substitution_text = value;
      } else if (key == "points") {
        points_text = value;
      } else {
        throw std::invalid_argument("config: unknown system key " + key);
      }
    } else if (section == "bounds") {
      if (key == "resolution") {
        auto ts = tokens(value);
        if (ts.size() != 2) throw std::invalid_argument("config: resolution = K L");
        cfg.resolution = Resolution{std::stoi(ts[0]), std::stoi(ts[1])};
      } else if (key == "radius") {
        cfg.radius = std::stoi(value);
      } else if (key == "basis") {
        auto ts = tokens(value);
        if (ts.size() != 2) throw std::invalid_argument("config: basis = Q P");
        cfg.basis_q = std::stoi(ts[0]);
        cfg.basis_p = std::stoi(ts[1]);
      } else if (key == "coverage_floor") {
        cfg.coverage_floor = std::stod(value);
      } else if (key == "depth") {
        cfg.depth = std::stoi(value);
      } else if (key == "seed") {
        cfg.seed = static_cast<unsigned>(std::stoul(value));
      } else {
        throw std::invalid_argument("config: unknown bounds key " + key);
      }
    } else {
      throw std::invalid_argument("config: unknown section " + section);
    }
  }

  if (cfg.alphabet.size() == 0)
    throw std::invalid_argument("config: alphabet is required");

  if (kind_name == "full") {
    cfg.kind = FullShiftKind{};
  } else if (kind_name == "matrix") {
    MatrixSftKind m;
    for (const auto& row : split(matrix_text, '/')) {
      std::vector<int> r;
      for (const auto& t : tokens(row)) r.push_back(std::stoi(t));
      m.rows.push_back(std::move(r));
    }
    cfg.kind = std::move(m);
  } else if (kind_name == "forbidden") {
    ForbiddenWordsKind f;
    for (const auto& t : tokens(forbidden_text)) f.forbidden.push_back(parse_word(t, cfg.alphabet));
    cfg.kind = std::move(f);
  } else if (kind_name == "substitution") {
    SubstitutionKind s;
    s.images.resize(static_cast<std::size_t>(cfg.alphabet.size()));
    std::vector<bool> seen(static_cast<std::size_t>(cfg.alphabet.size()), false);
    for (const auto& rule : split(substitution_text, ';')) {
      const auto arrow = rule.find("->");
      if (arrow == std::string::npos)
        throw std::invalid_argument("config: substitution rule needs ->");
      const std::string from = trim(rule.substr(0, arrow));
      const int idx = cfg.alphabet.index(from);
      if (idx < 0) throw std::invalid_argument("config: unknown symbol " + from);
      s.images[static_cast<std::size_t>(idx)] =
          parse_word(trim(rule.substr(arrow + 2)), cfg.alphabet);
      seen[static_cast<std::size_t>(idx)] = true;
    }
    for (bool b : seen)
      if (!b) throw std::invalid_argument("config: substitution must map every symbol");
    cfg.kind = std::move(s);
  } else if (kind_name == "points") {
    FinitePointsKind p;
    for (const auto& t : split(points_text, ';'))
      if (!t.empty()) p.points.push_back(parse_point(t, cfg.alphabet));
    cfg.kind = std::move(p);
  } else {
    throw std::invalid_argument("config: unknown kind " + kind_name);
  }
  return cfg;
}

SystemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ShiftPresentation SystemConfig::make_presentation() const {
  return make_presentation(side);
}

ShiftPresentation SystemConfig::make_presentation(Side forced_side) const {
  return ShiftPresentation(alphabet, forced_side, kind, std::max(depth, 16));
}

}  // namespace parshift
