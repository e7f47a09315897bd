#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hodo/curve.hpp"
#include "hodo/expr.hpp"
#include "hodo/map.hpp"
#include "hodo/moebius.hpp"
#include "hodo/planar.hpp"

namespace hodo {

struct FileFormatError : Error {
  explicit FileFormatError(const std::string& what)
      : Error("FileFormatError", what) {}
};

namespace detail {

inline std::vector<std::string> content_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string trimmed = line.substr(first, last - first + 1);
    if (trimmed[0] == '#') continue;
    lines.push_back(trimmed);
  }
  return lines;
}

inline std::string expect_field(const std::string& line, const std::string& key) {
  if (line.rfind(key + ":", 0) != 0)
    throw FileFormatError("expected '" + key + ":' line, got: " + line);
  auto value = line.substr(key.size() + 1);
  auto first = value.find_first_not_of(" \t");
  return first == std::string::npos ? "" : value.substr(first);
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::string trim(const std::string& s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<Rational> parse_vector(const std::string& text) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '(' || body.back() != ')')
    throw FileFormatError("expected a (..) vector, got: " + text);
  std::vector<Rational> out;
  for (const auto& part : split(body.substr(1, body.size() - 2), ',')) {
    auto v = Rational::parse(trim(part));
    if (!v) throw FileFormatError("bad rational entry in vector: " + part);
    out.push_back(*v);
  }
  return out;
}

}  // namespace detail

// Curve file: `params: t`, `dim: n`, then one component per line in canonical
// rational-function form.
inline PHCurve read_curve(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() < 2) throw FileFormatError("curve file too short");
  std::string param = detail::expect_field(lines[0], "params");
  std::size_t dim = std::stoul(detail::expect_field(lines[1], "dim"));
  if (lines.size() != 2 + dim)
    throw FileFormatError("curve file must list exactly dim components");
  PHCurve r;
  r.param = param;
  for (std::size_t k = 0; k < dim; ++k)
    r.components.push_back(parse_expr<Rational>(lines[2 + k], {param}));
  return r;
}

inline std::string write_curve(const PHCurve& r) {
  std::ostringstream out;
  out << "params: " << r.param << "\n";
  out << "dim: " << r.dim() << "\n";
  for (const auto& c : r.components) out << c.to_string() << "\n";
  return out.str();
}

// Map file: `source_dim: m`, `target_dim: n`, `vars: u1 ... um`, then one
// component per line.
inline RationalMap read_map(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.size() < 3) throw FileFormatError("map file too short");
  std::size_t m = std::stoul(detail::expect_field(lines[0], "source_dim"));
  std::size_t n = std::stoul(detail::expect_field(lines[1], "target_dim"));
  std::istringstream vars_in(detail::expect_field(lines[2], "vars"));
  std::vector<std::string> vars;
  std::string name;
  while (vars_in >> name) vars.push_back(name);
  if (vars.size() != m)
    throw FileFormatError("vars line must list source_dim variable names");
  if (lines.size() != 3 + n)
    throw FileFormatError("map file must list exactly target_dim components");
  RationalMap phi;
  phi.vars = vars;
  for (std::size_t k = 0; k < n; ++k)
    phi.components.push_back(parse_expr<Rational>(lines[3 + k], vars));
  return phi;
}

inline std::string write_map(const RationalMap& phi) {
  std::ostringstream out;
  out << "source_dim: " << phi.source_dim() << "\n";
  out << "target_dim: " << phi.target_dim() << "\n";
  out << "vars:";
  for (const auto& v : phi.vars) out << " " << v;
  out << "\n";
  for (const auto& c : phi.components) out << c.to_string() << "\n";
  return out.str();
}

// Moebius word file: `dim: n`, then one factor per line:
//   inv c=(..) r2=..
//   tr v=(..)
//   hom s=..
//   orth Q=[[..],[..]]
inline MoebiusWord read_moebius_word(std::istream& in) {
  auto lines = detail::content_lines(in);
  if (lines.empty()) throw FileFormatError("empty moebius word file");
  MoebiusWord w;
  w.dimension = std::stoul(detail::expect_field(lines[0], "dim"));
  for (std::size_t k = 1; k < lines.size(); ++k) {
    std::istringstream ls(lines[k]);
    std::string kind;
    ls >> kind;
    std::string rest;
    std::getline(ls, rest);
    rest = detail::trim(rest);
    auto field_of = [&](const std::string& key) {
      auto pos = rest.find(key + "=");
      if (pos == std::string::npos)
        throw FileFormatError("missing '" + key + "=' in: " + lines[k]);
      auto start = pos + key.size() + 1;
      // value extends to the next " key=" or end of line
      auto end = rest.find("= ", start);
      std::size_t stop = rest.size();
      auto next_space_eq = rest.find('=', start);
      if (next_space_eq != std::string::npos) {
        auto sep = rest.rfind(' ', next_space_eq);
        if (sep != std::string::npos && sep > start) stop = sep;
      }
      (void)end;
      return detail::trim(rest.substr(start, stop - start));
    };
    if (kind == "inv") {
      Inversion inv;
      inv.center = detail::parse_vector(field_of("c"));
      auto r2 = Rational::parse(field_of("r2"));
      if (!r2) throw FileFormatError("bad r2 in: " + lines[k]);
      inv.rho2 = *r2;
      w.factors.push_back(inv);
    } else if (kind == "tr") {
      Translation tr;
      tr.offset = detail::parse_vector(field_of("v"));
      w.factors.push_back(tr);
    } else if (kind == "hom") {
      Homothety hom;
      auto s = Rational::parse(field_of("s"));
      if (!s) throw FileFormatError("bad s in: " + lines[k]);
      hom.scale = *s;
      w.factors.push_back(hom);
    } else if (kind == "orth") {
      std::string body = field_of("Q");
      if (body.size() < 4 || body.front() != '[' || body.back() != ']')
        throw FileFormatError("bad Q matrix in: " + lines[k]);
      Orthogonal orth;
      std::string inner = body.substr(1, body.size() - 2);
      // rows are [..] groups separated by commas
      std::size_t p = 0;
      while (p < inner.size()) {
        auto open = inner.find('[', p);
        if (open == std::string::npos) break;
        auto close = inner.find(']', open);
        if (close == std::string::npos)
          throw FileFormatError("unterminated matrix row in: " + lines[k]);
        std::vector<Rational> row;
        for (const auto& part :
             detail::split(inner.substr(open + 1, close - open - 1), ','))
          row.push_back(*Rational::parse(detail::trim(part)));
        orth.matrix.push_back(std::move(row));
        p = close + 1;
      }
      w.factors.push_back(orth);
    } else {
      throw FileFormatError("unknown factor kind: " + kind);
    }
  }
  return w;
}

// Laurent data: `poly: <expr>` then `pole <c>: <a_-1>[, <a_-2> ...];` items;
// separators may be semicolons or newlines, and a pole may omit its
// coefficients entirely (locations-only form used by solve-residues).
inline LaurentSpec read_laurent_spec(std::istream& in) {
  std::ostringstream whole;
  whole << in.rdbuf();
  std::vector<std::string> items;
  for (const auto& chunk : detail::split(whole.str(), ';'))
    for (const auto& line : detail::split(chunk, '\n')) {
      std::string t = detail::trim(line);
      if (!t.empty() && t[0] != '#') items.push_back(t);
    }
  LaurentSpec spec;
  bool have_poly = false;
  for (const auto& item : items) {
    if (item.rfind("poly:", 0) == 0) {
      spec.polynomial_part =
          parse_expr<Gaussian>(detail::trim(item.substr(5)), {"z"});
      if (!spec.polynomial_part.is_polynomial())
        throw FileFormatError("poly part must have trivial denominator");
      have_poly = true;
      continue;
    }
    if (item.rfind("pole", 0) == 0) {
      std::string rest = detail::trim(item.substr(4));
      if (!rest.empty() && rest[0] == ':') rest = detail::trim(rest.substr(1));
      std::string loc_text = rest;
      std::string coeff_text;
      auto colon = rest.find(':');
      if (colon != std::string::npos) {
        loc_text = detail::trim(rest.substr(0, colon));
        coeff_text = detail::trim(rest.substr(colon + 1));
      }
      auto loc = Gaussian::parse(loc_text);
      if (!loc) throw FileFormatError("bad pole location: " + loc_text);
      LaurentSpec::Pole pole;
      pole.location = *loc;
      if (!coeff_text.empty()) {
        for (const auto& part : detail::split(coeff_text, ',')) {
          auto c = Gaussian::parse(detail::trim(part));
          if (!c) throw FileFormatError("bad pole coefficient: " + part);
          pole.coefficients.push_back(*c);
        }
      }
      spec.poles.push_back(std::move(pole));
      continue;
    }
    throw FileFormatError("unrecognized laurent item: " + item);
  }
  if (!have_poly)
    spec.polynomial_part = ComplexRatFunc::constant({"z"}, Gaussian(0));
  return spec;
}

inline std::string write_laurent_spec(const LaurentSpec& spec) {
  std::ostringstream out;
  out << "poly: " << spec.polynomial_part.to_string() << ";";
  for (const auto& pole : spec.poles) {
    out << " pole " << pole.location.to_string() << ":";
    for (std::size_t j = 0; j < pole.coefficients.size(); ++j)
      out << (j ? ", " : " ") << pole.coefficients[j].to_string();
    out << ";";
  }
  return out.str();
}

// Line-oriented `key: value` report.
struct Report {
  std::vector<std::pair<std::string, std::string>> lines;
  void add(const std::string& key, const std::string& value) {
    lines.emplace_back(key, value);
  }
  std::string to_string() const {
    std::string out;
    for (const auto& [k, v] : lines) out += k + ": " + v + "\n";
    return out;
  }
};

}  // namespace hodo
