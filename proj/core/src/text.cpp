//  Copyright 2026 The tfab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "tfab/text.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <limits>
#include <set>

#include "tfab/error.hpp"

namespace tfab {

namespace {

using json = nlohmann::ordered_json;

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : s_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) {
      return false;
    }
    pos_ = end;
    return true;
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) error("expected '" + std::string(w) + "'");
  }
  void expect_end() {
    if (!at_end()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }
  Integer big_nat() { return Integer(digits()); }
  std::uint64_t nat() {
    std::size_t start = column();
    Integer v = big_nat();
    if (!v.fits_ulong_p()) error_at(start, "number too large");
    return v.get_ui();
  }
  Integer integer() {
    bool neg = accept('-');
    Integer v = big_nat();
    return neg ? Integer(-v) : v;
  }
  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '-' || s_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) error("expected a name");
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t column() {
    skip_ws();
    return pos_ + 1;
  }
  [[noreturn]] void error(const std::string& msg, ErrorCode code = ErrorCode::kParseError) {
    error_at(column(), msg, code);
  }
  [[noreturn]] void error_at(std::size_t col, const std::string& msg,
                             ErrorCode code = ErrorCode::kParseError) {
    fail(code, "line " + std::to_string(line_) + ", column " + std::to_string(col) + ": " + msg);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
};

Rational read_rational(Cursor& c) {
  std::size_t col = c.column();
  Integer num = c.integer();
  Integer den = 1;
  if (c.accept('/')) {
    den = c.big_nat();
    if (den == 0) c.error_at(col, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

ExtHeight read_height(Cursor& c) {
  if (c.accept_word("inf")) return ExtHeight::inf();
  return ExtHeight(c.nat());
}

Default read_default(Cursor& c) {
  if (c.accept_word("inf")) return Default::kInf;
  std::size_t col = c.column();
  if (c.nat() != 0) c.error_at(col, "default must be 0 or inf");
  return Default::kZero;
}

Prime read_prime(Cursor& c) {
  std::size_t col = c.column();
  std::uint64_t p = c.nat();
  if (!is_prime(p)) c.error_at(col, std::to_string(p) + " is not a prime", ErrorCode::kSemanticError);
  return p;
}

Characteristic read_characteristic(Cursor& c) {
  std::size_t col = c.column();
  c.expect('(');
  Default d = read_default(c);
  c.expect(';');
  std::map<Prime, ExtHeight> ex;
  if (c.peek() != ')') {
    do {
      std::size_t pcol = c.column();
      Prime p = read_prime(c);
      c.expect(':');
      ExtHeight h = read_height(c);
      if (!ex.emplace(p, h).second) {
        c.error_at(pcol, "prime " + std::to_string(p) + " listed twice", ErrorCode::kSemanticError);
      }
    } while (c.accept(','));
  }
  c.expect(')');
  try {
    return Characteristic::make(d, ex);
  } catch (const Error& e) {
    c.error_at(col, e.what(), ErrorCode::kSemanticError);
  }
}

HType read_htype(Cursor& c) {
  c.expect('[');
  Default d = read_default(c);
  c.expect(';');
  std::set<Prime> flips;
  if (c.peek() != ']') {
    do {
      std::size_t pcol = c.column();
      Prime p = read_prime(c);
      if (!flips.insert(p).second) {
        c.error_at(pcol, "prime " + std::to_string(p) + " listed twice", ErrorCode::kSemanticError);
      }
    } while (c.accept(','));
  }
  c.expect(']');
  return HType(d, std::move(flips));
}

Cardinal read_cardinal(Cursor& c) {
  if (c.accept_word("omega")) return Cardinal::omega();
  return Cardinal(c.nat());
}

template <typename F>
auto parse_whole(std::string_view text, F read) {
  Cursor c(text, 1);
  auto v = read(c);
  c.expect_end();
  return v;
}

// Calls f(cursor) for each non-blank line with comments removed.
template <typename F>
void for_each_line(std::string_view text, F f) {
  std::size_t line = 0;
  while (!text.empty()) {
    ++line;
    std::size_t nl = text.find('\n');
    std::string_view l = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    std::size_t hash = l.find('#');
    if (hash != std::string_view::npos) l = l.substr(0, hash);
    Cursor c(l, line);
    if (c.at_end()) continue;
    f(c);
  }
}

// Integers are JSON numbers when they fit in 64 bits, strings otherwise.
json int_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

Integer json_int(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  fail(ErrorCode::kParseError, "expected an integer");
}

json height_json(ExtHeight h) {
  if (h.is_inf()) return "inf";
  return h.value();
}

ExtHeight json_height(const json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return ExtHeight::inf();
  return ExtHeight(j.get<std::uint64_t>());
}

json local_json(const PrimeLocalType& t) {
  json data = json::object();
  if (const auto* c = std::get_if<IndepWithInfinite>(&t)) {
    data["a"] = height_json(c->a);
    data["b"] = height_json(c->b);
  } else if (const auto* c = std::get_if<IndepFinite>(&t)) {
    data["k"] = c->k;
    data["l"] = c->l;
  } else if (const auto* c = std::get_if<SplitInfinite>(&t)) {
    data["k"] = c->k;
    data["l"] = c->l;
    data["alpha"] = int_json(c->alpha);
    data["beta"] = int_json(c->beta);
    data["swapped"] = c->swapped;
  } else {
    const auto& lad = std::get<LadderLocal>(t);
    data["p"] = lad.ladder.p;
    data["ladder"] = format_ladder(lad.ladder);
    data["swapped"] = lad.swapped;
  }
  json out;
  out["case"] = case_name(t);
  out["data"] = data;
  return out;
}

PrimeLocalType json_local(const json& j) {
  const std::string name = j.at("case").get<std::string>();
  const json& d = j.at("data");
  if (name == "indep_infinite") return IndepWithInfinite{json_height(d.at("a")), json_height(d.at("b"))};
  if (name == "indep_finite") {
    return IndepFinite{d.at("k").get<std::uint64_t>(), d.at("l").get<std::uint64_t>()};
  }
  if (name == "split_infinite") {
    return SplitInfinite{d.at("k").get<std::uint64_t>(), d.at("l").get<std::uint64_t>(),
                         json_int(d.at("alpha")), json_int(d.at("beta")),
                         d.at("swapped").get<bool>()};
  }
  if (name == "finite_ladder" || name == "infinite_ladder") {
    Ladder l = parse_ladder(d.at("ladder").get<std::string>(), d.at("p").get<std::uint64_t>());
    if (l.infinite != (name == "infinite_ladder")) {
      fail(ErrorCode::kSemanticError, "ladder does not match case " + name);
    }
    return LadderLocal{l, d.at("swapped").get<bool>()};
  }
  fail(ErrorCode::kParseError, "unknown case " + name);
}

}  // namespace

std::string format_rational(const Rational& x) { return x.get_str(); }

Rational parse_rational(std::string_view text) { return parse_whole(text, read_rational); }

std::string format_cardinal(Cardinal c) { return c.to_string(); }

Cardinal parse_cardinal(std::string_view text) { return parse_whole(text, read_cardinal); }

std::string format_characteristic(const Characteristic& c) {
  std::string out = c.default_class() == Default::kZero ? "(0;" : "(inf;";
  bool first = true;
  for (const auto& [p, h] : c.exceptions()) {
    out += first ? " " : ", ";
    first = false;
    out += std::to_string(p) + ":" + h.to_string();
  }
  return out + ")";
}

Characteristic parse_characteristic(std::string_view text) {
  return parse_whole(text, read_characteristic);
}

std::string format_htype(const HType& t) {
  std::string out = t.base() == Default::kZero ? "[0;" : "[inf;";
  bool first = true;
  for (Prime p : t.flips()) {
    out += first ? " " : ", ";
    first = false;
    out += std::to_string(p);
  }
  return out + "]";
}

HType parse_htype(std::string_view text) { return parse_whole(text, read_htype); }

std::string format_ladder(const Ladder& ladder) {
  std::string out = std::to_string(ladder.k) + "," + std::to_string(ladder.l);
  for (const LadderStep& s : ladder.steps) {
    out += "; " + std::to_string(s.t) + ":" + std::to_string(s.alpha) + "," +
           std::to_string(s.beta);
  }
  if (ladder.infinite) out += "; ...";
  return out;
}

Ladder parse_ladder(std::string_view text, Prime p) {
  return parse_whole(text, [p](Cursor& c) {
    Ladder l;
    l.p = p;
    l.k = c.nat();
    c.expect(',');
    l.l = c.nat();
    while (c.accept(';')) {
      if (c.accept('.')) {
        c.expect('.');
        c.expect('.');
        l.infinite = true;
        break;
      }
      LadderStep s;
      s.t = c.nat();
      c.expect(':');
      s.alpha = c.nat();
      c.expect(',');
      s.beta = c.nat();
      l.steps.push_back(s);
    }
    return l;
  });
}

const MixedGroup& Workspace::group(const std::string& name) const {
  auto it = groups.find(name);
  if (it == groups.end()) fail(ErrorCode::kSemanticError, "unknown group " + name);
  return it->second;
}

const NamedElement& Workspace::element(const std::string& name) const {
  auto it = elements.find(name);
  if (it == elements.end()) fail(ErrorCode::kSemanticError, "unknown element " + name);
  return it->second;
}

void parse_group_file(std::string_view text, Workspace& ws) {
  struct Pending {
    std::string name;
    std::size_t line = 0;
    std::vector<Summand> summands;
    std::vector<PadicBlock> blocks;
  };
  std::vector<Pending> found;
  for_each_line(text, [&](Cursor& c) {
    if (c.accept_word("group")) {
      std::size_t col = c.column();
      Pending g;
      g.name = c.name();
      c.expect_end();
      if (ws.groups.count(g.name) > 0 ||
          std::any_of(found.begin(), found.end(), [&](const Pending& o) { return o.name == g.name; })) {
        c.error_at(col, "group " + g.name + " defined twice", ErrorCode::kSemanticError);
      }
      found.push_back(std::move(g));
      return;
    }
    if (found.empty()) c.error("expected 'group'");
    if (c.accept_word("summand")) {
      Summand s;
      s.chi = read_characteristic(c);
      c.expect_word("rank");
      c.expect('=');
      std::size_t col = c.column();
      s.multiplicity = read_cardinal(c);
      if (s.multiplicity.is_zero()) c.error_at(col, "rank must be positive", ErrorCode::kSemanticError);
      c.expect_end();
      found.back().summands.push_back(s);
      return;
    }
    if (c.accept_word("padic")) {
      PadicBlock b;
      b.p = read_prime(c);
      c.expect_word("precision");
      c.expect('=');
      std::size_t col = c.column();
      b.precision = c.nat();
      if (b.precision == 0) c.error_at(col, "precision must be positive", ErrorCode::kSemanticError);
      c.expect_word("copies");
      c.expect('=');
      col = c.column();
      b.copies = c.nat();
      if (b.copies == 0) c.error_at(col, "copies must be positive", ErrorCode::kSemanticError);
      c.expect_end();
      found.back().blocks.push_back(b);
      return;
    }
    c.error("expected 'group', 'summand' or 'padic'");
  });
  for (Pending& g : found) {
    ws.groups.emplace(g.name, MixedGroup(std::move(g.blocks), FDGroup(std::move(g.summands))));
    ws.group_order.push_back(g.name);
  }
}

std::string format_group(const std::string& name, const MixedGroup& group) {
  std::string out = "group " + name + "\n";
  for (const Summand& s : group.rational().summands()) {
    out += "summand " + format_characteristic(s.chi) + " rank=" + format_cardinal(s.multiplicity) +
           "\n";
  }
  for (const PadicBlock& b : group.blocks()) {
    out += "padic " + std::to_string(b.p) + " precision=" + std::to_string(b.precision) +
           " copies=" + std::to_string(b.copies) + "\n";
  }
  return out;
}

void parse_element_file(std::string_view text, Workspace& ws) {
  struct Pending {
    std::string name;
    std::string group;
    std::size_t line = 0;
    MixedElement value;
  };
  std::vector<Pending> found;
  for_each_line(text, [&](Cursor& c) {
    if (c.accept_word("elem")) {
      Pending e;
      std::size_t col = c.column();
      e.name = c.name();
      c.expect_word("in");
      std::size_t gcol = c.column();
      e.group = c.name();
      c.expect_end();
      if (ws.elements.count(e.name) > 0 ||
          std::any_of(found.begin(), found.end(), [&](const Pending& o) { return o.name == e.name; })) {
        c.error_at(col, "element " + e.name + " defined twice", ErrorCode::kSemanticError);
      }
      if (ws.groups.count(e.group) == 0) {
        c.error_at(gcol, "unknown group " + e.group, ErrorCode::kSemanticError);
      }
      found.push_back(std::move(e));
      return;
    }
    if (found.empty()) c.error("expected 'elem'");
    Pending& e = found.back();
    const MixedGroup& g = ws.groups.at(e.group);
    const bool rational = c.accept_word("coord");
    if (!rational && !c.accept_word("pcoord")) c.error("expected 'elem', 'coord' or 'pcoord'");
    std::size_t col = c.column();
    CoordKey key;
    key.summand = c.nat();
    c.expect('.');
    key.copy = c.nat();
    c.expect('=');
    std::size_t vcol = c.column();
    try {
      if (rational) {
        Rational v = read_rational(c);
        c.expect_end();
        if (e.value.rational.coords().count(key) > 0) {
          c.error_at(col, "coordinate given twice", ErrorCode::kSemanticError);
        }
        Element one;
        one.set(key, v);
        validate_element(g.rational(), one);
        e.value.rational.set(key, v);
      } else {
        Integer v = c.integer();
        c.expect_end();
        if (key.summand >= g.blocks().size() || key.copy >= g.blocks()[key.summand].copies) {
          c.error_at(col, "no such p-adic coordinate", ErrorCode::kSemanticError);
        }
        if (e.value.padic.count(key) > 0) {
          c.error_at(col, "coordinate given twice", ErrorCode::kSemanticError);
        }
        const PadicBlock& b = g.blocks()[key.summand];
        if (v < 0 || v >= power(b.p, b.precision)) {
          c.error_at(vcol, "residue must lie in [0, p^N)", ErrorCode::kSemanticError);
        }
        e.value.padic.emplace(key, TruncatedPAdic(b.p, b.precision, v));
      }
    } catch (const Error& err) {
      if (err.code() == ErrorCode::kParseError || err.code() == ErrorCode::kSemanticError) throw;
      c.error_at(vcol, err.what(), ErrorCode::kSemanticError);
    }
  });
  for (Pending& e : found) {
    ws.elements.emplace(e.name, NamedElement{e.group, std::move(e.value)});
    ws.element_order.push_back(e.name);
  }
}

std::string format_element(const std::string& name, const std::string& group,
                           const MixedElement& x) {
  std::string out = "elem " + name + " in " + group + "\n";
  for (const auto& [k, v] : x.rational.coords()) {
    out += "coord " + std::to_string(k.summand) + "." + std::to_string(k.copy) + " = " +
           format_rational(v) + "\n";
  }
  for (const auto& [k, v] : x.padic) {
    out += "pcoord " + std::to_string(k.summand) + "." + std::to_string(k.copy) + " = " +
           v.residue().get_str() + "\n";
  }
  return out;
}

std::string two_type_to_json(const TwoType& tt) {
  json out;
  out["rank"] = tt.rank;
  json expr = json::array();
  for (const auto& row : tt.expression) {
    json r = json::array();
    for (const Integer& v : row) r.push_back(int_json(v));
    expr.push_back(r);
  }
  out["expression"] = expr;
  if (tt.char_single) out["char"] = format_characteristic(*tt.char_single);
  json locals = json::object();
  for (const auto& [p, t] : tt.locals) locals[std::to_string(p)] = local_json(t);
  out["locals"] = locals;
  out["default"] = local_json(tt.default_local);
  return out.dump();
}

TwoType two_type_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
  try {
    TwoType tt;
    tt.rank = j.at("rank").get<int>();
    tt.expression.clear();
    for (const json& row : j.at("expression")) {
      std::vector<Integer> r;
      for (const json& v : row) r.push_back(json_int(v));
      tt.expression.push_back(std::move(r));
    }
    if (j.contains("char")) tt.char_single = parse_characteristic(j.at("char").get<std::string>());
    if (j.contains("locals")) {
      for (const auto& [key, value] : j.at("locals").items()) {
        Prime p = parse_whole(key, [](Cursor& c) { return c.nat(); });
        tt.locals.emplace(p, json_local(value));
      }
    }
    tt.default_local = json_local(j.at("default"));
    return tt;
  } catch (const json::exception& e) {
    fail(ErrorCode::kParseError, e.what());
  }
}

}  // namespace tfab
