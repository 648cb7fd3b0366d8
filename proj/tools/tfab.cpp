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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tfab/error.hpp"
#include "tfab/groups.hpp"
#include "tfab/isotypy.hpp"
#include "tfab/padic.hpp"
#include "tfab/reduction.hpp"
#include "tfab/text.hpp"
#include "tfab/twotype.hpp"
#include "tfab/verify/acceptance.hpp"

namespace {

using json = nlohmann::json;
using namespace tfab;

enum Exit { kOk = 0, kProperty = 1, kUsage = 2, kPrecision = 3 };

struct Output {
  std::string text;
  json machine = json::object();
  int code = kOk;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kUsageError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::uint64_t default_precision() {
  const char* env = std::getenv("TFAB_PRECISION");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) fail(ErrorCode::kUsageError, "TFAB_PRECISION must be a positive integer");
  return v;
}

json cardinal_json(Cardinal c) {
  if (c.is_omega()) return "omega";
  return c.value();
}

// Group files and element files loaded into one workspace.
struct Inputs {
  std::vector<std::string> group_files;
  std::vector<std::string> elem_files;

  Workspace load() const {
    Workspace ws;
    for (const auto& f : group_files) parse_group_file(read_file(f), ws);
    for (const auto& f : elem_files) parse_element_file(read_file(f), ws);
    return ws;
  }
};

const std::string& element_name(const Workspace& ws, const std::string& wanted, std::size_t index) {
  if (!wanted.empty()) return wanted;
  if (ws.element_order.size() <= index) fail(ErrorCode::kUsageError, "not enough elements given");
  return ws.element_order[index];
}

FDGroup first_group(const std::string& path) {
  Workspace ws;
  parse_group_file(read_file(path), ws);
  if (ws.group_order.empty()) fail(ErrorCode::kUsageError, path + " defines no group");
  const MixedGroup& g = ws.group(ws.group_order.front());
  if (!g.blocks().empty()) fail(ErrorCode::kUsageError, "p-adic blocks are not allowed here");
  return g.rational();
}

Element rational_part(const MixedElement& x, const std::string& name) {
  if (!x.padic.empty()) fail(ErrorCode::kUsageError, name + " has p-adic coordinates");
  return x.rational;
}

bool is_htype_text(const std::string& s) {
  auto at = s.find_first_not_of(' ');
  return at != std::string::npos && s[at] == '[';
}

Output lattice_op(const std::string& x, const std::string& y, bool meet) {
  Output out;
  std::string r;
  if (is_htype_text(x) != is_htype_text(y)) {
    fail(ErrorCode::kUsageError, "operands must both be characteristics or both h-types");
  }
  if (is_htype_text(x)) {
    HType a = parse_htype(x);
    HType b = parse_htype(y);
    r = format_htype(meet ? htype_meet(a, b) : htype_join(a, b));
    out.machine["leq"] = htype_leq(a, b);
  } else {
    Characteristic a = parse_characteristic(x);
    Characteristic b = parse_characteristic(y);
    r = format_characteristic(meet ? char_meet(a, b) : char_join(a, b));
    out.machine["leq"] = char_leq(a, b);
    out.machine["equivalent"] = char_equiv(a, b);
  }
  out.text = r + "\n";
  out.machine["result"] = r;
  return out;
}

Output decision(const std::string& label, bool holds) {
  Output out;
  out.text = label + ": " + (holds ? "true" : "false") + "\n";
  out.machine["relation"] = label;
  out.machine["holds"] = holds;
  out.code = holds ? kOk : kProperty;
  return out;
}

Output profile(const std::string& path) {
  const FDGroup g = first_group(path);
  const TypeRankProfile prof = type_rank_profile(g);
  std::set<HType> types;
  for (const auto& [t, n] : prof.exact_ranks) types.insert(t);
  for (const auto& [t, n] : prof.independent_counts) types.insert(t);
  Output out;
  out.text = "h-type\tr(A_t)\tN(A,t)\n";
  json rows = json::array();
  for (const HType& t : types) {
    auto r = prof.exact_ranks.count(t) ? prof.exact_ranks.at(t) : Cardinal(0);
    auto n = prof.independent_counts.count(t) ? prof.independent_counts.at(t) : Cardinal(0);
    out.text += format_htype(t) + "\t" + format_cardinal(r) + "\t" + format_cardinal(n) + "\n";
    rows.push_back({{"htype", format_htype(t)}, {"exact_rank", cardinal_json(r)},
                    {"independent", cardinal_json(n)}});
  }
  SzmielewProfile sz = szmielew_profile(g);
  json tf = json::object();
  for (const auto& [p, c] : sz.tf_exceptions) tf[std::to_string(p)] = cardinal_json(c);
  out.machine["types"] = rows;
  out.machine["tf_default"] = cardinal_json(sz.tf_default);
  out.machine["tf"] = tf;
  return out;
}

// Each coordinate as its residue and as base-p digits, least significant first.
json coords_json(const PadicVector& v) {
  json a = json::array();
  for (const auto& x : v) {
    json digits = json::array();
    for (std::uint64_t d : x.digits()) digits.push_back(d);
    a.push_back({{"residue", x.residue().get_str()}, {"digits", digits}});
  }
  return a;
}

std::string coords_text(const std::string& label, const PadicVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += label + "[" + std::to_string(i) + "] = " + v[i].residue().get_str() + "  digits";
    for (std::uint64_t d : v[i].digits()) out += " " + std::to_string(d);
    out += "\n";
  }
  return out;
}

Output realize_ladder_cmd(Prime p, const std::string& text, std::uint64_t precision) {
  Ladder lad = parse_ladder(text, p);
  validate_ladder(lad);
  RealizedPair r = realize_ladder(lad, precision);
  Ladder back = extract_ladder(r.a, r.b, precision - 1);
  Ladder canon = canonical_ladder(lad, precision);
  bool verified = lad.infinite ? ladder_prefix_compatible(back, canon) : back == canon;
  Output out;
  out.machine["p"] = p;
  out.machine["N"] = precision;
  out.machine["ladder"] = format_ladder(lad);
  out.machine["a"] = coords_json(r.a);
  out.machine["b"] = coords_json(r.b);
  out.machine["verification"] = {{"extracted", format_ladder(back)},
                                 {"canonical", format_ladder(canon)},
                                 {"verified", verified}};
  out.text = coords_text("a", r.a) + coords_text("b", r.b) + "extracted: " + format_ladder(back) +
             "\nverified: " + (verified ? "true" : "false") + "\n";
  out.code = verified ? kOk : kProperty;
  return out;
}

Output realize_two_type_cmd(const std::string& path, std::uint64_t precision) {
  TwoType tt = two_type_from_json(read_file(path));
  Realization r = realize_two_type(tt, precision);
  TwoType back = classify_pair(r.carrier, r.x, r.y);
  bool verified = same_up_to_precision(back, tt);
  Output out;
  out.text = format_group("C", r.carrier) + "\n" + format_element("x", "C", r.x) + "\n" +
             format_element("y", "C", r.y) + "\nverified: " + (verified ? "true" : "false") + "\n";
  out.machine["group"] = format_group("C", r.carrier);
  out.machine["x"] = format_element("x", "C", r.x);
  out.machine["y"] = format_element("y", "C", r.y);
  out.machine["verified"] = verified;
  out.code = verified ? kOk : kProperty;
  return out;
}

// The coordinates of x in the first block at p, zero where absent.
PadicVector block_vector(const MixedGroup& g, const MixedElement& x, Prime p) {
  for (std::size_t i = 0; i < g.blocks().size(); ++i) {
    const PadicBlock& b = g.blocks()[i];
    if (b.p != p) continue;
    PadicVector v;
    for (std::uint64_t c = 0; c < b.copies; ++c) {
      auto it = x.padic.find({i, c});
      v.push_back(it == x.padic.end() ? TruncatedPAdic(p, b.precision, 0) : it->second);
    }
    return v;
  }
  fail(ErrorCode::kUsageError, "no p-adic block at " + std::to_string(p));
}

Output uniq_check(const Workspace& ws, const std::string& xn, const std::string& yn, Prime p,
                  std::int64_t level) {
  const NamedElement& x = ws.element(xn);
  const NamedElement& y = ws.element(yn);
  if (x.group != y.group) fail(ErrorCode::kUsageError, "elements live in different groups");
  const MixedGroup& g = ws.group(x.group);
  PadicVector a = block_vector(g, x.value, p);
  PadicVector b = block_vector(g, y.value, p);
  const std::uint64_t n = a.front().precision();
  UniquenessReport first = check_unique_dependency(a, b, std::max(vector_valuation(a).value(),
                                                                   vector_valuation(b).value()));
  std::uint64_t lo = level >= 0 ? static_cast<std::uint64_t>(level) : first.l;
  std::uint64_t hi = level >= 0 ? lo + 1 : n;
  Output out;
  json levels = json::array();
  bool pass = true;
  for (std::uint64_t lv = lo; lv < hi; ++lv) {
    UniquenessReport rep = check_unique_dependency(a, b, lv);
    pass = pass && rep.pass;
    json raising = json::array();
    for (const RaisingPair& r : rep.raising) {
      raising.push_back({{"alpha", r.alpha}, {"beta", r.beta}, {"height", r.height.to_string()},
                         {"class", r.projective_class}});
    }
    levels.push_back({{"level", lv}, {"classes", rep.classes}, {"raising", raising},
                      {"indeterminate", rep.indeterminate.size()}, {"pass", rep.pass}});
    out.text += "level " + std::to_string(lv) + ": " + std::to_string(rep.classes) +
                " raising class(es), " + std::to_string(rep.indeterminate.size()) +
                " indeterminate" + (rep.pass ? "" : "  FAIL") + "\n";
  }
  out.text += std::string("uniqueness: ") + (pass ? "PASS" : "FAIL") + "\n";
  out.machine["k"] = first.k;
  out.machine["l"] = first.l;
  out.machine["swapped"] = first.swapped;
  out.machine["levels"] = levels;
  out.machine["pass"] = pass;
  out.code = pass ? kOk : kProperty;
  return out;
}

Output selftest(std::uint64_t seed, bool stream) {
  Output out;
  int failed = 0;
  json rows = json::array();
  auto results = verify::run_all(seed, [&](const verify::CriterionResult& r) {
    if (stream) {
      std::printf("%s\n", verify::format_result(r).c_str());
      std::fflush(stdout);
    }
  });
  for (const auto& r : results) {
    failed += r.pass ? 0 : 1;
    rows.push_back({{"id", r.id}, {"title", r.title}, {"pass", r.pass}, {"detail", r.detail},
                    {"seconds", r.seconds}});
  }
  out.text = std::to_string(results.size() - failed) + " passed, " + std::to_string(failed) +
             " failed\n";
  out.machine["criteria"] = rows;
  out.machine["passed"] = results.size() - failed;
  out.machine["failed"] = failed;
  out.code = failed == 0 ? kOk : kProperty;
  return out;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIndeterminateAtPrecision:
    case ErrorCode::kInsufficientPrecision: return kPrecision;
    default: return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of torsion-free Abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print a JSON object instead of text");

  Inputs in;
  auto add_inputs = [&](CLI::App* cmd) {
    cmd->add_option("--group", in.group_files, "Group description file")->check(CLI::ExistingFile);
    cmd->add_option("--elem", in.elem_files, "Element description file")->check(CLI::ExistingFile);
  };
  std::string value;
  std::string other;
  std::string name;
  std::string xname;
  std::string yname;
  std::string ladder;
  std::string two_type_file;
  std::vector<std::string> names;
  Prime prime = 0;
  std::uint64_t precision = 0;
  std::int64_t level = -1;
  std::uint64_t seed = 20260417;

  auto* c_char = app.add_subcommand("char", "Normalize a characteristic, or give an element's");
  c_char->add_option("value", value, "Characteristic such as \"(0; 2:3)\"");
  add_inputs(c_char);
  c_char->add_option("--name", name, "Element name");
  auto* c_htype = app.add_subcommand("htype", "H-type of a characteristic or an element");
  c_htype->add_option("value", value, "Characteristic");
  add_inputs(c_htype);
  c_htype->add_option("--name", name, "Element name");
  auto* c_height = app.add_subcommand("height", "p-height of an element");
  add_inputs(c_height);
  c_height->add_option("--name", name, "Element name");
  c_height->add_option("--prime", prime, "Prime")->required();
  auto* c_meet = app.add_subcommand("meet", "Meet of two characteristics or h-types");
  auto* c_join = app.add_subcommand("join", "Join of two characteristics or h-types");
  for (auto* c : {c_meet, c_join}) {
    c->add_option("x", value)->required();
    c->add_option("y", other)->required();
  }
  auto* c_reduce = app.add_subcommand("reduce", "Replace a tuple by an independent basis");
  add_inputs(c_reduce);
  c_reduce->add_option("--names", names, "Elements in order (default: all)");
  std::map<std::string, CLI::App*> decisions;
  for (const char* cmd : {"ee", "iso1", "isotypic", "iso"}) {
    auto* c = app.add_subcommand(cmd, "Compare two groups");
    c->add_option("a", value)->required()->check(CLI::ExistingFile);
    c->add_option("b", other)->required()->check(CLI::ExistingFile);
    decisions[cmd] = c;
  }
  decisions["ee"]->description("Elementary equivalence");
  decisions["iso1"]->description("Same 1-types (realized h-types and Szmielew invariants)");
  decisions["isotypic"]->description("Separable isotypy");
  decisions["iso"]->description("Isomorphism of fully decomposable groups");
  auto* c_profile = app.add_subcommand("profile", "Type ranks and independent-element counts");
  c_profile->add_option("a", value)->required()->check(CLI::ExistingFile);
  auto* c_realize = app.add_subcommand("realize2", "Realize a ladder or a 2-type and verify it");
  c_realize->add_option("--prime", prime, "Prime of the ladder");
  c_realize->add_option("--ladder", ladder, "Ladder such as \"0,0; 2:1,1\"");
  c_realize->add_option("--two-type", two_type_file, "2-type JSON file")->check(CLI::ExistingFile);
  c_realize->add_option("--precision", precision, "p-adic precision N");
  auto* c_extract = app.add_subcommand("extract2", "Classify the 2-type of a pair");
  auto* c_uniq = app.add_subcommand("uniq-check", "Check that at most one class raises the height");
  for (auto* c : {c_extract, c_uniq}) {
    add_inputs(c);
    c->add_option("--x", xname, "First element");
    c->add_option("--y", yname, "Second element");
  }
  c_uniq->add_option("--prime", prime, "Prime of the p-adic block")->required();
  c_uniq->add_option("--level", level, "Single level to check (default: all)");
  auto* c_self = app.add_subcommand("selftest", "Run the acceptance criteria");
  c_self->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Output out;
  try {
    if (precision == 0) precision = default_precision();
    auto pick = [&](const Workspace& ws, const std::string& wanted, std::size_t i) -> const NamedElement& {
      return ws.element(element_name(ws, wanted, i));
    };
    if (c_char->parsed() || c_htype->parsed()) {
      Characteristic c;
      if (!in.elem_files.empty()) {
        Workspace ws = in.load();
        const NamedElement& e = pick(ws, name, 0);
        c = elem_char(ws.group(e.group).rational(), rational_part(e.value, e.group));
      } else if (!value.empty()) {
        c = parse_characteristic(value);
      } else {
        fail(ErrorCode::kUsageError, "give a characteristic or --group and --elem");
      }
      std::string r = c_char->parsed() ? format_characteristic(c) : format_htype(htype_of(c));
      out.text = r + "\n";
      out.machine["result"] = r;
      out.machine["htype"] = format_htype(htype_of(c));
    } else if (c_height->parsed()) {
      Workspace ws = in.load();
      const NamedElement& e = pick(ws, name, 0);
      Height h = mixed_height(ws.group(e.group), e.value, prime);
      out.text = h.to_string() + "\n";
      out.machine["height"] = h.to_string();
      if (!h.determinate()) out.code = kPrecision;
    } else if (c_meet->parsed() || c_join->parsed()) {
      out = lattice_op(value, other, c_meet->parsed());
    } else if (c_reduce->parsed()) {
      Workspace ws = in.load();
      if (names.empty()) names = ws.element_order;
      if (names.empty()) fail(ErrorCode::kUsageError, "no elements given");
      const std::string group = ws.element(names.front()).group;
      std::vector<Element> elems;
      for (const auto& n : names) {
        const NamedElement& e = ws.element(n);
        if (e.group != group) fail(ErrorCode::kUsageError, "elements live in different groups");
        elems.push_back(rational_part(e.value, n));
      }
      ReductionResult r = reduce_tuple(ws.group(group).rational(), elems);
      json basis = json::array();
      for (std::size_t i = 0; i < r.basis.size(); ++i) {
        std::string t = format_element("b" + std::to_string(i), group, MixedElement(r.basis[i]));
        out.text += t;
        basis.push_back(t);
      }
      json rows = json::object();
      for (std::size_t i = 0; i < names.size(); ++i) {
        json row = json::array();
        out.text += names[i] + " =";
        for (std::size_t j = 0; j < r.expression[i].size(); ++j) {
          out.text += " " + r.expression[i][j].get_str();
          row.push_back(r.expression[i][j].get_str());
        }
        out.text += "\n";
        rows[names[i]] = row;
      }
      out.machine["rank"] = r.basis.size();
      out.machine["basis"] = basis;
      out.machine["expression"] = rows;
    } else if (decisions["ee"]->parsed()) {
      out = decision("elementarily equivalent",
                     elementarily_equivalent(first_group(value), first_group(other)));
    } else if (decisions["iso1"]->parsed()) {
      out = decision("1-isotypic", iso1_equivalent(first_group(value), first_group(other)));
    } else if (decisions["isotypic"]->parsed()) {
      out = decision("separably isotypic", separable_isotypic(first_group(value), first_group(other)));
    } else if (decisions["iso"]->parsed()) {
      out = decision("isomorphic", fd_isomorphic(first_group(value), first_group(other)));
    } else if (c_profile->parsed()) {
      out = profile(value);
    } else if (c_realize->parsed()) {
      if (!two_type_file.empty()) {
        out = realize_two_type_cmd(two_type_file, precision);
      } else {
        if (ladder.empty() || prime == 0) fail(ErrorCode::kUsageError, "give --prime and --ladder, or --two-type");
        out = realize_ladder_cmd(prime, ladder, precision);
      }
    } else if (c_extract->parsed()) {
      Workspace ws = in.load();
      const NamedElement& x = pick(ws, xname, 0);
      const NamedElement& y = pick(ws, yname, 1);
      if (x.group != y.group) fail(ErrorCode::kUsageError, "elements live in different groups");
      TwoType tt = classify_pair(ws.group(x.group), x.value, y.value);
      out.machine = json::parse(two_type_to_json(tt));
      out.text = out.machine.dump(2) + "\n";
    } else if (c_uniq->parsed()) {
      Workspace ws = in.load();
      out = uniq_check(ws, element_name(ws, xname, 0), element_name(ws, yname, 1), prime, level);
    } else if (c_self->parsed()) {
      out = selftest(seed, !as_json);
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "tfab: %s\n", e.what());
    return exit_code(e.code());
  }
  if (as_json) {
    std::printf("%s\n", out.machine.dump(2).c_str());
  } else {
    std::fputs(out.text.c_str(), stdout);
  }
  return out.code;
}
