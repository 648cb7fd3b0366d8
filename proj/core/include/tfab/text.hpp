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

#ifndef TFAB_TEXT_HPP_
#define TFAB_TEXT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tfab/characteristic.hpp"
#include "tfab/groups.hpp"
#include "tfab/padic.hpp"
#include "tfab/twotype.hpp"

namespace tfab {

// Parse failures throw Error(kParseError) or Error(kSemanticError) with a
// "line L, column C: " prefix. Single-item parsers report line 1.

std::string format_rational(const Rational& x);
Rational parse_rational(std::string_view text);

std::string format_cardinal(Cardinal c);
Cardinal parse_cardinal(std::string_view text);

// (0; 2:3, 5:inf)
std::string format_characteristic(const Characteristic& c);
Characteristic parse_characteristic(std::string_view text);

// [0; 2, 3]
std::string format_htype(const HType& t);
HType parse_htype(std::string_view text);

// k,l; t1:a1,b1; t2:a2,b2 with a trailing "; ..." for a truncated ladder.
std::string format_ladder(const Ladder& ladder);
Ladder parse_ladder(std::string_view text, Prime p);

struct NamedElement {
  std::string group;
  MixedElement value;
};

struct Workspace {
  std::map<std::string, MixedGroup> groups;
  std::vector<std::string> group_order;
  std::map<std::string, NamedElement> elements;
  std::vector<std::string> element_order;

  const MixedGroup& group(const std::string& name) const;
  const NamedElement& element(const std::string& name) const;
};

// group NAME
// summand (CHAR) rank=N|omega
// padic P precision=N copies=M
void parse_group_file(std::string_view text, Workspace& ws);
std::string format_group(const std::string& name, const MixedGroup& group);

// elem NAME in GROUP
// coord S.C = RATIONAL
// pcoord B.C = RESIDUE
void parse_element_file(std::string_view text, Workspace& ws);
std::string format_element(const std::string& name, const std::string& group,
                           const MixedElement& x);

std::string two_type_to_json(const TwoType& tt);
TwoType two_type_from_json(std::string_view text);

}  // namespace tfab

#endif  // TFAB_TEXT_HPP_
