/*
   Copyright 2026 The discres Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cctype>
#include <map>
#include <sstream>

#include "discres/error.hpp"
#include "discres/poly.hpp"
#include "json.hpp"

namespace discres {

std::string to_string(const Rational& q) { return q.get_str(10); }

std::string canonical_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational a = abs(t.coeff);
    bool unit = a == 1;
    bool need_star = false;
    if (!unit || t.mono.is_one()) {
      out += to_string(a);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
      std::uint32_t e = t.mono.exp[i];
      if (e == 0) continue;
      if (need_star) out += "*";
      out += p.vars().name(i);
      if (e > 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarTable& table) : s_(text), names_(table.names()) {}

  Poly run() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty input");
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!at_end() && (s_[pos_] == '+' || s_[pos_] == '-')) {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError(pos_, "expected '+' or '-'");
      }
      parse_term(sign);
      first = false;
      skip_ws();
      if (at_end()) break;
    }
    VarTable table(names_);
    PolyBuilder b(table);
    for (auto& [exps, c] : terms_) {
      Monomial m(table.size());
      for (auto [idx, e] : exps) m.exp[idx] += e;
      m = Monomial(std::move(m.exp));
      b.add(std::move(m), std::move(c));
    }
    return std::move(b).build();
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool digit() const { return !at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_])); }
  bool ident_start() const {
    if (at_end()) return false;
    char c = s_[pos_];
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string digits() {
    std::size_t start = pos_;
    while (digit()) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  void parse_term(int sign) {
    std::size_t start = pos_;
    Rational coeff(sign);
    bool have_coeff = false;
    bool have_factor = false;
    std::vector<std::pair<std::size_t, std::uint32_t>> exps;
    if (digit()) {
      Integer num(digits());
      Integer den(1);
      skip_ws();
      if (!at_end() && s_[pos_] == '/') {
        ++pos_;
        skip_ws();
        if (!digit()) throw ParseError(pos_, "expected denominator");
        std::size_t dpos = pos_;
        den = Integer(digits());
        if (den == 0) throw ParseError(dpos, "zero denominator");
      }
      Rational c(num, den);
      c.canonicalize();
      coeff *= c;
      have_coeff = true;
    }
    while (true) {
      skip_ws();
      bool star = false;
      if (!at_end() && s_[pos_] == '*') {
        star = true;
        ++pos_;
        skip_ws();
      }
      if (!ident_start()) {
        if (star || (!have_coeff && !have_factor)) throw ParseError(pos_, "expected variable");
        break;
      }
      std::size_t id_start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(id_start, pos_ - id_start));
      std::uint32_t e = 1;
      skip_ws();
      if (!at_end() && s_[pos_] == '^') {
        ++pos_;
        skip_ws();
        if (!at_end() && s_[pos_] == '-') throw ParseError(pos_, "negative exponent");
        if (!digit()) throw ParseError(pos_, "expected exponent");
        std::size_t epos = pos_;
        std::string ds = digits();
        if (ds.size() > 9) throw ParseError(epos, "exponent too large");
        e = static_cast<std::uint32_t>(std::stoul(ds));
        if (e == 0) throw ParseError(epos, "exponent must be positive");
      }
      exps.emplace_back(index_for(name), e);
      have_factor = true;
    }
    if (!have_coeff && !have_factor) throw ParseError(start, "expected term");
    terms_.emplace_back(std::move(exps), std::move(coeff));
  }

  std::size_t index_for(const std::string& name) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    names_.push_back(name);
    return names_.size() - 1;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::vector<std::string> names_;
  std::vector<std::pair<std::vector<std::pair<std::size_t, std::uint32_t>>, Rational>> terms_;
};

}  // namespace

Poly parse(std::string_view text, const VarTable& table) { return Parser(text, table).run(); }

std::string to_json(const Poly& p) {
  nlohmann::ordered_json j;
  j["vars"] = p.vars().names();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json jt;
    jt["c"] = to_string(t.coeff);
    jt["e"] = t.mono.exp;
    terms.push_back(std::move(jt));
  }
  j["terms"] = std::move(terms);
  return j.dump();
}

Poly from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON");
  }
  try {
    VarTable table(j.at("vars").get<std::vector<std::string>>());
    PolyBuilder b(table);
    for (const auto& jt : j.at("terms")) {
      std::string cs = jt.at("c").get<std::string>();
      Rational c;
      if (c.set_str(cs, 10) != 0 || cs.empty()) throw ParseError(0, "bad coefficient '" + cs + "'");
      if (c.get_den() == 0) throw ParseError(0, "zero denominator in '" + cs + "'");
      c.canonicalize();
      auto e = jt.at("e").get<std::vector<std::uint32_t>>();
      if (e.size() != table.size()) throw ParseError(0, "exponent vector length does not match vars");
      b.add(Monomial(std::move(e)), c);
    }
    return std::move(b).build();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid polynomial JSON: ") + e.what());
  }
}

}  // namespace discres
