#include "neumaier/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "neumaier/error.hpp"

namespace neumaier {

ElementWord ElementWord::inverse() const {
  ElementWord r;
  for (auto it = factors.rbegin(); it != factors.rend(); ++it) r.factors.emplace_back(it->first, -it->second);
  return r;
}

ElementWord operator*(ElementWord lhs, const ElementWord& rhs) {
  lhs.factors.insert(lhs.factors.end(), rhs.factors.begin(), rhs.factors.end());
  return lhs;
}

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

class WordParser {
 public:
  explicit WordParser(std::string s) : s_(std::move(s)) {}

  ElementWord parse() {
    if (s_.empty()) fail("empty word");
    ElementWord w = word();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, "cannot parse word '" + s_ + "': " + msg);
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ElementWord word() {
    ElementWord w = factor();
    while (eat('*')) w = w * factor();
    return w;
  }

  ElementWord factor() {
    ElementWord base = atom();
    if (!eat('^')) return base;
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string_view num(s_.data() + start, pos_ - start);
    if (!num.empty() && num.front() == '+') num.remove_prefix(1);
    long long e = 0;
    auto [p, ec] = std::from_chars(num.data(), num.data() + num.size(), e);
    if (num.empty() || ec != std::errc{} || p != num.data() + num.size()) fail("bad exponent");
    if (base.factors.size() == 1) {
      base.factors[0].second *= e;
      return base;
    }
    ElementWord unit = e < 0 ? base.inverse() : base;
    ElementWord out;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) out = out * unit;
    return out;
  }

  ElementWord atom() {
    if (eat('(')) {
      ElementWord w = word();
      if (!eat(')')) fail("missing ')'");
      return w;
    }
    std::size_t start = pos_;
    auto ident = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos_ >= s_.size() || !(std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      fail("expected a generator name");
    while (pos_ < s_.size() && ident(s_[pos_])) ++pos_;
    std::string name = s_.substr(start, pos_ - start);
    if (name == "e") return {};
    return ElementWord{{{name, 1}}};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

bool looks_like_cycles(const std::string& s) {
  return s.size() >= 2 && s[0] == '(' && std::isdigit(static_cast<unsigned char>(s[1]));
}

}  // namespace

ElementWord parse_word(std::string_view text) { return WordParser(strip_spaces(text)).parse(); }

Element resolve_word(const GroupTable& g, const ElementWord& w) {
  Element r = GroupTable::identity;
  for (const auto& [name, exp] : w.factors) {
    auto gen = g.find_generator(name);
    if (!gen) throw Error(Errc::unbound_name, "unbound generator name '" + name + "'");
    r = g.mul(r, g.power(*gen, exp));
  }
  return r;
}

Permutation parse_cycles(std::string_view text, std::size_t degree, unsigned base) {
  std::string s = strip_spaces(text);
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<char> touched(degree, 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& msg) { throw Error(Errc::parse_error, "bad cycle notation '" + s + "': " + msg); };
  if (s == "()") return p;
  while (pos < s.size()) {
    if (s[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> pts;
    while (true) {
      std::size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) fail("expected a point");
      unsigned long v = std::stoul(s.substr(start, pos - start));
      if (v < base || v - base >= degree) fail("point out of range");
      pts.push_back(static_cast<std::uint32_t>(v - base));
      if (pos < s.size() && s[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (auto q : pts) {
      if (touched[q]) fail("point repeated");
      touched[q] = 1;
    }
    for (std::size_t i = 0; i < pts.size(); ++i) p[pts[i]] = pts[(i + 1) % pts.size()];
  }
  return p;
}

Element resolve_element(const GroupTable& g, std::string_view text) {
  std::string s = strip_spaces(text);
  if (looks_like_cycles(s)) {
    const auto& rep = g.permutations();
    if (!rep) throw Error(Errc::parse_error, "cycle notation '" + s + "' needs a permutation group");
    Permutation p = parse_cycles(s, rep->degree, g.cycle_base());
    auto it = std::find(rep->images.begin(), rep->images.end(), p);
    if (it == rep->images.end()) throw Error(Errc::invalid_argument, "permutation " + s + " is not in the group");
    return static_cast<Element>(it - rep->images.begin());
  }
  return resolve_word(g, parse_word(s));
}

ElementSet resolve_elements(const GroupTable& g, const std::vector<std::string>& texts) {
  ElementSet out;
  for (const auto& t : texts) out.push_back(resolve_element(g, t));
  return normalize(std::move(out));
}

}  // namespace neumaier
