#include "neumaier/spec_io.hpp"

#include "neumaier/error.hpp"
#include "neumaier/word.hpp"

namespace neumaier {

namespace {

constexpr std::size_t kMaxDegree = 4096;

using nlohmann::json;

const json& field(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(Errc::invalid_argument, std::string("group spec is missing \"") + key + "\"");
  return *it;
}

std::size_t positive(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw Error(Errc::invalid_argument, std::string("\"") + key + "\" must be a positive integer");
  return v.get<std::size_t>();
}

GroupTable build(const json& spec) {
  if (!spec.is_object()) throw Error(Errc::invalid_argument, "group spec must be an object");
  const json& kind = field(spec, "kind");
  if (!kind.is_string()) throw Error(Errc::invalid_argument, "\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "cyclic") {
    std::size_t n = positive(spec, "n");
    if (n > kOrderCap) throw Error(Errc::group_too_large, "cyclic order above cap");
    return build_cyclic(n);
  }
  if (k == "dihedral") {
    std::size_t m = positive(spec, "m");
    if (2 * m > kOrderCap) throw Error(Errc::group_too_large, "dihedral order above cap");
    return build_dihedral(m);
  }
  if (k == "product") {
    const json& fs = field(spec, "factors");
    if (!fs.is_array() || fs.empty()) throw Error(Errc::invalid_argument, "\"factors\" must be a non-empty array");
    std::size_t total = 1;
    std::vector<GroupTable> factors;
    for (const auto& f : fs) {
      factors.push_back(build(f));
      total *= factors.back().order();
      if (total > kOrderCap) throw Error(Errc::group_too_large, "product order above cap");
    }
    return build_direct_product(factors);
  }
  if (k == "permutation") {
    std::size_t degree = positive(spec, "degree");
    if (degree > kMaxDegree) throw Error(Errc::invalid_argument, "permutation degree above 4096");
    unsigned base = 0;
    if (auto it = spec.find("cycle_base"); it != spec.end()) {
      if (!it->is_number_integer() || (it->get<int>() != 0 && it->get<int>() != 1))
        throw Error(Errc::invalid_argument, "\"cycle_base\" must be 0 or 1");
      base = it->get<unsigned>();
    }
    const json& gs = field(spec, "generators");
    if (!gs.is_array()) throw Error(Errc::invalid_argument, "\"generators\" must be an array");
    std::vector<Permutation> gens;
    for (const auto& g : gs) {
      if (g.is_string()) {
        gens.push_back(parse_cycles(g.get<std::string>(), degree, base));
      } else if (g.is_array()) {
        Permutation p;
        for (const auto& v : g) {
          if (!v.is_number_integer() || v.get<long long>() < 0)
            throw Error(Errc::invalid_argument, "image arrays hold non-negative integers");
          p.push_back(v.get<std::uint32_t>());
        }
        gens.push_back(std::move(p));
      } else {
        throw Error(Errc::invalid_argument, "a generator is a cycle string or an image array");
      }
    }
    GroupTable g = build_from_permutations(degree, gens);
    g.set_cycle_base(base);
    return g;
  }
  throw Error(Errc::invalid_argument, "unknown group kind \"" + k + "\"");
}

}  // namespace

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

GroupTable group_from_json(const nlohmann::json& spec) {
  try {
    GroupTable g = build(spec);
    if (auto it = spec.find("names"); it != spec.end()) {
      if (!it->is_array()) throw Error(Errc::invalid_argument, "\"names\" must be an array of strings");
      std::vector<std::string> names;
      for (const auto& n : *it) {
        if (!n.is_string()) throw Error(Errc::invalid_argument, "\"names\" must be an array of strings");
        names.push_back(n.get<std::string>());
      }
      g.rename_generators(names);
    }
    return g;
  } catch (const json::exception& e) {
    throw Error(Errc::invalid_argument, std::string("bad group spec: ") + e.what());
  }
}

GroupTable group_from_text(std::string_view text) { return group_from_json(parse_json_text(text)); }

std::vector<std::string> set_words_from_json(const nlohmann::json& spec) {
  const json* arr = &spec;
  if (spec.is_object()) {
    auto it = spec.find("elements");
    if (it == spec.end()) throw Error(Errc::invalid_argument, "set spec is missing \"elements\"");
    arr = &*it;
  }
  if (!arr->is_array()) throw Error(Errc::invalid_argument, "set elements must be an array of strings");
  std::vector<std::string> out;
  for (const auto& w : *arr) {
    if (!w.is_string()) throw Error(Errc::invalid_argument, "set elements must be strings");
    out.push_back(w.get<std::string>());
  }
  return out;
}

std::vector<std::string> set_words_from_text(std::string_view text) { return set_words_from_json(parse_json_text(text)); }

}  // namespace neumaier
