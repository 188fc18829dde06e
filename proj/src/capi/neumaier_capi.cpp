#include "neumaier/neumaier.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "neumaier/catalog.hpp"
#include "neumaier/error.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/report.hpp"
#include "neumaier/search.hpp"
#include "neumaier/spec_io.hpp"
#include "neumaier/word.hpp"

struct nm_group {
  std::shared_ptr<const neumaier::GroupTable> table;
};

struct nm_connection_set {
  std::shared_ptr<const neumaier::GroupTable> table;
  neumaier::ConnectionSet set;
};

namespace {

thread_local std::string last_error;

nm_status to_status(neumaier::Errc code) {
  using neumaier::Errc;
  switch (code) {
    case Errc::invalid_argument: return NM_ERR_INVALID_ARGUMENT;
    case Errc::parse_error: return NM_ERR_PARSE;
    case Errc::group_too_large: return NM_ERR_GROUP_TOO_LARGE;
    case Errc::unbound_name: return NM_ERR_UNBOUND_NAME;
    case Errc::identity_in_set: return NM_ERR_IDENTITY_IN_SET;
    case Errc::not_inverse_closed: return NM_ERR_NOT_INVERSE_CLOSED;
    case Errc::not_a_subgroup: return NM_ERR_NOT_A_SUBGROUP;
    case Errc::not_a_clique: return NM_ERR_NOT_A_CLIQUE;
    case Errc::group_mismatch: return NM_ERR_GROUP_MISMATCH;
    case Errc::not_connected: return NM_ERR_NOT_CONNECTED;
    case Errc::non_square_discriminant: return NM_ERR_NON_SQUARE_DISCRIMINANT;
    case Errc::search_too_large: return NM_ERR_SEARCH_TOO_LARGE;
    case Errc::unknown_entry: return NM_ERR_UNKNOWN_ENTRY;
  }
  return NM_ERR_INTERNAL;
}

template <class F>
nm_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return NM_OK;
  } catch (const neumaier::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return NM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return NM_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw neumaier::Error(neumaier::Errc::invalid_argument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* dump(const nlohmann::json& j) { return dup(j.dump(2)); }

nm_group* wrap(neumaier::GroupTable g) {
  return new nm_group{std::make_shared<const neumaier::GroupTable>(std::move(g))};
}

nm_connection_set* wrap_set(const nm_group* g, neumaier::ElementSet members) {
  return new nm_connection_set{g->table, neumaier::ConnectionSet(*g->table, std::move(members))};
}

}  // namespace

extern "C" {

const char* nm_version(void) { return "1.0.0"; }

const char* nm_last_error(void) { return last_error.c_str(); }

const char* nm_status_name(nm_status status) {
  switch (status) {
    case NM_OK: return "ok";
    case NM_ERR_INTERNAL: return "internal";
    default: break;
  }
  for (int c = 0; c <= static_cast<int>(neumaier::Errc::unknown_entry); ++c)
    if (to_status(static_cast<neumaier::Errc>(c)) == status) return neumaier::errc_name(static_cast<neumaier::Errc>(c));
  return "unknown";
}

void nm_string_free(char* s) { std::free(s); }

nm_status nm_group_from_json(const char* json, nm_group** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = wrap(neumaier::group_from_text(json));
  });
}

nm_status nm_group_cyclic(size_t n, nm_group** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(neumaier::build_cyclic(n));
  });
}

nm_status nm_group_dihedral(size_t m, nm_group** out) {
  return guarded([&] {
    need(out, "out");
    *out = wrap(neumaier::build_dihedral(m));
  });
}

void nm_group_free(nm_group* g) { delete g; }

size_t nm_group_order(const nm_group* g) { return g ? g->table->order() : 0; }

int nm_group_is_abelian(const nm_group* g) { return g && g->table->is_abelian() ? 1 : 0; }

nm_status nm_group_resolve(const nm_group* g, const char* word, uint32_t* out) {
  return guarded([&] {
    need(g, "group");
    need(word, "word");
    need(out, "out");
    *out = neumaier::resolve_element(*g->table, word);
  });
}

nm_status nm_group_label(const nm_group* g, uint32_t element, char** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    if (element >= g->table->order()) throw neumaier::Error(neumaier::Errc::invalid_argument, "element out of range");
    *out = dup(g->table->label(element));
  });
}

nm_status nm_set_from_json(const nm_group* g, const char* json, nm_connection_set** out) {
  return guarded([&] {
    need(g, "group");
    need(json, "json");
    need(out, "out");
    *out = wrap_set(g, neumaier::resolve_elements(*g->table, neumaier::set_words_from_text(json)));
  });
}

nm_status nm_set_from_words(const nm_group* g, const char* const* words, size_t count, nm_connection_set** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    if (count) need(words, "words");
    std::vector<std::string> texts;
    for (size_t i = 0; i < count; ++i) {
      need(words[i], "word");
      texts.emplace_back(words[i]);
    }
    *out = wrap_set(g, neumaier::resolve_elements(*g->table, texts));
  });
}

nm_status nm_set_from_indices(const nm_group* g, const uint32_t* elements, size_t count, nm_connection_set** out) {
  return guarded([&] {
    need(g, "group");
    need(out, "out");
    if (count) need(elements, "elements");
    neumaier::ElementSet s(elements, elements + count);
    for (auto x : s)
      if (x >= g->table->order()) throw neumaier::Error(neumaier::Errc::invalid_argument, "element out of range");
    *out = wrap_set(g, neumaier::normalize(std::move(s)));
  });
}

void nm_set_free(nm_connection_set* s) { delete s; }

size_t nm_set_size(const nm_connection_set* s) { return s ? s->set.size() : 0; }

nm_status nm_check(const nm_connection_set* s, int* neumaier_out, char** report_json) {
  return guarded([&] {
    need(s, "set");
    need(report_json, "report_json");
    auto report = neumaier::check_report(s->set);
    if (neumaier_out) *neumaier_out = report["neumaier"].get<bool>() ? 1 : 0;
    *report_json = dump(report);
  });
}

nm_status nm_algebra_report(const nm_connection_set* s, const char* const* clique_words, size_t clique_count,
                            char** report_json) {
  return guarded([&] {
    need(s, "set");
    need(report_json, "report_json");
    std::optional<neumaier::ElementSet> clique;
    if (clique_count) {
      need(clique_words, "clique_words");
      std::vector<std::string> texts;
      for (size_t i = 0; i < clique_count; ++i) {
        need(clique_words[i], "clique word");
        texts.emplace_back(clique_words[i]);
      }
      clique = neumaier::resolve_elements(*s->table, texts);
    }
    *report_json = dump(neumaier::algebra_report(s->set, clique));
  });
}

nm_status nm_vertex_bound(int64_t k, int64_t* out) {
  return guarded([&] {
    need(out, "out");
    *out = neumaier::vertex_bound(k);
  });
}

nm_status nm_feasible(int64_t k, int64_t max_n, char** report_json) {
  return guarded([&] {
    need(report_json, "report_json");
    std::optional<std::int64_t> limit;
    if (max_n > 0) limit = max_n;
    *report_json = dump(neumaier::feasibility_report(k, limit));
  });
}

void nm_search_options_default(nm_search_options* options) {
  if (!options) return;
  options->all = 1;
  options->anchor_clique = 0;
  options->threads = 1;
  options->cap = neumaier::kDefaultSearchCap;
}

nm_status nm_search(const nm_group* g, const nm_params* target, const nm_search_options* options, size_t* found,
                    char** report_json) {
  return guarded([&] {
    need(g, "group");
    need(target, "target");
    need(report_json, "report_json");
    neumaier::NeumaierParameters p{target->n, target->k, target->lambda, target->a, target->c, std::nullopt};
    if (target->has_mu) p.mu = target->mu;
    neumaier::SearchOptions opt;
    if (options) {
      opt.all = options->all != 0;
      opt.anchor_clique = options->anchor_clique != 0;
      opt.threads = options->threads;
      opt.cap = options->cap;
    }
    auto r = neumaier::search_neumaier(*g->table, p, opt);
    if (found) *found = r.sets.size();
    *report_json = dump(neumaier::search_report(*g->table, p, r));
  });
}

nm_status nm_catalog_list(char** report_json) {
  return guarded([&] {
    need(report_json, "report_json");
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : neumaier::catalog_entries()) out.push_back(neumaier::to_json(e));
    *report_json = dump(out);
  });
}

nm_status nm_catalog_verify(const char* name, int* pass, char** report_json) {
  return guarded([&] {
    need(name, "name");
    need(report_json, "report_json");
    auto r = neumaier::verify_entry(std::string(name));
    if (pass) *pass = r.pass ? 1 : 0;
    *report_json = dump(neumaier::to_json(r));
  });
}

nm_status nm_catalog_verify_all(unsigned threads, size_t* failures, char** report_json) {
  return guarded([&] {
    need(report_json, "report_json");
    auto s = neumaier::verify_all(threads);
    if (failures) *failures = s.failed;
    *report_json = dump(neumaier::to_json(s));
  });
}

}  // extern "C"
