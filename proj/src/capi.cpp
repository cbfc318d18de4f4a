#include "spqg/spqg.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "spqg/catalog.hpp"
#include "spqg/closure.hpp"
#include "spqg/closure_io.hpp"
#include "spqg/grading.hpp"
#include "spqg/io.hpp"
#include "spqg/relations.hpp"
#include "spqg/tensor_maps.hpp"
#include "spqg/verify.hpp"

struct spqg_partition {
  spqg::SpatialPartition value;
};

struct spqg_closure {
  spqg::ClosureSet value;
};

namespace {

thread_local std::string last_error;
unsigned thread_cap = 0;

struct InvalidArgument {
  const char* what;
};

template <class F>
spqg_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return SPQG_OK;
  } catch (const spqg::Error& e) {
    last_error = e.what();
    return static_cast<spqg_status>(static_cast<int>(e.code()));
  } catch (const InvalidArgument& e) {
    last_error = std::string("InvalidArgument: ") + e.what;
    return SPQG_ERR_INVALID_ARGUMENT;
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    return SPQG_ERR_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "InternalError: out of memory";
    return SPQG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("InternalError: ") + e.what();
    return SPQG_ERR_INTERNAL;
  }
}

template <class T>
void need(const T* p, const char* what) {
  if (!p) throw InvalidArgument{what};
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const std::string& s) {
  need(out, "output pointer is NULL");
  *out = dup(s);
}

void emit(spqg_partition** out, spqg::SpatialPartition p) {
  need(out, "output pointer is NULL");
  *out = new spqg_partition{std::move(p)};
}

void emit(spqg_closure** out, spqg::ClosureSet c) {
  need(out, "output pointer is NULL");
  *out = new spqg_closure{std::move(c)};
}

const spqg::SpatialPartition& get(const spqg_partition* p) {
  need(p, "partition is NULL");
  return p->value;
}

const spqg::ClosureSet& get(const spqg_closure* c) {
  need(c, "closure is NULL");
  return c->value;
}

std::vector<spqg::SpatialPartition> collect(const spqg_partition* const* parts, size_t count) {
  if (count) need(parts, "partition array is NULL");
  std::vector<spqg::SpatialPartition> out;
  for (size_t i = 0; i < count; ++i) out.push_back(get(parts[i]));
  return out;
}

spqg::Bounds to_bounds(const spqg_bounds* b) {
  spqg::Bounds out;
  if (b) {
    out.max_cols = b->max_cols;
    out.max_set = b->max_set;
    out.max_rounds = b->max_rounds;
    out.max_ops = b->max_ops;
  }
  out.threads = thread_cap;
  return out;
}

std::vector<spqg::SeparatingClass> parse_classes(const char* spec) {
  const std::string s = spec ? spec : "all";
  if (s == "all") return spqg::all_classes();
  if (s == "table") return spqg::table_classes();
  std::vector<spqg::SeparatingClass> out;
  std::string item;
  int depth = 0;
  for (char c : s + ",") {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      if (!item.empty()) out.push_back(spqg::parse_class(item));
      item.clear();
    } else if (c != ' ') {
      item += c;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw spqg::Error(spqg::ErrorCode::Io, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

extern "C" {

const char* spqg_last_error(void) { return last_error.c_str(); }

const char* spqg_status_name(spqg_status status) {
  if (status == SPQG_OK) return "OK";
  if (status == SPQG_ERR_INVALID_ARGUMENT) return "InvalidArgument";
  return spqg::error_code_name(static_cast<spqg::ErrorCode>(status));
}

void spqg_string_free(char* s) { std::free(s); }

void spqg_set_threads(unsigned threads) { thread_cap = threads; }
void spqg_set_max_cells(uint64_t cells) { spqg::set_max_cells(cells); }

spqg_status spqg_partition_parse(const char* input, spqg_partition** out) {
  return guard([&] {
    need(input, "input is NULL");
    emit(out, spqg::parse_partition(input));
  });
}

void spqg_partition_free(spqg_partition* p) { delete p; }

void spqg_partition_shape(const spqg_partition* p, uint32_t* k, uint32_t* l, uint32_t* m) {
  if (!p) return;
  if (k) *k = p->value.k();
  if (l) *l = p->value.l();
  if (m) *m = p->value.m();
}

int spqg_partition_equal(const spqg_partition* a, const spqg_partition* b) {
  return a && b && a->value == b->value;
}

spqg_status spqg_partition_to_json(const spqg_partition* p, char** out) {
  return guard([&] { emit(out, spqg::to_json(get(p)).dump()); });
}

spqg_status spqg_partition_to_text(const spqg_partition* p, char** out) {
  return guard([&] { emit(out, spqg::to_text(get(p))); });
}

spqg_status spqg_partition_render(const spqg_partition* p, char** out) {
  return guard([&] { emit(out, spqg::render_ascii(get(p))); });
}

spqg_status spqg_catalog_names(char** out) {
  return guard([&] {
    std::string s;
    for (const auto& n : spqg::catalog::catalog_names()) s += n + "\n";
    emit(out, s);
  });
}

spqg_status spqg_tensor(const spqg_partition* a, const spqg_partition* b, spqg_partition** out) {
  return guard([&] { emit(out, spqg::tensor(get(a), get(b))); });
}

spqg_status spqg_compose(const spqg_partition* upper, const spqg_partition* lower, spqg_partition** out,
                         uint32_t* loops) {
  return guard([&] {
    auto r = spqg::compose(get(upper), get(lower));
    emit(out, std::move(r.partition));
    if (loops) *loops = r.loops;
  });
}

spqg_status spqg_involution(const spqg_partition* p, spqg_partition** out) {
  return guard([&] { emit(out, spqg::involution(get(p))); });
}

spqg_status spqg_rotate(const spqg_partition* p, const char* corner, spqg_partition** out) {
  return guard([&] {
    need(corner, "corner is NULL");
    emit(out, spqg::rotate(get(p), spqg::parse_corner(corner)));
  });
}

spqg_status spqg_amplify(const spqg_partition* p, uint32_t m, spqg_partition** out) {
  return guard([&] { emit(out, spqg::amplify(get(p), m)); });
}

spqg_status spqg_stack(const spqg_partition* const* parts, size_t count, spqg_partition** out) {
  return guard([&] { emit(out, spqg::stack(collect(parts, count))); });
}

spqg_status spqg_flatten(const spqg_partition* p, spqg_partition** out) {
  return guard([&] { emit(out, spqg::flatten(get(p))); });
}

spqg_status spqg_unflatten(const spqg_partition* p, uint32_t m, spqg_partition** out) {
  return guard([&] { emit(out, spqg::unflatten(get(p), m)); });
}

spqg_status spqg_classify(const spqg_partition* p, const char* classes, char** json_out) {
  return guard([&] {
    const auto& part = get(p);
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (const auto& c : parse_classes(classes)) {
      const auto v = spqg::try_class_membership(part, c);
      row[c.name()] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
    }
    nlohmann::ordered_json j = {{"partition", spqg::to_text(part)}, {"classes", row}};
    emit(json_out, j.dump());
  });
}

void spqg_bounds_default(spqg_bounds* b) {
  if (!b) return;
  const spqg::Bounds d;
  b->max_cols = d.max_cols;
  b->max_set = d.max_set;
  b->max_rounds = d.max_rounds;
  b->max_ops = d.max_ops;
}

spqg_status spqg_closure_generate(const spqg_partition* const* gens, size_t count, uint32_t m,
                                  const spqg_bounds* bounds, spqg_closure** out) {
  return guard([&] { emit(out, spqg::generate_closure(collect(gens, count), m, to_bounds(bounds))); });
}

void spqg_closure_free(spqg_closure* c) { delete c; }

size_t spqg_closure_size(const spqg_closure* c) { return c ? c->value.size() : 0; }

int spqg_closure_saturated(const spqg_closure* c) { return c && c->value.saturated(); }

spqg_status spqg_closure_member_at(const spqg_closure* c, size_t i, spqg_partition** out) {
  return guard([&] {
    const auto& cs = get(c);
    if (i >= cs.size()) throw spqg::Error(spqg::ErrorCode::Range, "member index out of range");
    emit(out, cs.members()[i]);
  });
}

spqg_status spqg_closure_info(const spqg_closure* c, char** json_out) {
  return guard([&] { emit(json_out, spqg::closure_meta(get(c)).dump()); });
}

spqg_status spqg_closure_write(const spqg_closure* c, const char* path) {
  return guard([&] {
    need(path, "path is NULL");
    const auto& cs = get(c);
    std::ofstream out(path);
    std::ofstream meta(std::string(path) + ".meta.json");
    if (!out || !meta) throw spqg::Error(spqg::ErrorCode::Io, std::string("cannot write ") + path);
    spqg::write_closure_jsonl(cs, out);
    meta << spqg::closure_meta(cs).dump(2) << "\n";
    if (!out || !meta) throw spqg::Error(spqg::ErrorCode::Io, std::string("write failed for ") + path);
  });
}

spqg_status spqg_closure_read(const char* path, spqg_closure** out) {
  return guard([&] {
    need(path, "path is NULL");
    const auto meta = nlohmann::json::parse(read_file(std::string(path) + ".meta.json"));
    std::ifstream in(path);
    if (!in) throw spqg::Error(spqg::ErrorCode::Io, std::string("cannot read ") + path);
    emit(out, spqg::read_closure(in, meta));
  });
}

spqg_status spqg_closure_member(const spqg_closure* c, const spqg_partition* target, const char* classes,
                                char** json_out) {
  return guard([&] {
    const auto answer = spqg::contains(get(c), get(target), parse_classes(classes));
    emit(json_out, spqg::membership_to_json(answer).dump());
  });
}

spqg_status spqg_kronecker(const spqg_closure* a, const spqg_closure* b, spqg_closure** out) {
  return guard([&] { emit(out, spqg::kronecker_product(get(a), get(b))); });
}

spqg_status spqg_amalgamated(const spqg_closure* a, const spqg_closure* b, const spqg_partition* const* extra,
                             size_t count, const spqg_bounds* bounds, spqg_closure** out) {
  return guard([&] {
    emit(out, spqg::amalgamated_closure(get(a), get(b), collect(extra, count), to_bounds(bounds)));
  });
}

spqg_status spqg_smap(const spqg_partition* p, const char* dims, char** matrix_market) {
  return guard([&] {
    need(dims, "dims is NULL");
    emit(matrix_market, spqg::s_map(get(p), spqg::Dims::parse(dims)).to_matrix_market());
  });
}

spqg_status spqg_hom_dim(const spqg_partition* const* parts, size_t count, const char* dims, size_t* out) {
  return guard([&] {
    need(dims, "dims is NULL");
    need(out, "output pointer is NULL");
    *out = spqg::hom_dim(collect(parts, count), spqg::Dims::parse(dims));
  });
}

spqg_status spqg_relations_emit(const spqg_partition* p, const char* dims, int as_json, int skip_tautologies,
                                char** out) {
  return guard([&] {
    need(dims, "dims is NULL");
    const auto r = spqg::emit_relations(get(p), spqg::Dims::parse(dims));
    emit(out, as_json ? spqg::relations_to_json(r).dump() : spqg::format_relations(r, skip_tautologies != 0));
  });
}

spqg_status spqg_relations_check(const spqg_partition* p, const char* model_json, char** json_out) {
  return guard([&] {
    need(model_json, "model is NULL");
    const auto model = spqg::MatrixModel::from_json(nlohmann::json::parse(model_json));
    const auto r = spqg::check_relation(get(p), model);
    nlohmann::ordered_json j = {{"partition", spqg::to_text(get(p))},
                                {"holds", r.holds},
                                {"equations", r.equations},
                                {"failures", r.failures}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    emit(json_out, j.dump());
  });
}

spqg_status spqg_ring(const char* model_json, char** json_out) {
  return guard([&] {
    need(model_json, "model is NULL");
    const auto model = spqg::MatrixModel::from_json(nlohmann::json::parse(model_json));
    emit(json_out, spqg::ring_report_to_json(spqg::ring_matrix(model)).dump());
  });
}

spqg_status spqg_verify_suite(const char* dims, const char* criteria, int as_json, char** report, int* all_passed) {
  return guard([&] {
    spqg::verify::Options opt;
    if (dims) opt.relation_dims = spqg::Dims::parse(dims);
    opt.threads = thread_cap;
    std::vector<int> ids;
    if (criteria && *criteria) {
      std::stringstream s(criteria);
      std::string item;
      while (std::getline(s, item, ',')) {
        char* end = nullptr;
        const long id = std::strtol(item.c_str(), &end, 10);
        if (item.empty() || *end || id < 1 || id > 9)
          throw spqg::Error(spqg::ErrorCode::Range, "criterion ids must be in 1..9");
        ids.push_back(int(id));
      }
    } else {
      for (int id = 1; id <= 9; ++id) ids.push_back(id);
    }
    std::vector<spqg::verify::CriterionResult> results;
    bool ok = true;
    for (int id : ids) {
      results.push_back(spqg::verify::run_criterion(id, opt));
      ok = ok && results.back().passed;
    }
    if (all_passed) *all_passed = ok;
    if (as_json) {
      nlohmann::ordered_json j = nlohmann::ordered_json::array();
      for (const auto& r : results)
        j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
      emit(report, j.dump(2) + "\n");
    } else {
      emit(report, spqg::verify::format_table(results));
    }
  });
}

}  // extern "C"
