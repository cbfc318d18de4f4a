#include <spqg/spqg.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string message;
};

void check(spqg_status s) {
  if (s != SPQG_OK) throw Failure{spqg_last_error()};
}

struct PartitionFree {
  void operator()(spqg_partition* p) const { spqg_partition_free(p); }
};
struct ClosureFree {
  void operator()(spqg_closure* c) const { spqg_closure_free(c); }
};
using Partition = std::unique_ptr<spqg_partition, PartitionFree>;
using Closure = std::unique_ptr<spqg_closure, ClosureFree>;

std::string take(char* s) {
  std::string out(s ? s : "");
  spqg_string_free(s);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{"IoError: cannot read " + path};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out || !(out << content)) throw Failure{"IoError: cannot write " + path};
}

Partition parse(const std::string& input) {
  spqg_partition* p = nullptr;
  check(spqg_partition_parse(input.c_str(), &p));
  return Partition(p);
}

// A path to a file, or an inline partition (text form, JSON or catalog name).
Partition load(const std::string& arg) {
  std::error_code ec;
  if (fs::is_regular_file(arg, ec)) return parse(slurp(arg));
  return parse(arg);
}

// Partitions from a directory of *.json files, a JSON array, a JSONL file or single partitions.
std::vector<Partition> load_many(const std::vector<std::string>& args) {
  std::vector<Partition> out;
  for (const auto& arg : args) {
    std::error_code ec;
    if (fs::is_directory(arg, ec)) {
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(arg))
        if (e.path().extension() == ".json") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) out.push_back(parse(slurp(f.string())));
      continue;
    }
    if (!fs::is_regular_file(arg, ec)) {
      out.push_back(parse(arg));
      continue;
    }
    const std::string body = slurp(arg);
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && body[first] == '[') {
      for (const auto& item : nlohmann::json::parse(body))
        out.push_back(parse(item.is_string() ? item.get<std::string>() : item.dump()));
    } else if (fs::path(arg).extension() == ".jsonl") {
      std::istringstream lines(body);
      std::string line;
      while (std::getline(lines, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(parse(line));
    } else {
      out.push_back(parse(body));
    }
  }
  return out;
}

std::vector<const spqg_partition*> raw(const std::vector<Partition>& v) {
  std::vector<const spqg_partition*> out;
  for (const auto& p : v) out.push_back(p.get());
  return out;
}

Closure read_closure(const std::string& path) {
  spqg_closure* c = nullptr;
  check(spqg_closure_read(path.c_str(), &c));
  return Closure(c);
}

struct Settings {
  unsigned threads = 0;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

struct BoundsArgs {
  spqg_bounds b{};
  BoundsArgs() { spqg_bounds_default(&b); }
  void add(CLI::App* app) {
    app->add_option("--max-cols", b.max_cols, "column cap")->check(CLI::PositiveNumber);
    app->add_option("--max-set", b.max_set, "member cap")->check(CLI::PositiveNumber);
    app->add_option("--max-rounds", b.max_rounds, "round cap")->check(CLI::PositiveNumber);
    app->add_option("--max-ops", b.max_ops, "binary operation cap, 0 for none");
  }
};

void print_partition(const Settings& s, const spqg_partition* p, const std::string& out_path,
                     const nlohmann::json& extra = nlohmann::json::object()) {
  char* buf = nullptr;
  check(spqg_partition_to_json(p, &buf));
  const auto pj = nlohmann::json::parse(take(buf));
  if (!out_path.empty()) write_file(out_path, pj.dump() + "\n");
  if (s.json()) {
    nlohmann::json j = {{"partition", pj}};
    j.update(extra);
    std::cout << j.dump() << "\n";
    return;
  }
  check(spqg_partition_to_text(p, &buf));
  std::cout << take(buf);
  for (auto it = extra.begin(); it != extra.end(); ++it) std::cout << ", " << it.key() << "=" << it.value().dump();
  std::cout << "\n";
  check(spqg_partition_render(p, &buf));
  std::cout << take(buf);
}

void print_closure_summary(const Settings& s, const spqg_closure* c, const std::string& out) {
  char* buf = nullptr;
  check(spqg_closure_info(c, &buf));
  auto info = nlohmann::json::parse(take(buf));
  info.erase("generators");
  if (!out.empty()) {
    check(spqg_closure_write(c, out.c_str()));
    info["out"] = out;
  }
  if (s.json()) {
    std::cout << info.dump() << "\n";
    return;
  }
  std::cout << "members: " << info["size"] << "\nsaturated: " << (info["saturated"].get<bool>() ? "yes" : "no")
            << "\nstop: " << info["stop_reason"].get<std::string>() << "\nrounds: " << info["rounds"]
            << "\noperations: " << info["ops"] << "\n";
  if (!out.empty()) std::cout << "written: " << out << " (+ .meta.json)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial partitions, their categories, linear maps and relations"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings settings;
  app.add_option("--threads", settings.threads, "worker thread cap (0: all cores)");
  app.add_option("--format", settings.format, "report format")->check(CLI::IsMember({"text", "json"}));

  std::function<void()> action;

  // op
  auto* op = app.add_subcommand("op", "structural operations");
  op->require_subcommand(1);
  std::string a, b, partition, corner, out;
  std::vector<std::string> parts;
  std::uint32_t levels = 2;
  auto add_out = [&](CLI::App* c) { c->add_option("--out", out, "write the resulting partition as JSON"); };
  {
    auto* c = op->add_subcommand("tensor", "place two partitions side by side");
    c->add_option("--left", a)->required();
    c->add_option("--right", b)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        spqg_partition* r = nullptr;
        check(spqg_tensor(load(a).get(), load(b).get(), &r));
        print_partition(settings, Partition(r).get(), out);
      };
    });
  }
  {
    auto* c = op->add_subcommand("compose", "glue the lower row of --upper to the upper row of --lower");
    c->add_option("--upper", a)->required();
    c->add_option("--lower", b)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        spqg_partition* r = nullptr;
        std::uint32_t loops = 0;
        check(spqg_compose(load(a).get(), load(b).get(), &r, &loops));
        print_partition(settings, Partition(r).get(), out, {{"loops", loops}});
      };
    });
  }
  auto unary = [&](const char* name, const char* help, auto fn, bool with_levels, bool with_corner) {
    auto* c = op->add_subcommand(name, help);
    c->add_option("--partition", partition)->required();
    if (with_levels) c->add_option("--m", levels, "level count")->required();
    if (with_corner)
      c->add_option("--corner", corner)
          ->required()
          ->check(CLI::IsMember({"left-upper-down", "left-lower-up", "right-upper-down", "right-lower-up"}));
    add_out(c);
    c->callback([&, fn] {
      action = [&, fn] {
        spqg_partition* r = nullptr;
        check(fn(load(partition).get(), &r));
        print_partition(settings, Partition(r).get(), out);
      };
    });
  };
  unary("involute", "reflect upper and lower rows", [](const spqg_partition* p, spqg_partition** r) { return spqg_involution(p, r); }, false, false);
  unary("rotate", "move a corner column to the other row",
        [&](const spqg_partition* p, spqg_partition** r) { return spqg_rotate(p, corner.c_str(), r); }, false, true);
  unary("amplify", "repeat a one-level partition on m levels",
        [&](const spqg_partition* p, spqg_partition** r) { return spqg_amplify(p, levels, r); }, true, false);
  unary("flatten", "view as a one-level partition", [](const spqg_partition* p, spqg_partition** r) { return spqg_flatten(p, r); }, false, false);
  unary("unflatten", "regroup a one-level partition into m levels",
        [&](const spqg_partition* p, spqg_partition** r) { return spqg_unflatten(p, levels, r); }, true, false);
  {
    auto* c = op->add_subcommand("stack", "stack partitions of equal shape onto consecutive levels");
    c->add_option("--partitions", parts)->required();
    add_out(c);
    c->callback([&] {
      action = [&] {
        auto ps = load_many(parts);
        auto rp = raw(ps);
        spqg_partition* r = nullptr;
        check(spqg_stack(rp.data(), rp.size(), &r));
        print_partition(settings, Partition(r).get(), out);
      };
    });
  }

  // classify
  std::string classes = "all";
  {
    auto* c = app.add_subcommand("classify", "membership in the separating classes");
    c->add_option("--partition", partition)->required();
    c->add_option("--classes", classes, "all, table, or a comma-separated list");
    c->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_classify(load(partition).get(), classes.c_str(), &buf));
        const auto j = nlohmann::ordered_json::parse(take(buf));
        if (settings.json()) {
          std::cout << j.dump() << "\n";
          return;
        }
        std::cout << j["partition"].get<std::string>() << "\n";
        for (auto it = j["classes"].begin(); it != j["classes"].end(); ++it)
          std::cout << "  " << it.key() << ": "
                    << (it.value().is_null() ? "n/a" : it.value().get<bool>() ? "+" : "-") << "\n";
      };
    });
  }

  // closure
  BoundsArgs bounds;
  std::vector<std::string> gens;
  {
    auto* c = app.add_subcommand("closure", "bounded closure of a generator set");
    c->add_option("--gens", gens, "generator files, JSON arrays, or inline partitions");
    c->add_option("--m", levels, "level count")->required()->check(CLI::PositiveNumber);
    bounds.add(c);
    c->add_option("--out", out, "JSONL dump of the members");
    c->callback([&] {
      action = [&] {
        auto gs = load_many(gens);
        auto rg = raw(gs);
        spqg_closure* cl = nullptr;
        check(spqg_closure_generate(rg.data(), rg.size(), levels, &bounds.b, &cl));
        print_closure_summary(settings, Closure(cl).get(), out);
      };
    });
  }

  // member
  std::string closure_path, target;
  {
    auto* c = app.add_subcommand("member", "look up a partition in a closure dump");
    c->add_option("--closure", closure_path)->required();
    c->add_option("--target", target)->required();
    c->add_option("--classes", classes, "classes allowed to separate");
    c->callback([&] {
      action = [&] {
        auto cl = read_closure(closure_path);
        char* buf = nullptr;
        check(spqg_closure_member(cl.get(), load(target).get(), classes.c_str(), &buf));
        const auto j = nlohmann::json::parse(take(buf));
        if (settings.json()) {
          std::cout << j.dump() << "\n";
          return;
        }
        std::cout << j["verdict"].get<std::string>();
        if (j.contains("separator")) std::cout << " " << j["separator"].get<std::string>();
        std::cout << "\n";
        if (j.contains("trace")) {
          std::size_t i = 0;
          for (const auto& step : j["trace"]) {
            std::cout << "#" << i++ << " " << step["op"].get<std::string>();
            if (step.contains("a")) std::cout << " #" << step["a"];
            if (step.contains("b")) std::cout << " #" << step["b"];
            if (step.contains("corner")) std::cout << " " << step["corner"].get<std::string>();
            std::cout << "  " << step["result"].get<std::string>() << "\n";
          }
        }
      };
    });
  }

  // product
  std::vector<std::string> extra;
  {
    auto* c = app.add_subcommand("product", "level-wise product of two closure dumps");
    c->add_option("--left", a)->required();
    c->add_option("--right", b)->required();
    c->add_option("--extra", extra, "additional generators; closes the product with them");
    bounds.add(c);
    c->add_option("--out", out, "JSONL dump of the result");
    c->callback([&] {
      action = [&] {
        auto l = read_closure(a), r = read_closure(b);
        spqg_closure* cl = nullptr;
        if (extra.empty()) {
          check(spqg_kronecker(l.get(), r.get(), &cl));
        } else {
          auto xs = load_many(extra);
          auto rx = raw(xs);
          check(spqg_amalgamated(l.get(), r.get(), rx.data(), rx.size(), &bounds.b, &cl));
        }
        print_closure_summary(settings, Closure(cl).get(), out);
      };
    });
  }

  // smap
  std::string dims;
  {
    auto* c = app.add_subcommand("smap", "the 0/1 linear map of a partition");
    c->add_option("--partition", partition)->required();
    c->add_option("--dims", dims, "n1,...,nm")->required();
    c->add_option("--out", out, "Matrix Market file; stdout if omitted");
    c->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_smap(load(partition).get(), dims.c_str(), &buf));
        const auto mtx = take(buf);
        if (out.empty())
          std::cout << mtx;
        else
          write_file(out, mtx);
      };
    });
  }

  // homdim
  {
    auto* c = app.add_subcommand("homdim", "dimension of the span of the linear maps");
    c->add_option("--partitions", parts, "directory, JSON array, JSONL, or partitions")->required();
    c->add_option("--dims", dims, "n1,...,nm")->required();
    c->callback([&] {
      action = [&] {
        auto ps = load_many(parts);
        auto rp = raw(ps);
        std::size_t d = 0;
        check(spqg_hom_dim(rp.data(), rp.size(), dims.c_str(), &d));
        if (settings.json())
          std::cout << nlohmann::json{{"partitions", rp.size()}, {"dim", d}}.dump() << "\n";
        else
          std::cout << d << "\n";
      };
    });
  }

  // relations
  std::string model;
  bool all_equations = false;
  {
    auto* rel = app.add_subcommand("relations", "relations attached to a partition");
    rel->require_subcommand(1);
    auto* e = rel->add_subcommand("emit", "list the equations");
    e->add_option("--partition", partition)->required();
    e->add_option("--dims", dims, "n1,...,nm")->required();
    e->add_flag("--all", all_equations, "keep equations whose sides are identical");
    e->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_relations_emit(load(partition).get(), dims.c_str(), settings.json(), !all_equations, &buf));
        std::cout << take(buf);
        if (settings.json()) std::cout << "\n";
      };
    });
    auto* k = rel->add_subcommand("check", "evaluate the equations in a matrix model");
    k->add_option("--partition", partition)->required();
    k->add_option("--model", model, "model JSON file")->required();
    k->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_relations_check(load(partition).get(), slurp(model).c_str(), &buf));
        const auto j = nlohmann::json::parse(take(buf));
        if (settings.json()) {
          std::cout << j.dump() << "\n";
        } else {
          std::cout << (j["holds"].get<bool>() ? "holds" : "fails") << " (" << j["equations"] << " equations, "
                    << j["failures"] << " failing)";
          if (j.contains("first_failure")) std::cout << "\nfirst failure: " << j["first_failure"].get<std::string>();
          std::cout << "\n";
        }
      };
    });
    auto* r = rel->add_subcommand("ring", "the n x n matrix built from a two-level model");
    r->add_option("--model", model, "model JSON file")->required();
    r->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_ring(slurp(model).c_str(), &buf));
        std::cout << nlohmann::json::parse(take(buf)).dump(settings.json() ? -1 : 2) << "\n";
      };
    });
  }

  // acceptance suite
  std::string criteria;
  bool verify_failed = false;
  {
    auto* c = app.add_subcommand("verify-paper", "run the acceptance suite");
    c->add_option("--dims", dims, "dims n,n for the relation-list check");
    c->add_option("--criteria", criteria, "comma-separated ids, default all");
    c->callback([&] {
      action = [&] {
        char* buf = nullptr;
        int ok = 0;
        check(spqg_verify_suite(dims.empty() ? nullptr : dims.c_str(), criteria.c_str(), settings.json(), &buf, &ok));
        std::cout << take(buf);
        verify_failed = !ok;
      };
    });
  }

  // catalog
  {
    auto* c = app.add_subcommand("catalog", "list named partitions");
    c->callback([&] {
      action = [&] {
        char* buf = nullptr;
        check(spqg_catalog_names(&buf));
        std::cout << take(buf);
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  spqg_set_threads(settings.threads);
  try {
    if (action) action();
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return verify_failed ? 1 : 0;
}
