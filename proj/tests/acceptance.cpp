#include <CLI11.hpp>

#include <iostream>

#include "spqg/verify.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance suite"};
  std::vector<int> ids;
  std::string dims = "2,2";
  unsigned threads = 0;
  app.add_option("--criterion", ids, "criterion ids, default all")->check(CLI::Range(1, 9));
  app.add_option("--dims", dims, "relation dims n,n");
  app.add_option("--threads", threads);
  CLI11_PARSE(app, argc, argv);
  if (ids.empty())
    for (int id = 1; id <= 9; ++id) ids.push_back(id);

  spqg::verify::Options opt;
  opt.relation_dims = spqg::Dims::parse(dims);
  opt.threads = threads;
  bool ok = true;
  for (int id : ids) {
    const auto r = spqg::verify::run_criterion(id, opt);
    std::cout << spqg::verify::format_table({r}) << std::flush;
    ok = ok && r.passed;
  }
  return ok ? 0 : 1;
}
