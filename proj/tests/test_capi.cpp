#include <spqg/spqg.h>

#include <cstdio>
#include <cstring>
#include <string>

#include <doctest.h>

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  spqg_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("parse, compose and print") {
    spqg_partition *up = nullptr, *lo = nullptr, *r = nullptr;
    REQUIRE(spqg_partition_parse("pair", &up) == SPQG_OK);
    REQUIRE(spqg_partition_parse("P(2,0;1){u1.1,u2.1}", &lo) == SPQG_OK);
    std::uint32_t loops = 9;
    REQUIRE(spqg_compose(up, lo, &r, &loops) == SPQG_OK);
    CHECK(loops == 1);
    char* text = nullptr;
    REQUIRE(spqg_partition_to_text(r, &text) == SPQG_OK);
    CHECK(take(text) == "P(0,0;1){}");
    std::uint32_t k = 9, l = 9, m = 9;
    spqg_partition_shape(up, &k, &l, &m);
    CHECK((k == 0 && l == 2 && m == 1));
    spqg_partition_free(up);
    spqg_partition_free(lo);
    spqg_partition_free(r);
  }

  TEST_CASE("errors carry codes and messages") {
    spqg_partition* p = nullptr;
    CHECK(spqg_partition_parse("P(1,1;1){u1.1}", &p) == SPQG_ERR_COVERAGE);
    CHECK(p == nullptr);
    CHECK(std::string(spqg_last_error()).find("CoverageError") == 0);
    CHECK(spqg_partition_parse(nullptr, &p) == SPQG_ERR_INVALID_ARGUMENT);
    CHECK(std::string(spqg_status_name(SPQG_ERR_PARSE)) == "ParseError");
    spqg_partition *a = nullptr, *b = nullptr, *c = nullptr;
    REQUIRE(spqg_partition_parse("identity", &a) == SPQG_OK);
    REQUIRE(spqg_partition_parse("identity_both_levels", &b) == SPQG_OK);
    CHECK(spqg_tensor(a, b, &c) == SPQG_ERR_LEVEL_MISMATCH);
    CHECK(spqg_rotate(a, "sideways", &c) == SPQG_ERR_PARSE);
    CHECK(spqg_smap(b, "2,3", nullptr) == SPQG_ERR_INVALID_ARGUMENT);
    spqg_partition_free(a);
    spqg_partition_free(b);
  }

  TEST_CASE("closure write, read and member") {
    spqg_partition* cross = nullptr;
    REQUIRE(spqg_partition_parse("cross", &cross) == SPQG_OK);
    spqg_bounds b;
    spqg_bounds_default(&b);
    b.max_cols = 6;
    spqg_closure* cl = nullptr;
    const spqg_partition* gens[] = {cross};
    REQUIRE(spqg_closure_generate(gens, 1, 1, &b, &cl) == SPQG_OK);
    CHECK(spqg_closure_saturated(cl));
    const std::string path = "capi_test_closure.jsonl";
    REQUIRE(spqg_closure_write(cl, path.c_str()) == SPQG_OK);
    spqg_closure* back = nullptr;
    REQUIRE(spqg_closure_read(path.c_str(), &back) == SPQG_OK);
    CHECK(spqg_closure_size(back) == spqg_closure_size(cl));
    spqg_partition* target = nullptr;
    REQUIRE(spqg_partition_parse("halflib", &target) == SPQG_OK);
    char* answer = nullptr;
    REQUIRE(spqg_closure_member(back, target, "all", &answer) == SPQG_OK);
    CHECK(take(answer).find("\"verdict\":\"Member\"") != std::string::npos);
    spqg_partition* first = nullptr;
    REQUIRE(spqg_closure_member_at(back, 0, &first) == SPQG_OK);
    CHECK(spqg_partition_equal(first, cross));
    CHECK(spqg_closure_member_at(back, 1u << 30, &first) == SPQG_ERR_RANGE);
    CHECK(spqg_closure_read("no/such/file.jsonl", &back) == SPQG_ERR_IO);
    std::remove(path.c_str());
    std::remove((path + ".meta.json").c_str());
    spqg_partition_free(first);
    spqg_partition_free(target);
    spqg_partition_free(cross);
    spqg_closure_free(back);
    spqg_closure_free(cl);
  }

  TEST_CASE("maps, dimensions and relations") {
    spqg_partition* p = nullptr;
    REQUIRE(spqg_partition_parse("level_swap", &p) == SPQG_OK);
    char* mtx = nullptr;
    REQUIRE(spqg_smap(p, "2,2", &mtx) == SPQG_OK);
    CHECK(take(mtx).rfind("%%MatrixMarket matrix coordinate integer general\n4 4 4\n", 0) == 0);
    std::size_t dim = 0;
    const spqg_partition* parts[] = {p};
    REQUIRE(spqg_hom_dim(parts, 1, "2,2", &dim) == SPQG_OK);
    CHECK(dim == 1);
    const char* model = R"({"dims":[2,2],"rep_dim":1,"entries":{
      "1,1|1,1":1,"1,1|1,2":0,"1,1|2,1":0,"1,1|2,2":0,
      "1,2|1,1":0,"1,2|1,2":1,"1,2|2,1":0,"1,2|2,2":0,
      "2,1|1,1":0,"2,1|1,2":0,"2,1|2,1":1,"2,1|2,2":0,
      "2,2|1,1":0,"2,2|1,2":0,"2,2|2,1":0,"2,2|2,2":1}})";
    char* out = nullptr;
    REQUIRE(spqg_relations_check(p, model, &out) == SPQG_OK);
    CHECK(take(out).find("\"holds\":true") != std::string::npos);
    REQUIRE(spqg_ring(model, &out) == SPQG_OK);
    CHECK(take(out).find("\"orthogonal\":true") != std::string::npos);
    REQUIRE(spqg_relations_emit(p, "2,2", 0, 1, &out) == SPQG_OK);
    CHECK(take(out).find("u(1,2|1,1) = u(2,1|1,1)") != std::string::npos);
    REQUIRE(spqg_classify(p, "table", &out) == SPQG_OK);
    CHECK(take(out) ==
          R"({"partition":"P(1,1;2){u1.1,l1.2|u1.2,l1.1}","classes":{"RespLevels":false,"Symm":true,"NoDiagSymm":false,"NoGeoSymm":true,"EvenCols":true}})");
    spqg_partition_free(p);
  }
}
