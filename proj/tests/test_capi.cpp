#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>
#include <string>

#include "pig/pig.h"

namespace {

const char* kK4 = "4 6\n1: 2 4 3\n2: 1 3 4\n3: 1 4 2\n4: 1 2 3\n";

std::string take(char* s) {
  std::string out = s ? s : "";
  pig_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("graph handles") {
  pig_graph* g = nullptr;
  REQUIRE(pig_graph_parse(kK4, &g) == PIG_OK);
  CHECK(pig_graph_vertex_count(g) == 4);
  CHECK(pig_graph_edge_count(g) == 6);
  char* text = nullptr;
  REQUIRE(pig_graph_serialize(g, &text) == PIG_OK);
  pig_graph* h = nullptr;
  REQUIRE(pig_graph_parse(text, &h) == PIG_OK);
  pig_string_free(text);
  char *a = nullptr, *b = nullptr;
  REQUIRE(pig_graph_hash(g, &a) == PIG_OK);
  REQUIRE(pig_graph_hash(h, &b) == PIG_OK);
  CHECK(take(a) == take(b));
  pig_graph_free(g);
  pig_graph_free(h);
  pig_graph_free(nullptr);
}

TEST_CASE("error codes") {
  pig_graph* g = nullptr;
  CHECK(pig_graph_parse("3 1\n1: 2\n2: 3\n3:\n", &g) == PIG_ERR_PARSE);
  CHECK(std::strlen(pig_last_error()) > 0);
  CHECK(g == nullptr);
  CHECK(pig_graph_parse(nullptr, &g) == PIG_ERR_ARGUMENT);
  CHECK(pig_graph_load("/nonexistent/graph.rot", &g) == PIG_ERR_IO);
  REQUIRE(pig_graph_parse(kK4, &g) == PIG_OK);
  char* out = nullptr;
  CHECK(pig_extract(g, "5/4", 0, &out, nullptr) == PIG_ERR_ARGUMENT);
  CHECK(pig_discharge(g, "other", &out) == PIG_ERR_ARGUMENT);
  int ok = 0;
  CHECK(pig_check_certificate(g, "not json", 0, &ok, nullptr, nullptr) == PIG_ERR_PARSE);
  CHECK(pig_last_diagnostic_graph() == nullptr);
  CHECK(std::string(pig_status_name(PIG_ERR_INCOMPLETE)) == "incompleteness diagnostic");
  pig_graph_free(g);
}

TEST_CASE("extract and check through the C surface") {
  pig_graph* g = nullptr;
  REQUIRE(pig_graph_generate(5, 250, 1, 0, &g) == PIG_OK);
  char* cert = nullptr;
  pig_extract_info info{};
  REQUIRE(pig_extract(g, "3/13", 0, &cert, &info) == PIG_OK);
  CHECK(info.n == 250);
  CHECK(info.bound == 58);
  CHECK(info.size >= info.bound);
  std::string text = take(cert);
  int ok = 0, failed = 7;
  char* msg = nullptr;
  REQUIRE(pig_check_certificate(g, text.c_str(), 0, &ok, &failed, &msg) == PIG_OK);
  CHECK(ok == 1);
  CHECK(failed == -1);
  CHECK(take(msg) == "ok");

  pig_graph* other = nullptr;
  REQUIRE(pig_graph_generate(6, 250, 1, 0, &other) == PIG_OK);
  REQUIRE(pig_check_certificate(other, text.c_str(), 0, &ok, &failed, &msg) == PIG_OK);
  CHECK(ok == 0);
  CHECK(take(msg) == "graph hash mismatch");
  pig_graph_free(other);

  char* again = nullptr;
  REQUIRE(pig_extract(g, "3/13", 0, &again, nullptr) == PIG_OK);
  CHECK(take(again) == text);
  pig_graph_free(g);
}

TEST_CASE("json reports") {
  pig_graph* g = nullptr;
  REQUIRE(pig_graph_generate(2, 40, 0, 0, &g) == PIG_OK);
  char* out = nullptr;
  REQUIRE(pig_discharge(g, "main", &out) == PIG_OK);
  CHECK(take(out).find("\"ledger\"") != std::string::npos);
  REQUIRE(pig_configs(g, &out) == PIG_OK);
  CHECK(take(out).find("\"matches\"") != std::string::npos);
  REQUIRE(pig_reduce_step(g, nullptr, 0, &out) == PIG_OK);
  CHECK(take(out).find("\"step\"") != std::string::npos);
  int a = 0;
  REQUIRE(pig_alpha(g, 0, &a, &out) == PIG_OK);
  CHECK(a >= 10);
  pig_string_free(out);
  pig_graph_free(g);

  pig_corpus_info info{};
  REQUIRE(pig_corpus(60, 4, 1, 0, 0, "1/5", 0, 1, &out, &info) == PIG_OK);
  CHECK(info.count == 4);
  CHECK(info.successes == 4);
  CHECK(info.diagnostics == 0);
  pig_string_free(out);
}
