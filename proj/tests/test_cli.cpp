// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "matcon/classes.hpp"
#include "matcon/cli.hpp"
#include "matcon/error.hpp"
#include "matcon/io.hpp"

using namespace matcon;
using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = 0;
  std::string out, err;
};

Run call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Parses "{a,b,c}" into a subset of m.
Subset labels_to_subset(const Matroid& m, const std::string& text) {
  Subset s;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || ch == '}') {
      if (!cur.empty()) s = s.with(m.find(cur));
      cur.clear();
    } else if (ch != '{') {
      cur += ch;
    }
  }
  return s;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("kappa on U(2,4)") {
    const Run r = call({"kappa", "--matroid", "u24", "--x", "a", "--y", "c"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["value"] == 1);
    CHECK(j["witness"].size() == 1);
  }

  TEST_CASE("tower") {
    Run r = call({"tower", "2", "2", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 2) == "16");
    r = call({"tower", "2", "5", "4", "4"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["over_guard"] == true);
    CHECK(j["expression"] == "2^(5^256)");
    CHECK(call({"tower", "2", "-1"}).code == 3);
  }

  TEST_CASE("exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"no-such-command"}).code == 2);
    CHECK(call({"kappa", "--matroid", "u24"}).code == 2);
    CHECK(call({"kappa", "--matroid", "u24", "--x", "a", "--y", "zz"}).code == 3);
    CHECK(call({"kappa", "--matroid", "no-such-matroid", "--x", "a", "--y", "b"}).code == 3);
    CHECK(call({"--max-size", "3", "branchwidth", "--matroid", "fano"}).code == 3);
  }

  TEST_CASE("text format") {
    const Run r = call({"--format", "text", "verify", "linked"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lemma") == 0);
    CHECK(r.out.find("instances") != std::string::npos);
  }

  TEST_CASE("verify report fields") {
    const Run r = call({"verify", "linked"});
    REQUIRE(r.code == 0);
    const Json j = Json::parse(r.out);
    for (const char* key : {"lemma", "instances", "passes", "failures", "counterexample", "wall_seconds", "seed"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["instances"] == 50);
    CHECK(j["failures"] == 0);
    CHECK(j["counterexample"].is_null());
  }

  TEST_CASE("classes2 counterexample replays") {
    const Run r = call({"verify", "classes2", "--max-n", "4", "--random", "0"});
    CHECK(r.code == 1);
    const Json j = Json::parse(r.out);
    REQUIRE(j["counterexample"].is_object());
    const Matroid m = parse_matroid(j["counterexample"]["matroid"].get<std::string>());
    const std::string inst = j["counterexample"]["instance"];
    const auto sp = inst.find(" e=");
    REQUIRE(inst.rfind("A=", 0) == 0);
    REQUIRE(sp != std::string::npos);
    const Subset a = labels_to_subset(m, inst.substr(2, sp - 2));
    const int e = m.find(inst.substr(sp + 3));
    REQUIRE(e >= 0);
    CHECK_FALSE(classes2_check(m, a, e).holds);
  }

  TEST_CASE("every lemma id runs at small size") {
    for (const std::string& id : verify_lemma_ids()) {
      if (id == "classes2") continue;
      VerifyOptions opt;
      opt.max_n = 4;
      opt.random_count = 2;
      opt.random_max_n = 5;
      const VerifyReport v = verify(id, opt);
      CHECK_MESSAGE(v.ok(), id);
      CHECK(v.instances > 0);
    }
    CHECK_THROWS_AS(verify("nope", VerifyOptions{}), Error);
  }
}
