// Runs the acceptance suite through the C API and prints one line per criterion.
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "hyperharm/hyperharm.h"

int main(int argc, char** argv) {
  bool fast = argc > 1 && std::strcmp(argv[1], "--fast") == 0;
  int pass = 0;
  char* text = nullptr;
  if (hh_verify_all(fast ? 1 : 0, &pass, &text) != HH_OK) {
    std::fprintf(stderr, "verify failed: %s\n", hh_last_error());
    return 2;
  }
  auto report = nlohmann::json::parse(text);
  hh_string_free(text);

  for (const auto& c : report["criteria"]) {
    int id = c["id"].get<int>();
    std::printf("criterion %2d: %s  %s\n", id, c["pass"].get<bool>() ? "PASS" : "FAIL",
                c["title"].get<std::string>().c_str());
    for (const auto& k : report["checks"]) {
      if (!k.contains("criterion") || k["criterion"].get<int>() != id) continue;
      std::string value = k["value"].is_null() ? "error" : std::to_string(k["value"].get<double>());
      std::printf("    [%s] %s: %s (%s %g)%s%s\n", k["pass"].get<bool>() ? "ok" : "FAIL",
                  k["name"].get<std::string>().c_str(), value.c_str(), k["compare"].get<std::string>().c_str(),
                  k["bound"].get<double>(), k.contains("detail") ? "  " : "",
                  k.contains("detail") ? k["detail"].get<std::string>().c_str() : "");
    }
  }
  int extra = 0, extra_fail = 0;
  for (const auto& k : report["checks"]) {
    if (k.contains("criterion")) continue;
    ++extra;
    if (!k["pass"].get<bool>()) {
      ++extra_fail;
      std::printf("module check FAIL: %s\n", k["name"].get<std::string>().c_str());
    }
  }
  std::printf("module checks: %d/%d pass\n", extra - extra_fail, extra);
  std::printf("%zu checks, overall %s\n", static_cast<std::size_t>(report["count"].get<int>()), pass ? "PASS" : "FAIL");
  return pass ? 0 : 1;
}
