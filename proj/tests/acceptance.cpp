#include <cstdio>
#include <optional>
#include <string>

#include "ramlift/acceptance.hpp"
#include "ramlift/corpus.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> only;
  std::string dir = RAMLIFT_FIXTURE_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--fixtures" && i + 1 < argc) dir = argv[++i];
    else only = a;
  }
  try {
    const ramlift::Corpus corpus = ramlift::load_corpus(dir);
    bool all = true;
    for (const auto& r : ramlift::run_acceptance(corpus, only)) {
      std::printf("%-4s %s  %-72s %8.3fs  %s\n", r.id.c_str(), r.pass ? "PASS" : "FAIL", r.title.c_str(), r.seconds,
                  r.detail.c_str());
      std::fflush(stdout);
      all = all && r.pass;
    }
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
