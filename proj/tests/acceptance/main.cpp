#include <cstdio>
#include <cstring>

#include "acceptance.hpp"
#include "rovib/errors.hpp"

int main(int argc, char** argv) {
  rovib::tools::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--skip-oracle") == 0) opts.skip_oracle = true;
  }
  try {
    const auto report =
        rovib::tools::run_acceptance(rovib::Registry::builtin(), opts);
    for (const auto& r : report.results) {
      std::printf("%s\n", rovib::tools::format_line(r).c_str());
    }
    std::printf("%s: %zu criteria in %.2f s\n",
                report.pass() ? "ALL PASS" : "FAILURES", report.results.size(),
                report.seconds);
    return report.pass() ? 0 : 1;
  } catch (const rovib::Error& e) {
    std::fprintf(stderr, "acceptance suite aborted: %s\n", e.what());
    return 2;
  }
}
