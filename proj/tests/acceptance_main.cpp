// Acceptance runner: one PASS/FAIL line per criterion.

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "fmzv/acceptance.hpp"

namespace {

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  status = pclose(pipe);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fmzv::acceptance;
  std::string cli = FMZV_CLI_PATH;
  if (argc > 1) cli = argv[1];
  const Config cfg;
  bool all = true;
  for (const auto& s : suites()) {
    const auto r = run_suite(s, cfg);
    const bool ok = r.pass() && r.within_budget();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.title << "): checks=" << r.checks
              << " failures=" << r.failures << " excluded=" << r.excluded << " time=" << r.seconds << "s limit="
              << r.limit_seconds << "s\n";
    if (!r.pass()) std::cout << "  first counterexample: " << r.first_failure << "\n";
    if (!r.within_budget()) std::cout << "  over the runtime budget\n";
    for (const auto& n : r.notes) std::cout << "  " << n << "\n";
    std::cout.flush();
  }
  // Determinism: two selftest runs with the same configuration.
  const std::string cmd = "'" + cli + "' selftest --format json --seed 20240517 2>/dev/null";
  int st1 = 0, st2 = 0;
  const std::string a = run_capture(cmd, st1);
  const std::string b = run_capture(cmd, st2);
  const bool det = st1 == 0 && st2 == 0 && !a.empty() && a == b;
  all = all && det;
  std::cout << (det ? "PASS" : "FAIL") << " criterion 9 (determinism): selftest twice, " << a.size() << " bytes, "
            << (a == b ? "identical" : "different") << ", exit " << st1 << "/" << st2 << "\n";
  return all ? 0 : 1;
}
