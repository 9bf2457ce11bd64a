#include <cstring>
#include <iostream>

#include "rootspace/acceptance.hpp"

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  int failed = 0;
  for (int id : rootspace::criterion_ids()) {
    const auto r = rootspace::run_criterion(id, quick);
    std::cout << rootspace::format_line(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria passed")) << "\n";
  return failed ? 1 : 0;
}
