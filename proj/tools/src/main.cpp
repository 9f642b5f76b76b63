#include <iostream>

#include "vcbsp/bench/bench.hpp"

int main(int argc, char** argv) {
  using namespace vcbsp::bench;
  try {
    BenchConfig config = parse_args(argc, argv);
    std::cout << write_report(run_benchmark(config), config.format);
    return kSuccess;
  } catch (const BenchError& e) {
    (e.exit_code() == kSuccess ? std::cout : std::cerr) << e.what() << '\n';
    return e.exit_code();
  }
}
