#include <iostream>
#include <string>
#include <vector>

#include <cychom/app.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cychom::app::run(args, std::cout, std::cerr);
}
