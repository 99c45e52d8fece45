#include <iostream>
#include <string>
#include <vector>

#include "grhc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grhc::dispatch(args, std::cout, std::cerr);
}
