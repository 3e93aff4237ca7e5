#include <iostream>
#include <string>
#include <vector>

#include "nmt_cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return nmt::cli::dispatch(args, std::cout, std::cerr);
}
