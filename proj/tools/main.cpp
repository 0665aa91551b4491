#include <iostream>
#include <string>
#include <vector>

#include "fdb_cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return fdb::cli::run(args, std::cin, std::cout, std::cerr);
}
