#include <iostream>
#include <string>
#include <vector>

#include "smp/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return smp::cli::run(args, std::cout, std::cerr);
}
