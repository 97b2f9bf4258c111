#include <iostream>
#include <string>
#include <vector>

#include "qpchar/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return qpchar::run_cli(args, std::cout, std::cerr);
}
