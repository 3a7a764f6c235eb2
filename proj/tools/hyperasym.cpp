#include "hyperasym/cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return hyperasym::run_cli(argc, argv, std::cout, std::cerr);
}
