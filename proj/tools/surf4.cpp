#include <iostream>

#include "surf4/cli.hpp"

int main(int argc, char** argv)
{
    return surf4::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
