#include "helicover_cli.hpp"

#include <iostream>

int main (int argc, char **argv)
{
    return helicover::cli::run (argc, argv, std::cout, std::cerr);
}
