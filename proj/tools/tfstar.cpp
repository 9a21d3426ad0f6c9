#include <iostream>

#include "tfstar/cli.hpp"

int main(int argc, char** argv)
{
    return tfstar::run(argc, argv, std::cout, std::cerr);
}
