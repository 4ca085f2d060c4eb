#include <iostream>

#include "paradot/cli.hpp"

int main(int argc, char** argv)
{
    return paradot::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
