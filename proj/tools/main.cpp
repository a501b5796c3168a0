#include <iostream>

#include "toricsec/cli.hpp"

int main(int argc, char** argv)
{
    return toricsec::run(argc, argv, std::cout, std::cerr);
}
