#include <exception>
#include <iostream>

#include "orthorep/cli.hpp"

int main(int argc, char** argv)
{
    try {
        return orthorep::run({argv + 1, argv + argc}, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "orthorep: internal error: " << e.what() << "\n";
        return 3;
    }
}
