#include <unistd.h>

#include <exception>
#include <iostream>

#include "cyp/cli.hpp"

int main(int argc, char** argv) {
    try {
        return cyp::run(argc, argv, std::cout, std::cerr, isatty(STDOUT_FILENO) != 0);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (...) {
        std::cerr << "internal error\n";
        return 2;
    }
}
