#include <iostream>
#include <string>
#include <vector>

#include "reflectq/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return reflectq::cli::cli_main(std::move(args), std::cout, std::cerr);
}
