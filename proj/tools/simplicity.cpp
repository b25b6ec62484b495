#include <iostream>

#include "simplicity/cli/commands.hpp"

int main(int argc, char** argv) {
    return simplicity::cli::main_entry(argc, argv, std::cout, std::cerr);
}
