#include <iostream>

#include "convseq/cli.hpp"

int main(int argc, char** argv) {
    return convseq::cli::run(argc, argv, std::cout, std::cerr);
}
