#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    gaussq::cli::CliRequest req;
    if (auto code = gaussq::cli::parse(argc, argv, req, std::cout, std::cerr)) return *code;
    return gaussq::cli::run(req, std::cout, std::cerr);
}
