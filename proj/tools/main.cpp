#include "jjarray/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return jjarray::cli::run(argc, argv, std::cout, std::cerr); }
