#include <iostream>

#include "swapengine/simcli.hpp"

int main(int argc, char** argv) { return swapengine::cli::run(argc, argv, std::cout, std::cerr); }
