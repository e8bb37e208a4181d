#include <iostream>

#include "zorbit/cli.hpp"

int main(int argc, char** argv) { return zorbit::dispatch(argc, argv, std::cout, std::cerr); }
