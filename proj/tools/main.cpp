#include "app.hpp"

#include <iostream>

int main(int argc, char** argv) { return ddk::cli::run_cli(argc, argv, std::cout, std::cerr); }
