#include <iostream>

#include "gon/cli/app.hpp"

int main(int argc, char** argv) { return gon::cli::RunCli(argc, argv, std::cout, std::cerr); }
