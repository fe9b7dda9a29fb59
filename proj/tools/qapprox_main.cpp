#include "qapprox/cli.hpp"

int main(int argc, char** argv) { return qapprox::cli::main_entry(argc, argv); }
