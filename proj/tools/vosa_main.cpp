#include "vosa/cli.hpp"

int main(int argc, char** argv) { return vosa::cli::main(argc, argv); }
