#include "simpade/cli.hpp"

int main(int argc, char** argv) { return simpade::cli::run(argc, argv); }
