#include "cli.hpp"

int main(int argc, char** argv) { return mahler::cli::run(argc, argv); }
