#include "permstat/cli.hpp"

int main(int argc, char** argv) { return permstat::cli::run_main(argc, argv); }
