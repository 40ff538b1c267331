#include "cli.hpp"

int main(int argc, char** argv) { return rvor::cli::run_cli(argc, argv); }
