#include "commands.hpp"

int main(int argc, char** argv) { return taxicab::cli::run_cli(argc, argv); }
