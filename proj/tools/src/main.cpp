#include "commands.hpp"

int main(int argc, char** argv) { return yb::cli::run_command(argc, argv); }
