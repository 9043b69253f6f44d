#include "cli/commands.hpp"

int main(int argc, char** argv) { return capcover::cli::run(argc, argv); }
