#include "ringloc/cli.hpp"

int main(int argc, char** argv) { return ringloc::run_command(argc, argv); }
