#include "monolab/cli.hpp"

int main(int argc, char** argv) { return monolab::run_cli(argc, argv); }
