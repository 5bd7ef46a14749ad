#include "heightlab/cli.hpp"

int main(int argc, char** argv) { return heightlab::run_cli(argc, argv); }
