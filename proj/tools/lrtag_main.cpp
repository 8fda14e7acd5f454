#include "lrtag/harness/cli.hpp"

int main(int argc, char** argv) { return lrtag::run_cli(argc, argv); }
