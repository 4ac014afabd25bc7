#include "updraw/cli.hpp"

int main(int argc, char **argv) { return updraw::cli::run(argc, argv); }
