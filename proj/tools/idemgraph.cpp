#include "idemgraph/cli.hpp"

int main(int argc, char** argv) { return idemgraph::cli::run(argc, argv); }
